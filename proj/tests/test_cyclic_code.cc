// Copyright 2026 The eaqmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "eaqmds/cyclic_code.h"
#include "eaqmds/errors.h"
#include "eaqmds/families.h"
#include "eaqmds/rank_oracle.h"

using namespace eaqmds;

namespace {

// Evaluates a GF(q^2) polynomial at a point of the tower.
FieldElement eval_in_tower(const Polynomial &p, const FieldElement &x) {
    FieldElement acc = FieldElement::zero(x.field());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + embed(x.field(), FieldElement(p.field(), *it));
    }
    return acc;
}

MatrixGF stack(const MatrixGF &m, const std::vector<Code> &extra) {
    std::vector<Code> e = m.entries();
    e.insert(e.end(), extra.begin(), extra.end());
    return MatrixGF(m.field(), m.rows() + 1, m.cols(), e);
}

}  // namespace

TEST(polynomial, division_identity) {
    auto f = construct_field(5, 2);
    Polynomial a(f, {3, 7, 0, 11, 1, 24});
    Polynomial b(f, {2, 9, 1});
    auto [quo, rem] = a.divmod(b);
    EXPECT_EQ(quo * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
    EXPECT_THROW(a.divmod(Polynomial(f)), std::domain_error);
    EXPECT_EQ(Polynomial(f).degree(), -1);
}

TEST(polynomial, gcd_and_reciprocal) {
    auto f = construct_field(7, 1);
    Polynomial x1(f, {6, 1});  // x - 1
    Polynomial x2(f, {5, 1});  // x - 2
    Polynomial x3(f, {4, 1});  // x - 3
    EXPECT_EQ(gcd(x1 * x2, x2 * x3), x2);
    EXPECT_EQ(Polynomial(f, {1, 2, 3}).reciprocal(), Polynomial(f, {3, 2, 1}));
    EXPECT_EQ(powmod(Polynomial(f, {0, 1}), 7, Polynomial(f, {6, 0, 1})), Polynomial(f, {0, 1}));
}

TEST(minimal_polynomials, product_is_x_n_minus_one) {
    for (auto [q, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{13, 85}, {11, 61}}) {
        CodeTower t = make_code_tower(q, n);
        Polynomial prod = Polynomial::constant(t.gf_q2, 1);
        for (const Coset &c : all_cosets(n, q * q)) {
            Polynomial mp = minimal_polynomial(t.lambda, c);
            EXPECT_TRUE(mp.is_monic());
            EXPECT_EQ(mp.degree(), static_cast<long>(c.members.size()));
            prod = prod * mp;
        }
        EXPECT_EQ(prod, Polynomial::x_pow_minus_one(t.gf_q2, n)) << "n=" << n;
    }
}

TEST(minimal_polynomials, roots_are_the_coset_powers) {
    CodeTower t = make_code_tower(13, 85);
    for (const Coset &c : all_cosets(85, 169)) {
        Polynomial mp = minimal_polynomial(t.lambda, c);
        for (Residue j = 0; j < 85; ++j) {
            const bool member = std::find(c.members.begin(), c.members.end(), j) != c.members.end();
            FieldElement kappa = t.lambda.pow(static_cast<std::uint64_t>(j));
            ASSERT_EQ(eval_in_tower(mp, kappa).is_zero(), member) << "coset " << c.rep << " j=" << j;
            if (member) ASSERT_EQ(kappa.pow(169), t.lambda.pow(static_cast<std::uint64_t>((j * 169) % 85)));
        }
    }
}

TEST(code_matrices, first_family_q13_shapes) {
    auto sp = make_family_spec(Family::I, 1, 3, 1);
    CodeTower t = make_code_tower(sp.q, sp.n);
    auto z = build_defining_set(sp).defining_set;
    Polynomial g = generator_polynomial(t.lambda, z);
    EXPECT_EQ(g.degree(), 32);
    Polynomial h = check_polynomial(g, 85);
    EXPECT_EQ(h.degree(), 53);
    EXPECT_EQ(g * h, Polynomial::x_pow_minus_one(t.gf_q2, 85));
    MatrixGF G = generator_matrix(g, 85);
    MatrixGF H = parity_check_matrix(g, 85);
    EXPECT_EQ(G.rows(), 53u);
    EXPECT_EQ(H.rows(), 32u);
    EXPECT_EQ(H.cols(), 85u);
    EXPECT_TRUE((G * H.transpose()).is_zero());
    EXPECT_EQ(rank_gf(G), 53u);
    EXPECT_EQ(rank_gf(H), 32u);
}

TEST(code_matrices, generator_vanishes_exactly_on_defining_set) {
    CodeTower t = make_code_tower(11, 61);
    auto z = run_defining_set(61, 30, 9);
    Polynomial g = generator_polynomial(t.lambda, z);
    EXPECT_EQ(g.degree(), static_cast<long>(z.size()));
    for (Residue j = 0; j < 61; ++j) {
        ASSERT_EQ(eval_in_tower(g, t.lambda.pow(static_cast<std::uint64_t>(j))).is_zero(), z.contains(j));
    }
}

TEST(code_matrices, code_is_closed_under_cyclic_shift) {
    CodeTower t = make_code_tower(11, 61);
    Polynomial g = generator_polynomial(t.lambda, run_defining_set(61, 30, 12));
    MatrixGF G = generator_matrix(g, 61);
    const std::size_t r = rank_gf(G);
    std::vector<Code> last = G.row(G.rows() - 1);
    std::rotate(last.rbegin(), last.rbegin() + 1, last.rend());
    EXPECT_EQ(rank_gf(stack(G, last)), r);
    std::vector<Code> bogus(61, 0);
    bogus[0] = 1;
    EXPECT_EQ(rank_gf(stack(G, bogus)), r + 1);
}

TEST(code_matrices, rejects_bad_inputs) {
    CodeTower t = make_code_tower(13, 85);
    EXPECT_THROW(generator_polynomial(t.lambda, ResidueSet(85, {1})), ParameterError);
    EXPECT_THROW(generator_polynomial(t.lambda, ResidueSet(86, {1, 85})), ParameterError);
    EXPECT_THROW(check_polynomial(Polynomial(t.gf_q2, {2, 1}), 85), AlgebraError);
    EXPECT_THROW(make_code_tower(15, 113), ParameterError);
}

TEST(brute_distance, repetition_code) {
    CodeTower t = make_code_tower(3, 5);
    Polynomial g = generator_polynomial(t.lambda, ResidueSet(5, {1, 2, 3, 4}));
    EXPECT_EQ(g, Polynomial(t.gf_q2, {1, 1, 1, 1, 1}));
    EXPECT_EQ(brute_min_distance(generator_matrix(g, 5)), 5);
}

TEST(brute_distance, full_space) {
    auto f = construct_field(3, 2);
    EXPECT_EQ(brute_min_distance(generator_matrix(Polynomial::constant(f, 1), 5)), 1);
}

TEST(brute_distance, consecutive_run_meets_singleton) {
    CodeTower t = make_code_tower(3, 10);
    Polynomial g = generator_polynomial(t.lambda, ResidueSet(10, {3, 4, 5, 6, 7}));
    EXPECT_EQ(g.degree(), 5);
    // Five consecutive zeros give d >= 6; Singleton caps it at 6.
    EXPECT_EQ(brute_min_distance(generator_matrix(g, 10)), 6);
}

TEST(brute_distance, guard) {
    auto f = construct_field(13, 2);
    EXPECT_THROW(brute_min_distance(generator_matrix(Polynomial::constant(f, 1), 5), 1000), GuardExceeded);
}

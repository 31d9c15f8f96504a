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

#include "eaqmds/cyclic_code.h"

#include <limits>

#include "eaqmds/errors.h"
#include "eaqmds/numtheory.h"

namespace eaqmds {

CodeTower make_code_tower(std::int64_t q, std::int64_t n) {
    const auto pp = as_prime_power(static_cast<std::uint64_t>(q));
    if (!pp) throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
    FieldPtr gf_q2 = construct_field(pp->prime, 2 * pp->exponent);
    FieldPtr gf_q4 = construct_tower(gf_q2);
    FieldElement lambda = nth_root_of_unity(gf_q4, static_cast<std::uint64_t>(n));
    return CodeTower{q, n, std::move(gf_q2), std::move(gf_q4), std::move(lambda)};
}

Polynomial minimal_polynomial(const FieldElement &lambda, const Coset &coset) {
    const FieldPtr &big = lambda.field();
    if (!big->base()) throw FieldMismatch("root of unity must live in an extension field");
    Polynomial acc = Polynomial::constant(big, 1);
    for (Residue j : coset.members) {
        const Code root = lambda.pow(static_cast<std::uint64_t>(j)).code();
        acc = acc * Polynomial(big, {big->neg(root), 1});
    }
    std::vector<Code> projected;
    projected.reserve(acc.coeffs().size());
    for (Code c : acc.coeffs()) projected.push_back(project(FieldElement(big, c)).code());
    return Polynomial(big->base(), std::move(projected));
}

Polynomial generator_polynomial(const FieldElement &lambda, const ResidueSet &z) {
    const FieldPtr &big = lambda.field();
    if (!big->base()) throw FieldMismatch("root of unity must live in an extension field");
    const Residue n = z.modulus();
    if (!(lambda.pow(static_cast<std::uint64_t>(n)) == FieldElement::one(big))) {
        throw ParameterError("lambda is not an n-th root of unity for n=" + std::to_string(n));
    }
    const Residue qsq = mod(static_cast<Residue>(big->base()->order() % static_cast<std::uint64_t>(n)), n);
    if (!is_coset_closed(z, qsq)) throw ParameterError("defining set is not a union of cyclotomic cosets");
    Polynomial g = Polynomial::constant(big->base(), 1);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (Residue x : z.members()) {
        if (done[static_cast<std::size_t>(x)]) continue;
        const Coset c = cyclotomic_coset(n, qsq, x);
        for (Residue y : c.members) done[static_cast<std::size_t>(y)] = true;
        g = g * minimal_polynomial(lambda, c);
    }
    return g;
}

Polynomial check_polynomial(const Polynomial &g, std::size_t n) {
    auto [h, r] = Polynomial::x_pow_minus_one(g.field(), n).divmod(g);
    if (!r.is_zero()) throw AlgebraError("generator does not divide x^n - 1");
    return h;
}

MatrixGF generator_matrix(const Polynomial &g, std::size_t n) {
    if (g.is_zero() || g.degree() > static_cast<long>(n)) throw ParameterError("invalid generator polynomial");
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    MatrixGF out(g.field(), k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) out.set(i, i + j, g.coeffs()[j]);
    }
    return out;
}

MatrixGF parity_check_matrix(const Polynomial &g, std::size_t n) {
    const Polynomial h_rec = check_polynomial(g, n).reciprocal();
    const auto rows = static_cast<std::size_t>(g.degree());
    MatrixGF out(g.field(), rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < h_rec.coeffs().size(); ++j) out.set(i, i + j, h_rec.coeffs()[j]);
    }
    return out;
}

std::int64_t brute_min_distance(const MatrixGF &gen, std::uint64_t limit) {
    const Field &f = *gen.field();
    const std::size_t k = gen.rows(), n = gen.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > limit / f.order()) {
            throw GuardExceeded("brute-force distance: |F|^k exceeds " + std::to_string(limit),
                                static_cast<long long>(limit));
        }
        total *= f.order();
    }
    // Walk the messages as a mixed-radix counter over element codes, updating
    // the codeword by the difference of the changed digit times its row.
    std::vector<Code> message(k, 0), word(n, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (true) {
            const Code old = message[i];
            const Code next = old + 1 == f.order() ? 0 : old + 1;
            message[i] = next;
            const Code delta = f.sub(next, old);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, gen.code(i, j)));
            if (next != 0) break;
            ++i;
        }
        std::int64_t w = 0;
        for (Code c : word) w += c != 0;
        if (w > 0 && w < best) best = w;
    }
    if (best == std::numeric_limits<std::int64_t>::max()) return 0;
    return best;
}

}  // namespace eaqmds

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

#include <random>

#include "eaqmds/cosets.h"
#include "eaqmds/errors.h"
#include "oracle.h"

using namespace eaqmds;

namespace {

ResidueSet from_std(std::int64_t n, const std::set<std::int64_t> &s) {
    return ResidueSet(n, std::vector<Residue>(s.begin(), s.end()));
}

// Odd prime powers q with a | q^2 + 1, a = m^2 + 1, n <= n_max.
std::vector<std::pair<std::int64_t, std::int64_t>> admissible_lengths(std::int64_t n_max) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t m : {1, 3, 5}) {
        const std::int64_t a = m * m + 1;
        for (std::int64_t q = 3; (q * q + 1) / a <= n_max; q += 2) {
            if (!oracle::is_prime_power(q) || (q * q + 1) % a != 0) continue;
            out.emplace_back((q * q + 1) / a, q);
        }
    }
    return out;
}

}  // namespace

TEST(residue_set, construction_and_algebra) {
    ResidueSet a(10, {1, 3, 5});
    ResidueSet b(10, {3, 4});
    EXPECT_EQ(a.intersect(b), ResidueSet(10, {3}));
    EXPECT_EQ(a.unite(b), ResidueSet(10, {1, 3, 4, 5}));
    EXPECT_EQ(a.minus(b), ResidueSet(10, {1, 5}));
    EXPECT_TRUE(ResidueSet(10, {3}).is_subset_of(a));
    EXPECT_THROW(ResidueSet(10, {1, 1}), ParameterError);
    EXPECT_EQ(ResidueSet(10, {10}), ResidueSet(10, {0}));
    EXPECT_THROW(ResidueSet(10, {1, 11}), ParameterError);
    EXPECT_THROW(a.unite(ResidueSet(11, {1})), ParameterError);
    EXPECT_EQ(ResidueSet::from_any(10, {13, 3, -7}), ResidueSet(10, {3}));
}

TEST(residue_set, cyclic_runs) {
    EXPECT_TRUE(ResidueSet::interval(10, 8, 11).is_consecutive_run());
    EXPECT_EQ(ResidueSet::interval(10, 8, 11), ResidueSet(10, {0, 1, 8, 9}));
    EXPECT_FALSE(ResidueSet(10, {1, 3}).is_consecutive_run());
    EXPECT_TRUE(ResidueSet(10).is_consecutive_run());
}

TEST(cyclotomic_coset, examples_for_n85) {
    EXPECT_EQ(cyclotomic_coset(85, 169, 1).members, (std::vector<Residue>{1, 84}));
    EXPECT_EQ(cyclotomic_coset(85, 169, 0).members, (std::vector<Residue>{0}));
    EXPECT_EQ(cyclotomic_coset(85, 169, 42).members, (std::vector<Residue>{42, 43}));
    EXPECT_EQ(all_cosets(85, 169).size(), 43u);
}

TEST(cyclotomic_coset, matches_naive_orbit) {
    for (auto [n, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{85, 13}, {61, 11}, {41, 9}, {63, 2}, {51, 4}}) {
        for (std::int64_t i = 0; i < n; ++i) {
            ASSERT_EQ(cyclotomic_coset(n, q * q, i).as_set(), from_std(n, oracle::orbit(n, q * q, i)));
        }
    }
}

TEST(cyclotomic_coset, cosets_partition_residues) {
    for (auto [n, q] : admissible_lengths(3000)) {
        std::vector<int> seen(n, 0);
        for (const Coset &c : all_cosets(n, q * q)) {
            for (Residue x : c.members) ++seen[x];
        }
        ASSERT_TRUE(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; })) << n;
    }
}

TEST(cyclotomic_coset, cosets_are_pairs_i_and_minus_i) {
    for (auto [n, q] : admissible_lengths(2500)) {
        for (std::int64_t i = 1; i < n; ++i) {
            ASSERT_EQ(cyclotomic_coset(n, q * q, i).as_set(), ResidueSet::from_any(n, {i, n - i})) << n << " " << i;
        }
    }
}

TEST(neg_q, image_of_singleton) {
    EXPECT_EQ(neg_q_image(13, ResidueSet(85, {1})), ResidueSet(85, {72}));
}

TEST(neg_q, involution_on_coset_closed_sets) {
    std::mt19937 rng(11);
    for (auto [n, q] : admissible_lengths(400)) {
        auto cosets = all_cosets(n, q * q);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Residue> pick;
            for (const Coset &c : cosets) {
                if (rng() % 3 == 0) pick.insert(pick.end(), c.members.begin(), c.members.end());
            }
            ResidueSet s = ResidueSet::from_any(n, pick);
            ASSERT_TRUE(is_coset_closed(s, q * q));
            ResidueSet img = neg_q_image(q, s);
            ASSERT_TRUE(is_coset_closed(img, q * q));
            ASSERT_EQ(neg_q_image(q, img), s);
            ASSERT_EQ(img.size(), s.size());
        }
    }
}

TEST(neg_q, coset_identity_example) {
    auto [lhs, rhs] = coset_neg_q_identity(85, 13, 0, 1);
    EXPECT_EQ(lhs, ResidueSet(85, {13, 72}));
    EXPECT_EQ(lhs, rhs);
}

TEST(neg_q, coset_identity_holds_for_all_u_v) {
    for (auto [n, q] : admissible_lengths(1500)) {
        for (std::int64_t u = 0; u < q; ++u) {
            for (std::int64_t v = 0; v < q; ++v) {
                if ((u * q + v) % n == 0) continue;
                auto [lhs, rhs] = coset_neg_q_identity(n, q, u, v);
                ASSERT_EQ(lhs, rhs) << "n=" << n << " u=" << u << " v=" << v;
            }
        }
    }
}

TEST(defining_set, run_around_centre) {
    ResidueSet z = run_defining_set(85, 42, 16);
    EXPECT_EQ(z, ResidueSet::interval(85, 27, 58));
    EXPECT_EQ(z.size(), 32u);
    EXPECT_TRUE(is_coset_closed(z, 169));
    EXPECT_THROW(run_defining_set(85, 42, 0), ParameterError);
    EXPECT_THROW(run_defining_set(85, 42, 43), ParameterError);
}

TEST(decompose, entangled_part_sizes) {
    auto d1 = decompose(13, run_defining_set(85, 42, 16));
    EXPECT_EQ(d1.z1.size(), 12u);
    EXPECT_EQ(d1.z1.size() + d1.z2.size(), 32u);
    EXPECT_EQ(neg_q_image(13, d1.z1), d1.z1);
    auto d2 = decompose(17, run_defining_set(145, 72, 3 * 0 + 17 + 1));
    EXPECT_EQ(static_cast<std::int64_t>(d2.z1.size()), oracle::window_overlap(145, 17, 72 + 1 - 18, 72 + 18));
    auto d3 = decompose(13, ResidueSet(85));
    EXPECT_TRUE(d3.z1.empty());
    EXPECT_TRUE(d3.z2.empty());
}

TEST(decompose, matches_pointwise_count) {
    for (auto [n, q] : admissible_lengths(1200)) {
        const std::int64_t s = (n - 1) / 2;
        for (std::int64_t dp = 1; dp <= s; dp += 3) {
            auto d = decompose(q, run_defining_set(n, s, dp));
            ASSERT_EQ(static_cast<std::int64_t>(d.z1.size()), oracle::window_overlap(n, q, s + 1 - dp, s + dp));
        }
    }
}

TEST(decompose, rejects_non_closed_set) {
    EXPECT_THROW(decompose(13, ResidueSet(85, {1})), ParameterError);
}

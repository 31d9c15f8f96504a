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

#ifndef EAQMDS_FAMILIES_H
#define EAQMDS_FAMILIES_H

#include <cstdint>
#include <string>
#include <vector>

#include "eaqmds/cosets.h"

namespace eaqmds {

/// The four constructions, distinguished by the linear form of q:
///   I:   q = 2ak + m        II: q = 2ak + a + m
///   III: q = 2ak + a - m    IV: q = 2ak + 2a - m
/// with a = m^2 + 1, m odd, n = (q^2 + 1)/a.
enum class Family { I = 1, II = 2, III = 3, IV = 4 };

std::string family_name(Family f);
/// 1..4 -> Family; throws ParameterError otherwise.
Family family_from_int(int c);

struct FamilySpec {
    Family family;
    std::int64_t m;
    std::int64_t k;
    std::int64_t alpha;
    // Derived.
    std::int64_t a;
    std::int64_t q;
    std::int64_t n;
    std::int64_t s;

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

std::int64_t family_q(Family f, std::int64_t m, std::int64_t k);

/// Validates and derives a, q, n, s. Throws ParameterError naming the violated
/// constraint (even m, k < 1, alpha outside [1, k], q not an odd prime power).
FamilySpec make_family_spec(Family f, std::int64_t m, std::int64_t k, std::int64_t alpha);

/// Every admissible (k, alpha) with k <= k_max and q <= q_max, ordered by k then alpha.
std::vector<FamilySpec> enumerate_admissible(Family f, std::int64_t m, std::int64_t k_max, std::int64_t q_max);

struct ClosedForm {
    std::int64_t delta_prime;
    std::int64_t c;
    std::int64_t classical_dim;
    std::int64_t quantum_dim;
    std::int64_t d;
};

ClosedForm closed_form(const FamilySpec &spec);

/// The quantum dimension exactly as written in each family's parameter
/// statement, e.g. n - 4 alpha (q - m - a alpha) - 4mk for family I.
std::int64_t stated_quantum_dimension(const FamilySpec &spec);

struct CodeRecord {
    std::int64_t n;
    ResidueSet defining_set;
    std::int64_t dim;
    std::int64_t designed_distance;
    bool mds;
};

/// Cyclic code whose defining set is the run of half-length delta about s.
CodeRecord build_run_code(std::int64_t n, std::int64_t delta);
CodeRecord build_defining_set(const FamilySpec &spec);

/// The piecewise union of cosets C_{uq+v} that is disjoint from its -q image.
ResidueSet build_T1(const FamilySpec &spec);
/// Family I: the explicit union of cosets stable under -q. Other families:
/// Z n (-qZ) computed directly.
ResidueSet build_T1_prime(const FamilySpec &spec);

struct EAParams {
    std::int64_t n;
    std::int64_t kq;
    std::int64_t d;
    std::int64_t c;
    bool ea_singleton_equality;
    /// d <= (n+2)/2; reported only, several published codes exceed it.
    bool d_within_half;

    friend bool operator==(const EAParams &, const EAParams &) = default;
};

/// [[n, 2 dim - n + c, |Z|+1; c]] with c = |Z n (-qZ)|.
EAParams ea_params_for(std::int64_t q, const CodeRecord &code);
EAParams ea_params(const FamilySpec &spec);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    FamilySpec spec;
    std::vector<Check> checks;

    bool all_passed() const;
    const Check *find(const std::string &name) const;
};

struct VerifyOptions {
    /// Added to the run half-length when building Z. Nonzero values are a
    /// fault-injection hook for testing the harness.
    std::int64_t delta_fault = 0;
};

/// Check names, in report order.
inline constexpr const char *kCheckDefiningSetSize = "defining_set_size";
inline constexpr const char *kCheckConsecutiveRun = "consecutive_run";
inline constexpr const char *kCheckEntanglementClosedForm = "entanglement_closed_form";
inline constexpr const char *kCheckT1InZ = "t1_subset";
inline constexpr const char *kCheckT1Disjoint = "t1_disjoint";
inline constexpr const char *kCheckT1PrimeStable = "t1_prime_stable";
inline constexpr const char *kCheckPartition = "t1_partition";
inline constexpr const char *kCheckQuantumDimension = "quantum_dimension";
inline constexpr const char *kCheckEASingleton = "ea_singleton_equality";

VerificationReport verify_family(const FamilySpec &spec, const VerifyOptions &opts = {});

}  // namespace eaqmds

#endif  // EAQMDS_FAMILIES_H

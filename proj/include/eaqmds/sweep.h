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

#ifndef EAQMDS_SWEEP_H
#define EAQMDS_SWEEP_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eaqmds/families.h"

namespace eaqmds {

struct SweepOptions {
    std::int64_t m_max = 5;
    std::int64_t q_max = 250;
    /// Rank oracle runs on specs with n <= this bound; 0 disables it.
    std::int64_t oracle_n_max = 300;
    /// Re-verifies one spec with a deliberately lengthened defining set.
    bool fault_inject = false;
};

struct CheckTally {
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    bool skipped = false;

    /// "skipped", "failed" or "passed".
    std::string status() const;
};

struct SweepFailure {
    std::string check;
    std::string context;
    std::string detail;
};

struct SweepSummary {
    SweepOptions options;
    std::int64_t specs = 0;
    std::vector<std::pair<std::string, CheckTally>> checks;
    std::vector<SweepFailure> failures;

    bool ok() const {
        return failures.empty();
    }
    const CheckTally *find(const std::string &name) const;
    void record(const std::string &name, bool passed, const std::string &context = {}, const std::string &detail = {});
    void mark_skipped(const std::string &name);
};

/// Sweep check names beyond the per-spec ones in families.h.
inline constexpr const char *kCheckCosetPartition = "coset_partition";
inline constexpr const char *kCheckCosetShape = "coset_shape";
inline constexpr const char *kCheckNegQInvolution = "neg_q_involution";
inline constexpr const char *kCheckCosetIdentity = "coset_neg_q_identity";
inline constexpr const char *kCheckMonotone = "entanglement_monotone";
inline constexpr const char *kCheckOverlapIandIII = "overlap_I_III";
inline constexpr const char *kCheckRankOracle = "rank_oracle";

/// Every admissible spec with odd m <= m_max and q <= q_max, sorted by (case, m, q, alpha).
std::vector<FamilySpec> sweep_specs(std::int64_t m_max, std::int64_t q_max);

std::string describe(const FamilySpec &spec);

/// Exhaustive check of -qC_{uq+v} = C_{vq-u} over 0 <= u, v < q. Returns the
/// number of failing (u, v) pairs.
std::int64_t coset_identity_failures(std::int64_t n, std::int64_t q);

SweepSummary run_sweep(const SweepOptions &opts);

}  // namespace eaqmds

#endif  // EAQMDS_SWEEP_H

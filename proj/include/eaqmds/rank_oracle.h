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

#ifndef EAQMDS_RANK_ORACLE_H
#define EAQMDS_RANK_ORACLE_H

#include <cstdint>

#include "eaqmds/families.h"
#include "eaqmds/matrix.h"

namespace eaqmds {

inline constexpr std::int64_t kDefaultOracleMaxLength = 300;

/// Transpose with every entry raised to the q-th power.
MatrixGF conjugate_transpose(const MatrixGF &m, std::int64_t q);

/// Row rank by Gaussian elimination with exact inverses.
std::size_t rank_gf(MatrixGF m);

struct RankReport {
    FamilySpec spec;
    std::int64_t n;
    std::int64_t rank_hh_dagger;
    std::int64_t z1_size;
    std::int64_t closed_form_c;
    bool match;
};

/// Builds the family code's parity-check matrix H over GF(q^2) and compares
/// rank(H H^dagger) with |Z n (-qZ)|. Throws GuardExceeded when n > max_length.
RankReport entanglement_rank(const FamilySpec &spec, std::int64_t max_length = kDefaultOracleMaxLength);

}  // namespace eaqmds

#endif  // EAQMDS_RANK_ORACLE_H

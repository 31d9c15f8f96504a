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

#ifndef EAQMDS_TABLES_H
#define EAQMDS_TABLES_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eaqmds/families.h"
#include "json.hpp"

namespace eaqmds {

/// One row of the reference parameter tables (data/golden_tables.csv).
struct GoldenRow {
    Family family;
    int row;
    std::int64_t m;
    std::int64_t q;
    std::int64_t n;
    std::int64_t alpha;
    std::int64_t kq;
    std::int64_t d;
    std::int64_t c;
};

const std::vector<GoldenRow> &golden_rows();
std::vector<GoldenRow> golden_rows(Family f);

/// Recovers k from q and validates the row's parameters.
FamilySpec spec_for(const GoldenRow &row);

/// "[[n,k,d;c]]_q"
std::string format_code(std::int64_t n, std::int64_t kq, std::int64_t d, std::int64_t c, std::int64_t q);
std::string format_code(const GoldenRow &row);

struct ClassicalParams {
    std::int64_t n;
    std::int64_t k;
    std::int64_t d;
    friend bool operator==(const ClassicalParams &, const ClassicalParams &) = default;
};

struct TableRow {
    Family family;
    std::int64_t m;
    std::int64_t q;
    std::int64_t k;
    std::int64_t n;
    std::int64_t alpha;
    ClassicalParams classical;
    EAParams ea;
    std::int64_t z_size;
    std::int64_t z1_size;
    std::vector<std::pair<std::string, bool>> checks;

    bool verified() const;
    friend bool operator==(const TableRow &, const TableRow &) = default;
};

inline constexpr const char *kCheckMatchesGolden = "matches_golden";

/// Computes parameters and runs verify_family for one spec.
TableRow compute_row(const FamilySpec &spec);
/// As above, plus a matches_golden check against the reference values.
TableRow compute_row(const GoldenRow &golden);

nlohmann::ordered_json to_json(const TableRow &row);
TableRow table_row_from_json(const nlohmann::ordered_json &j);

inline constexpr const char *kCsvHeader = "case,m,q,n,alpha,kq,d,c";
std::string to_csv(const TableRow &row);

}  // namespace eaqmds

#endif  // EAQMDS_TABLES_H

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

#include "eaqmds/tables.h"

#include <sstream>
#include <string_view>

#include "eaqmds/errors.h"

namespace eaqmds {

namespace detail {
extern const std::string_view kGoldenTablesCsv;
}

namespace {

std::vector<GoldenRow> parse_golden(std::string_view text) {
    std::vector<GoldenRow> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::int64_t> v;
        while (std::getline(fields, cell, ',')) v.push_back(std::stoll(cell));
        if (v.size() != 9) throw AlgebraError("malformed golden row: " + line);
        out.push_back(GoldenRow{family_from_int(static_cast<int>(v[0])), static_cast<int>(v[1]), v[2], v[3], v[4], v[5],
                                v[6], v[7], v[8]});
    }
    return out;
}

}  // namespace

const std::vector<GoldenRow> &golden_rows() {
    static const std::vector<GoldenRow> rows = parse_golden(detail::kGoldenTablesCsv);
    return rows;
}

std::vector<GoldenRow> golden_rows(Family f) {
    std::vector<GoldenRow> out;
    for (const GoldenRow &r : golden_rows()) {
        if (r.family == f) out.push_back(r);
    }
    return out;
}

FamilySpec spec_for(const GoldenRow &row) {
    const std::int64_t offset = family_q(row.family, row.m, 0);
    const std::int64_t step = 2 * (row.m * row.m + 1);
    if (row.q <= offset || (row.q - offset) % step != 0) {
        throw ParameterError("q=" + std::to_string(row.q) + " is not of the form required by case " +
                             family_name(row.family));
    }
    FamilySpec spec = make_family_spec(row.family, row.m, (row.q - offset) / step, row.alpha);
    if (spec.n != row.n) throw ParameterError("golden row length disagrees with (q^2+1)/a");
    return spec;
}

std::string format_code(std::int64_t n, std::int64_t kq, std::int64_t d, std::int64_t c, std::int64_t q) {
    return "[[" + std::to_string(n) + "," + std::to_string(kq) + "," + std::to_string(d) + ";" + std::to_string(c) +
           "]]_" + std::to_string(q);
}

std::string format_code(const GoldenRow &r) {
    return format_code(r.n, r.kq, r.d, r.c, r.q);
}

bool TableRow::verified() const {
    for (const auto &[name, ok] : checks) {
        if (!ok) return false;
    }
    return true;
}

TableRow compute_row(const FamilySpec &spec) {
    const CodeRecord code = build_defining_set(spec);
    const EAParams ea = ea_params_for(spec.q, code);
    const VerificationReport report = verify_family(spec);
    TableRow row{spec.family,
                 spec.m,
                 spec.q,
                 spec.k,
                 spec.n,
                 spec.alpha,
                 ClassicalParams{code.n, code.dim, code.designed_distance},
                 ea,
                 static_cast<std::int64_t>(code.defining_set.size()),
                 ea.c,
                 {}};
    for (const Check &c : report.checks) row.checks.emplace_back(c.name, c.passed);
    return row;
}

TableRow compute_row(const GoldenRow &golden) {
    TableRow row = compute_row(spec_for(golden));
    const bool match = row.n == golden.n && row.ea.kq == golden.kq && row.ea.d == golden.d && row.ea.c == golden.c;
    row.checks.emplace_back(kCheckMatchesGolden, match);
    return row;
}

nlohmann::ordered_json to_json(const TableRow &r) {
    nlohmann::ordered_json j;
    j["case"] = static_cast<int>(r.family);
    j["m"] = r.m;
    j["q"] = r.q;
    j["k"] = r.k;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["classical"] = {{"n", r.classical.n}, {"k", r.classical.k}, {"d", r.classical.d}};
    j["ea"] = {{"n", r.ea.n}, {"k", r.ea.kq}, {"d", r.ea.d}, {"c", r.ea.c}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto &[name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    j["decomposition"] = {{"z", r.z_size}, {"z1", r.z1_size}, {"z2", r.z_size - r.z1_size}};
    j["flags"] = {{"ea_singleton_equality", r.ea.ea_singleton_equality}, {"d_within_half", r.ea.d_within_half}};
    j["verified"] = r.verified();
    return j;
}

TableRow table_row_from_json(const nlohmann::ordered_json &j) {
    TableRow r{};
    r.family = family_from_int(j.at("case").get<int>());
    r.m = j.at("m").get<std::int64_t>();
    r.q = j.at("q").get<std::int64_t>();
    r.k = j.at("k").get<std::int64_t>();
    r.n = j.at("n").get<std::int64_t>();
    r.alpha = j.at("alpha").get<std::int64_t>();
    const auto &cl = j.at("classical");
    r.classical = {cl.at("n").get<std::int64_t>(), cl.at("k").get<std::int64_t>(), cl.at("d").get<std::int64_t>()};
    const auto &ea = j.at("ea");
    const auto &flags = j.at("flags");
    r.ea = EAParams{ea.at("n").get<std::int64_t>(),
                    ea.at("k").get<std::int64_t>(),
                    ea.at("d").get<std::int64_t>(),
                    ea.at("c").get<std::int64_t>(),
                    flags.at("ea_singleton_equality").get<bool>(),
                    flags.at("d_within_half").get<bool>()};
    r.z_size = j.at("decomposition").at("z").get<std::int64_t>();
    r.z1_size = j.at("decomposition").at("z1").get<std::int64_t>();
    for (const auto &[name, ok] : j.at("checks").items()) r.checks.emplace_back(name, ok.get<bool>());
    return r;
}

std::string to_csv(const TableRow &r) {
    std::ostringstream os;
    os << static_cast<int>(r.family) << ',' << r.m << ',' << r.q << ',' << r.n << ',' << r.alpha << ',' << r.ea.kq
       << ',' << r.ea.d << ',' << r.ea.c;
    return os.str();
}

}  // namespace eaqmds

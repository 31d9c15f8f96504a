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

#include "eaqmds/cli.h"

#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eaqmds/errors.h"
#include "eaqmds/rank_oracle.h"
#include "eaqmds/tables.h"
#include "json.hpp"

namespace eaqmds::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json meta_block() {
    return Json{{"tool", kToolName}, {"version", kToolVersion}, {"generated_utc", utc_now()}};
}

void emit_json(Json j, const Output &o, std::ostream &out) {
    if (o.meta) j["meta"] = meta_block();
    out << j.dump(2) << '\n';
}

void emit_csv_meta(const Output &o, std::ostream &out) {
    if (o.meta) out << "# " << kToolName << ' ' << kToolVersion << " generated " << utc_now() << '\n';
}

}  // namespace

int cmd_table(int case_number, const Output &o, std::ostream &out, std::ostream &err) {
    const Family family = family_from_int(case_number);
    std::vector<TableRow> rows;
    std::size_t matched = 0;
    for (const GoldenRow &g : golden_rows(family)) {
        TableRow row = compute_row(g);
        if (row.verified()) {
            ++matched;
        } else {
            err << "row " << g.row << ": expected " << format_code(g) << ", computed "
                << format_code(row.n, row.ea.kq, row.ea.d, row.ea.c, row.q) << '\n';
            for (const auto &[name, ok] : row.checks) {
                if (!ok) err << "  check failed: " << name << '\n';
            }
        }
        rows.push_back(std::move(row));
    }
    if (o.format == Format::Csv) {
        emit_csv_meta(o, out);
        out << kCsvHeader << '\n';
        for (const TableRow &r : rows) out << to_csv(r) << '\n';
    } else {
        Json j;
        j["case"] = case_number;
        j["rows"] = Json::array();
        for (const TableRow &r : rows) j["rows"].push_back(to_json(r));
        j["matched"] = matched;
        j["total"] = rows.size();
        emit_json(std::move(j), o, out);
    }
    return matched == rows.size() ? kExitOk : kExitVerificationFailed;
}

int cmd_family(int case_number, std::int64_t m, std::int64_t k, std::int64_t alpha, const Output &o, std::ostream &out,
               std::ostream &) {
    const FamilySpec spec = make_family_spec(family_from_int(case_number), m, k, alpha);
    const TableRow row = compute_row(spec);
    if (o.format == Format::Csv) {
        emit_csv_meta(o, out);
        out << kCsvHeader << '\n' << to_csv(row) << '\n';
    } else {
        Json j = to_json(row);
        j["derived"] = {{"a", spec.a}, {"s", spec.s}, {"delta_prime", closed_form(spec).delta_prime}};
        j["code"] = format_code(row.n, row.ea.kq, row.ea.d, row.ea.c, row.q);
        emit_json(std::move(j), o, out);
    }
    return row.verified() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const SweepOptions &sweep, const Output &o, std::ostream &out, std::ostream &err) {
    const SweepSummary sum = run_sweep(sweep);
    if (o.format == Format::Csv) {
        emit_csv_meta(o, out);
        out << "check,passed,failed,status\n";
        for (const auto &[name, t] : sum.checks) {
            out << name << ',' << t.passed << ',' << t.failed << ',' << t.status() << '\n';
        }
    } else {
        Json j;
        j["bounds"] = {{"m_max", sweep.m_max}, {"q_max", sweep.q_max}, {"oracle_n_max", sweep.oracle_n_max}};
        j["fault_injected"] = sweep.fault_inject;
        j["specs"] = sum.specs;
        j["checks"] = Json::object();
        for (const auto &[name, t] : sum.checks) {
            j["checks"][name] = {{"passed", t.passed}, {"failed", t.failed}, {"status", t.status()}};
        }
        j["failures"] = Json::array();
        for (const SweepFailure &f : sum.failures) {
            j["failures"].push_back({{"check", f.check}, {"context", f.context}, {"detail", f.detail}});
        }
        j["ok"] = sum.ok();
        emit_json(std::move(j), o, out);
    }
    for (const SweepFailure &f : sum.failures) err << "FAIL " << f.check << " [" << f.context << "] " << f.detail << '\n';
    return sum.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(int case_number, std::int64_t m, std::int64_t k, std::int64_t alpha, std::int64_t oracle_n_max,
               const Output &o, std::ostream &out, std::ostream &) {
    const FamilySpec spec = make_family_spec(family_from_int(case_number), m, k, alpha);
    const RankReport r = entanglement_rank(spec, oracle_n_max);
    const bool ok = r.match && r.z1_size == r.closed_form_c;
    if (o.format == Format::Csv) {
        emit_csv_meta(o, out);
        out << "case,m,q,n,alpha,rank,z1,c,match\n"
            << case_number << ',' << m << ',' << spec.q << ',' << spec.n << ',' << alpha << ',' << r.rank_hh_dagger
            << ',' << r.z1_size << ',' << r.closed_form_c << ',' << (ok ? "true" : "false") << '\n';
    } else {
        Json j{{"case", case_number}, {"m", m},
               {"q", spec.q},         {"k", k},
               {"n", spec.n},         {"alpha", alpha},
               {"rank", r.rank_hh_dagger}, {"z1_size", r.z1_size},
               {"closed_form_c", r.closed_form_c}, {"match", ok}};
        emit_json(std::move(j), o, out);
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Construct and verify entanglement-assisted quantum MDS codes from cyclic codes", kToolName};
    app.require_subcommand(1);

    std::string format = "json";
    bool meta = false;
    int case_number = 0;
    std::int64_t m = 0, k = 0, alpha = 0;
    SweepOptions sweep;
    std::int64_t oracle_n_max = kDefaultOracleMaxLength;

    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--meta", meta, "Include provenance (tool, version, timestamp)");
    };
    auto add_family = [&](CLI::App *sub) {
        sub->add_option("--case", case_number, "Construction 1-4")->required();
        sub->add_option("--m", m, "Odd m >= 1 (a = m^2 + 1)")->required();
        sub->add_option("--k", k, "k >= 1, fixes q")->required();
        sub->add_option("--alpha", alpha, "1 <= alpha <= k")->required();
    };

    CLI::App *table = app.add_subcommand("table", "Regenerate a reference parameter table");
    table->add_option("--case", case_number, "Construction 1-4")->required();
    add_output(table);

    CLI::App *family = app.add_subcommand("family", "Report a single family instance");
    add_family(family);
    add_output(family);

    CLI::App *verify = app.add_subcommand("verify", "Run the property sweep");
    verify->add_option("--m-max", sweep.m_max, "Largest odd m")->capture_default_str();
    verify->add_option("--q-max", sweep.q_max, "Largest q")->capture_default_str();
    verify->add_option("--oracle-n-max", sweep.oracle_n_max, "Rank oracle length bound (0 skips)")
        ->capture_default_str();
    verify->add_flag("--fault-inject", sweep.fault_inject, "Test harness: inject a defining-set fault");
    add_output(verify);

    CLI::App *oracle = app.add_subcommand("oracle", "Compute rank(H H^dagger) for one instance");
    add_family(oracle);
    oracle->add_option("--oracle-n-max", oracle_n_max, "Length bound")->capture_default_str();
    add_output(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const Output o{format == "csv" ? Format::Csv : Format::Json, meta};
    try {
        if (table->parsed()) return cmd_table(case_number, o, out, err);
        if (family->parsed()) return cmd_family(case_number, m, k, alpha, o, out, err);
        if (verify->parsed()) return cmd_verify(sweep, o, out, err);
        if (oracle->parsed()) return cmd_oracle(case_number, m, k, alpha, oracle_n_max, o, out, err);
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GuardExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
    return kExitUsage;
}

}  // namespace eaqmds::cli

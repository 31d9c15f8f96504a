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

#include <sstream>

#include "eaqmds/cli.h"
#include "json.hpp"

using namespace eaqmds;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "eaqmds");
    std::vector<const char *> argv;
    for (const std::string &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result &r) {
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(cli_table, every_case_reproduces) {
    const std::size_t sizes[] = {15, 15, 16, 11};
    for (int c = 1; c <= 4; ++c) {
        Result r = run_cli({"table", "--case", std::to_string(c)});
        ASSERT_EQ(r.code, cli::kExitOk) << r.err;
        auto j = parse(r);
        EXPECT_EQ(j["total"], sizes[c - 1]);
        EXPECT_EQ(j["matched"], sizes[c - 1]);
        EXPECT_EQ(j["rows"].size(), sizes[c - 1]);
    }
}

TEST(cli_table, csv_output) {
    Result r = run_cli({"table", "--case", "1", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "case,m,q,n,alpha,kq,d,c");
    EXPECT_NE(r.out.find("\n1,1,13,85,1,33,33,12\n"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
}

TEST(cli_table, output_is_deterministic) {
    for (const char *fmt : {"json", "csv"}) {
        Result a = run_cli({"table", "--case", "3", "--format", fmt});
        Result b = run_cli({"table", "--case", "3", "--format", fmt});
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(cli_table, meta_block) {
    auto j = parse(run_cli({"table", "--case", "4", "--meta"}));
    EXPECT_EQ(j["meta"]["tool"], "eaqmds");
    EXPECT_TRUE(j["meta"].contains("generated_utc"));
    Result csv = run_cli({"table", "--case", "4", "--meta", "--format", "csv"});
    EXPECT_EQ(csv.out.rfind("# eaqmds", 0), 0u);
    EXPECT_FALSE(parse(run_cli({"table", "--case", "4"})).contains("meta"));
}

TEST(cli_family, reports_single_instance) {
    Result r = run_cli({"family", "--case", "1", "--m", "1", "--k", "3", "--alpha", "2"});
    ASSERT_EQ(r.code, cli::kExitOk);
    auto j = parse(r);
    EXPECT_EQ(j["code"], "[[85,9,59;40]]_13");
    EXPECT_EQ(j["derived"]["delta_prime"], 29);
    EXPECT_EQ(j["flags"]["d_within_half"], false);
    EXPECT_EQ(j["verified"], true);
    for (const char *key : {"case", "m", "q", "k", "n", "alpha", "classical", "ea", "checks", "decomposition"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }

    auto j2 = parse(run_cli({"family", "--case", "2", "--m", "3", "--k", "2", "--alpha", "1"}));
    EXPECT_EQ(j2["q"], 53);
    EXPECT_EQ(j2["code"], "[[281,41,175;108]]_53");
}

TEST(cli_family, invalid_parameters_are_usage_errors) {
    Result r = run_cli({"family", "--case", "1", "--m", "1", "--k", "3", "--alpha", "4"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("alpha exceeds k"), std::string::npos);
    EXPECT_EQ(run_cli({"family", "--case", "1", "--m", "2", "--k", "3", "--alpha", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"family", "--case", "5", "--m", "1", "--k", "3", "--alpha", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"family", "--case", "1", "--m", "1", "--k", "5", "--alpha", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"family", "--case", "1", "--m", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"table", "--case", "1", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
}

TEST(cli_oracle, rank_matches) {
    Result r = run_cli({"oracle", "--case", "2", "--m", "1", "--k", "2", "--alpha", "1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    auto j = parse(r);
    EXPECT_EQ(j["rank"], 24);
    EXPECT_EQ(j["z1_size"], 24);
    EXPECT_EQ(j["match"], true);
    Result csv = run_cli({"oracle", "--case", "1", "--m", "1", "--k", "3", "--alpha", "1", "--format", "csv"});
    EXPECT_EQ(csv.out, "case,m,q,n,alpha,rank,z1,c,match\n1,1,13,85,1,12,12,12,true\n");
}

TEST(cli_oracle, guard_exit_code) {
    Result r = run_cli({"oracle", "--case", "1", "--m", "3", "--k", "5", "--alpha", "1"});
    EXPECT_EQ(r.code, cli::kExitGuard);
    EXPECT_NE(r.err.find("rank-oracle limit"), std::string::npos);
    EXPECT_EQ(run_cli({"oracle", "--case", "1", "--m", "1", "--k", "3", "--alpha", "1", "--oracle-n-max", "50"}).code,
              cli::kExitGuard);
}

TEST(cli_verify, small_sweep_passes) {
    Result r = run_cli({"verify", "--m-max", "3", "--q-max", "60", "--oracle-n-max", "150"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    auto j = parse(r);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["fault_injected"], false);
    EXPECT_GT(j["specs"].get<int>(), 0);
    EXPECT_EQ(j["checks"]["rank_oracle"]["status"], "passed");
    EXPECT_EQ(j["checks"]["entanglement_closed_form"]["failed"], 0);
    EXPECT_TRUE(j["failures"].empty());
}

TEST(cli_verify, oracle_can_be_skipped) {
    Result r = run_cli({"verify", "--m-max", "1", "--q-max", "30", "--oracle-n-max", "0", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.rfind("check,passed,failed,status\n", 0), 0u);
    EXPECT_NE(r.out.find("\nrank_oracle,0,0,skipped\n"), std::string::npos);
}

TEST(cli_verify, fault_injection_fails) {
    Result r = run_cli({"verify", "--m-max", "1", "--q-max", "30", "--oracle-n-max", "0", "--fault-inject"});
    EXPECT_EQ(r.code, cli::kExitVerificationFailed);
    auto j = parse(r);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["fault_injected"], true);
    EXPECT_EQ(j["checks"]["defining_set_size"]["failed"], 1);
    EXPECT_EQ(j["checks"]["consecutive_run"]["failed"], 0);
    EXPECT_NE(r.err.find("FAIL defining_set_size [fault-injected"), std::string::npos);
}

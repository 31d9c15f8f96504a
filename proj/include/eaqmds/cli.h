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

#ifndef EAQMDS_CLI_H
#define EAQMDS_CLI_H

#include <cstdint>
#include <iosfwd>

#include "eaqmds/sweep.h"

namespace eaqmds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

inline constexpr const char *kToolName = "eaqmds";
inline constexpr const char *kToolVersion = "1.0.0";

enum class Format { Json, Csv };

struct Output {
    Format format = Format::Json;
    /// Adds a provenance block (tool, version, UTC timestamp).
    bool meta = false;
};

int cmd_table(int case_number, const Output &out_opts, std::ostream &out, std::ostream &err);
int cmd_family(int case_number, std::int64_t m, std::int64_t k, std::int64_t alpha, const Output &out_opts,
               std::ostream &out, std::ostream &err);
int cmd_verify(const SweepOptions &sweep, const Output &out_opts, std::ostream &out, std::ostream &err);
int cmd_oracle(int case_number, std::int64_t m, std::int64_t k, std::int64_t alpha, std::int64_t oracle_n_max,
               const Output &out_opts, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace eaqmds::cli

#endif  // EAQMDS_CLI_H

// Copyright 2026 The Masker Authors.
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

#ifndef MASKER_CLI_H_
#define MASKER_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace masker::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `masker` executable. args[0] is the program name.
//
// Subcommands: synth, train, edit, score-table, silver, eval. Every
// subcommand also accepts --config FILE with one key=value per line, where
// keys are long flag names without the leading dashes; flags given on the
// command line win over the file.
//
// Returns 0 on success, 2 for usage errors (unknown flag or subcommand, bad
// value) and 1 for any other failure. Output files are written atomically, so
// a failed run leaves no partial file behind.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace masker::cli

#endif  // MASKER_CLI_H_

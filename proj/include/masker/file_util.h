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

#ifndef MASKER_FILE_UTIL_H_
#define MASKER_FILE_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace masker {

// One entry per line, newline characters stripped (a trailing '\r' too).
// Throws std::runtime_error when the file cannot be opened.
std::vector<std::string> ReadLines(const std::string& path);

std::string ReadFile(const std::string& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file. Throws std::runtime_error on failure.
void WriteFileAtomically(const std::string& path, std::string_view contents);

}  // namespace masker

#endif  // MASKER_FILE_UTIL_H_

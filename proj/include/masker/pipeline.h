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

#ifndef MASKER_PIPELINE_H_
#define MASKER_PIPELINE_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "masker/editor.h"
#include "masker/mlm.h"
#include "masker/scoring.h"

namespace masker {

// Edits every line with a shared read-only model. Lines are fanned out over
// `workers` OpenMP threads and results come back in input order, identical
// for any worker count. Each line must tokenize to at least one token.
// options.execution is ignored: the span search inside a line runs serially.
std::vector<EditResult> BatchEdit(const PaddedMlm& model,
                                  std::span<const std::string> corpus,
                                  Direction direction, int workers,
                                  EditOptions options = {});

// An aligned (noisy source, original target) training pair.
struct SilverPair {
  std::size_t line = 0;     // 0-based index into the input corpus
  std::string source_text;  // MASKER output
  std::string target_text;  // the corpus line, whitespace-normalized
  SpanScore winner;
  Direction direction;
  bool identity = false;
};

struct SilverResult {
  std::vector<SilverPair> pairs;
  std::vector<std::size_t> skipped_lines;  // lines with no tokens
};

SilverResult GenerateSilver(const PaddedMlm& model,
                            std::span<const std::string> corpus,
                            Direction direction, int workers = 1);

// "<source>\t<target>\n" per pair. Identity pairs are dropped unless
// `keep_identity` is set.
void WriteSilverTsv(std::ostream& out, std::span<const SilverPair> pairs,
                    bool keep_identity = true);

// One JSON object per pair with fields line, start, del_len, replacement,
// score and identity.
void WriteSilverJsonl(std::ostream& out, std::span<const SilverPair> pairs,
                      bool keep_identity = true);

}  // namespace masker

#endif  // MASKER_PIPELINE_H_

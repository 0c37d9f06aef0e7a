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

#ifndef MASKER_EDITOR_H_
#define MASKER_EDITOR_H_

#include <string_view>
#include <vector>

#include "masker/mlm.h"
#include "masker/scoring.h"
#include "masker/tokenizer.h"

namespace masker {

struct EditResult {
  TokenSeq input;
  TokenSeq output;
  SpanScore winner;
  Direction direction;
  // Full score table; empty unless requested.
  std::vector<SpanScore> table;

  bool identity() const { return input == output; }
};

struct EditOptions {
  bool keep_table = false;
  // Pick the winner by target_score alone, ignoring the source model.
  bool ablate_source = false;
  Execution execution = Execution::kParallel;
};

// input[0, start) ++ StripPads(replacement) ++ input[start + del_len, end).
TokenSeq SpliceEdit(const TokenSeq& input, const SpanScore& winner);

// One MASKER edit: score every span of `text`, then replace the winner with
// its stripped target-model infill. The winner is applied even when its score
// is not positive. Throws std::invalid_argument when `text` has no tokens.
EditResult Edit(const PaddedMlm& model, std::string_view text,
                Direction direction, const EditOptions& options = {});
EditResult EditTokens(const PaddedMlm& model, const TokenSeq& input,
                      Direction direction, const EditOptions& options = {});

}  // namespace masker

#endif  // MASKER_EDITOR_H_

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

#include "masker/editor.h"

#include <stdexcept>
#include <utility>

namespace masker {

TokenSeq SpliceEdit(const TokenSeq& input, const SpanScore& winner) {
  const SpanCandidate span = winner.candidate;
  if (span.start < 0 || span.del_len < 0 ||
      static_cast<std::size_t>(span.start + span.del_len) > input.size()) {
    throw std::out_of_range("winning span lies outside the input");
  }
  TokenSeq output(input.begin(), input.begin() + span.start);
  for (std::string& token : StripPads(winner.replacement)) {
    output.push_back(std::move(token));
  }
  output.insert(output.end(), input.begin() + span.start + span.del_len,
                input.end());
  return output;
}

EditResult EditTokens(const PaddedMlm& model, const TokenSeq& input,
                      Direction direction, const EditOptions& options) {
  if (input.empty()) throw std::invalid_argument("cannot edit empty input");
  BestSpanResult best = BestSpan(model, input, direction, options.execution);
  if (options.ablate_source) best.winner = AblateSource(best.table);
  EditResult result;
  result.input = input;
  result.output = SpliceEdit(input, best.winner);
  result.winner = std::move(best.winner);
  result.direction = direction;
  if (options.keep_table) result.table = std::move(best.table);
  return result;
}

EditResult Edit(const PaddedMlm& model, std::string_view text,
                Direction direction, const EditOptions& options) {
  return EditTokens(model, Tokenize(text), direction, options);
}

}  // namespace masker

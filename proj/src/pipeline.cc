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

#include "masker/pipeline.h"

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace masker {

std::vector<EditResult> BatchEdit(const PaddedMlm& model,
                                  std::span<const std::string> corpus,
                                  Direction direction, int workers,
                                  EditOptions options) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<TokenSeq> inputs;
  inputs.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    inputs.push_back(Tokenize(corpus[i]));
    if (inputs.back().empty()) {
      throw std::invalid_argument("line " + std::to_string(i + 1) +
                                  " has no tokens");
    }
  }

  std::vector<EditResult> results(inputs.size());
  const auto n = static_cast<std::int64_t>(inputs.size());
  // Lines are the parallel unit; the span search inside each line stays
  // serial so threads are not oversubscribed.
  options.execution = Execution::kSerial;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    results[i] = EditTokens(model, inputs[i], direction, options);
  }
  return results;
}

SilverResult GenerateSilver(const PaddedMlm& model,
                            std::span<const std::string> corpus,
                            Direction direction, int workers) {
  SilverResult result;
  std::vector<std::string> usable;
  std::vector<std::size_t> usable_index;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (Tokenize(corpus[i]).empty()) {
      result.skipped_lines.push_back(i);
    } else {
      usable.push_back(corpus[i]);
      usable_index.push_back(i);
    }
  }

  std::vector<EditResult> edits = BatchEdit(model, usable, direction, workers);
  result.pairs.reserve(edits.size());
  for (std::size_t k = 0; k < edits.size(); ++k) {
    SilverPair pair;
    pair.line = usable_index[k];
    pair.source_text = Detokenize(edits[k].output);
    pair.target_text = Detokenize(edits[k].input);
    pair.winner = std::move(edits[k].winner);
    pair.direction = direction;
    pair.identity = edits[k].identity();
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

void WriteSilverTsv(std::ostream& out, std::span<const SilverPair> pairs,
                    bool keep_identity) {
  for (const SilverPair& pair : pairs) {
    if (pair.identity && !keep_identity) continue;
    out << pair.source_text << '\t' << pair.target_text << '\n';
  }
}

void WriteSilverJsonl(std::ostream& out, std::span<const SilverPair> pairs,
                      bool keep_identity) {
  for (const SilverPair& pair : pairs) {
    if (pair.identity && !keep_identity) continue;
    nlohmann::ordered_json record;
    record["line"] = pair.line;
    record["start"] = pair.winner.candidate.start;
    record["del_len"] = pair.winner.candidate.del_len;
    record["replacement"] = pair.winner.replacement;
    record["score"] = pair.winner.score;
    record["identity"] = pair.identity;
    out << record.dump() << '\n';
  }
}

}  // namespace masker

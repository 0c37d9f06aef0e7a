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

#ifndef MASKER_SCORING_H_
#define MASKER_SCORING_H_

#include <span>
#include <string>
#include <vector>

#include "masker/mlm.h"
#include "masker/tokenizer.h"

namespace masker {

// Edit direction. The target grid is queried under `to`, the source grid
// under `from`.
struct Direction {
  Domain from = Domain::kSource;
  Domain to = Domain::kTarget;

  Direction Reversed() const { return {to, from}; }
  friend bool operator==(const Direction&, const Direction&) = default;
};

inline constexpr Direction kSourceToTarget{Domain::kSource, Domain::kTarget};
inline constexpr Direction kTargetToSource{Domain::kTarget, Domain::kSource};

struct SpanScore {
  SpanCandidate candidate;
  // Target-model argmax infill in padded form (n_p entries, "[PAD]" kept).
  std::vector<std::string> replacement;
  double l1 = 0.0;  // infill under the target grid
  double l2 = 0.0;  // original span under the target grid
  double l3 = 0.0;  // infill under the source grid
  double l4 = 0.0;  // original span under the source grid
  double target_score = 0.0;
  double source_score = 0.0;
  double score = 0.0;

  friend bool operator==(const SpanScore&, const SpanScore&) = default;
};

// log of prod_{t < |span|} p_t(span[t]) * prod_{t >= |span|} p_t([PAD]).
// Throws std::invalid_argument when the span is longer than the grid.
double LogPseudoLikelihood(const PredictionGrid& grid,
                           std::span<const TokenId> span);
double PseudoLikelihood(const PredictionGrid& grid,
                        std::span<const TokenId> span);

// Slot-aligned variant: `slots` has exactly one entry per grid slot and [PAD]
// may appear anywhere.
double SlotwiseLikelihood(const PredictionGrid& grid,
                          std::span<const TokenId> slots);

// target_score = l1 - l2, source_score = -max(0, l3 - l4),
// score = target_score + source_score.
SpanScore ComposeScore(SpanCandidate candidate,
                       std::vector<std::string> replacement, double l1,
                       double l2, double l3, double l4);

// Scores one candidate from its two grids. `original_span` holds vocabulary
// ids of the tokens the candidate deletes.
SpanScore ScoreCandidate(const PredictionGrid& target_grid,
                         const PredictionGrid& source_grid,
                         std::span<const TokenId> original_span,
                         const Vocab& vocab, SpanCandidate candidate = {});

enum class Execution { kSerial, kParallel };

// Scores every legal candidate of `seq`, ordered by (start, del_len).
// kParallel spreads candidates over OpenMP threads and returns a table
// identical to the serial one.
std::vector<SpanScore> ScoreAllSpans(const PaddedMlm& model,
                                     const TokenSeq& seq, Direction direction,
                                     Execution execution = Execution::kParallel);

// Straight loop over candidates; the reference the parallel kernel is tested
// and benchmarked against.
std::vector<SpanScore> ScoreAllSpansSerial(const PaddedMlm& model,
                                           const TokenSeq& seq,
                                           Direction direction);

// Highest score; ties go to the smaller start, then the smaller del_len.
// Throws std::invalid_argument on an empty table.
const SpanScore& SelectBest(std::span<const SpanScore> table);

// Same selection over target_score alone.
const SpanScore& AblateSource(std::span<const SpanScore> table);

struct BestSpanResult {
  SpanScore winner;
  std::vector<SpanScore> table;
};

// Throws std::invalid_argument for an empty sequence.
BestSpanResult BestSpan(const PaddedMlm& model, const TokenSeq& seq,
                        Direction direction,
                        Execution execution = Execution::kParallel);

}  // namespace masker

#endif  // MASKER_SCORING_H_

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

#include "masker/scoring.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace masker {
namespace {

std::vector<TokenId> ToIds(const TokenSeq& seq, const Vocab& vocab) {
  std::vector<TokenId> ids;
  ids.reserve(seq.size());
  for (const std::string& token : seq) ids.push_back(vocab.Lookup(token));
  return ids;
}

SpanScore ScoreOne(const PaddedMlm& model, const TokenSeq& seq,
                   std::span<const TokenId> seq_ids, SpanCandidate candidate,
                   Direction direction) {
  const PredictionGrid target_grid =
      model.Predict(MaskSpan(seq, candidate, direction.to));
  const PredictionGrid source_grid =
      model.Predict(MaskSpan(seq, candidate, direction.from));
  return ScoreCandidate(target_grid, source_grid,
                        seq_ids.subspan(candidate.start, candidate.del_len),
                        model.vocab(), candidate);
}

template <typename Key>
const SpanScore& SelectBy(std::span<const SpanScore> table, Key key) {
  if (table.empty()) throw std::invalid_argument("empty score table");
  const SpanScore* best = &table.front();
  for (const SpanScore& row : table) {
    const double value = key(row);
    const double best_value = key(*best);
    if (value > best_value ||
        (value == best_value &&
         std::pair(row.candidate.start, row.candidate.del_len) <
             std::pair(best->candidate.start, best->candidate.del_len))) {
      best = &row;
    }
  }
  return *best;
}

}  // namespace

double LogPseudoLikelihood(const PredictionGrid& grid,
                           std::span<const TokenId> span) {
  if (static_cast<int>(span.size()) > grid.num_slots()) {
    throw std::invalid_argument("span longer than the mask block");
  }
  double log_l = 0.0;
  for (int t = 0; t < grid.num_slots(); ++t) {
    const TokenId id =
        t < static_cast<int>(span.size()) ? span[t] : Vocab::kPad;
    log_l += std::log(grid.prob(t, id));
  }
  return log_l;
}

double PseudoLikelihood(const PredictionGrid& grid,
                        std::span<const TokenId> span) {
  return std::exp(LogPseudoLikelihood(grid, span));
}

double SlotwiseLikelihood(const PredictionGrid& grid,
                          std::span<const TokenId> slots) {
  if (static_cast<int>(slots.size()) != grid.num_slots()) {
    throw std::invalid_argument("slot choices must cover every mask slot");
  }
  double log_l = 0.0;
  for (int t = 0; t < grid.num_slots(); ++t) {
    log_l += std::log(grid.prob(t, slots[t]));
  }
  return std::exp(log_l);
}

SpanScore ComposeScore(SpanCandidate candidate,
                       std::vector<std::string> replacement, double l1,
                       double l2, double l3, double l4) {
  SpanScore s;
  s.candidate = candidate;
  s.replacement = std::move(replacement);
  s.l1 = l1;
  s.l2 = l2;
  s.l3 = l3;
  s.l4 = l4;
  s.target_score = l1 - l2;
  // Written so that the capped case is +0.0 rather than -0.0.
  s.source_score = l3 > l4 ? l4 - l3 : 0.0;
  s.score = s.target_score + s.source_score;
  return s;
}

SpanScore ScoreCandidate(const PredictionGrid& target_grid,
                         const PredictionGrid& source_grid,
                         std::span<const TokenId> original_span,
                         const Vocab& vocab, SpanCandidate candidate) {
  const Infill infill = InfillArgmax(target_grid);
  std::vector<std::string> replacement;
  replacement.reserve(infill.ids.size());
  for (TokenId id : infill.ids) replacement.push_back(vocab.Token(id));

  const double l1 = SlotwiseLikelihood(target_grid, infill.ids);
  const double l2 = PseudoLikelihood(target_grid, original_span);
  const double l3 = SlotwiseLikelihood(source_grid, infill.ids);
  const double l4 = PseudoLikelihood(source_grid, original_span);
  // The per-slot argmax maximizes the product, so this holds exactly.
  assert(l1 >= l2);
  return ComposeScore(candidate, std::move(replacement), l1, l2, l3, l4);
}

std::vector<SpanScore> ScoreAllSpansSerial(const PaddedMlm& model,
                                           const TokenSeq& seq,
                                           Direction direction) {
  const std::vector<TokenId> ids = ToIds(seq, model.vocab());
  std::vector<SpanScore> table;
  for (SpanCandidate candidate :
       EnumerateSpans(seq.size(), model.config().n_p)) {
    table.push_back(ScoreOne(model, seq, ids, candidate, direction));
  }
  return table;
}

std::vector<SpanScore> ScoreAllSpans(const PaddedMlm& model,
                                     const TokenSeq& seq, Direction direction,
                                     Execution execution) {
  if (execution == Execution::kSerial) {
    return ScoreAllSpansSerial(model, seq, direction);
  }
  const std::vector<TokenId> ids = ToIds(seq, model.vocab());
  const std::vector<SpanCandidate> candidates =
      EnumerateSpans(seq.size(), model.config().n_p);
  std::vector<SpanScore> table(candidates.size());
  const auto n = static_cast<std::int64_t>(candidates.size());
  // Each row is written to its own slot, so the table order is fixed.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < n; ++c) {
    table[c] = ScoreOne(model, seq, ids, candidates[c], direction);
  }
  return table;
}

const SpanScore& SelectBest(std::span<const SpanScore> table) {
  return SelectBy(table, [](const SpanScore& s) { return s.score; });
}

const SpanScore& AblateSource(std::span<const SpanScore> table) {
  return SelectBy(table, [](const SpanScore& s) { return s.target_score; });
}

BestSpanResult BestSpan(const PaddedMlm& model, const TokenSeq& seq,
                        Direction direction, Execution execution) {
  if (seq.empty()) throw std::invalid_argument("cannot edit an empty sequence");
  BestSpanResult result;
  result.table = ScoreAllSpans(model, seq, direction, execution);
  result.winner = SelectBest(result.table);
  return result;
}

}  // namespace masker

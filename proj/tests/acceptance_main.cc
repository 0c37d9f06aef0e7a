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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bleu_cases.h"
#include "count_oracle.h"
#include "masker/editor.h"
#include "masker/eval.h"
#include "masker/mlm.h"
#include "masker/pipeline.h"
#include "masker/scoring.h"
#include "masker/synth.h"
#include "reference_table.h"
#include "test_util.h"

namespace masker {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

std::vector<std::string> EditAll(const PaddedMlm& model,
                                 const std::vector<std::string>& lines,
                                 Direction direction, bool ablate = false) {
  std::vector<std::string> out;
  for (const EditResult& r :
       BatchEdit(model, lines, direction, 1, {.ablate_source = ablate})) {
    out.push_back(Detokenize(r.output));
  }
  return out;
}

struct GoldSides {
  std::vector<std::string> source, target;
};

GoldSides Split(const std::vector<GoldPair>& gold) {
  GoldSides sides;
  for (const GoldPair& pair : gold) {
    sides.source.push_back(pair.source);
    sides.target.push_back(pair.target);
  }
  return sides;
}

Outcome ReferenceTableArithmetic() {
  using testing::kReferenceRows;
  std::vector<SpanScore> table;
  double worst = 0.0;
  for (const auto& row : kReferenceRows) {
    const SpanScore s = ComposeScore({row.i, row.j}, {row.replacement}, row.l1,
                                     row.l2, row.l3, row.l4);
    worst = std::max({worst, std::abs(s.target_score - row.target_score),
                      std::abs(s.source_score - row.source_score),
                      std::abs(s.score - row.score)});
    table.push_back(s);
  }
  const SpanScore& best = SelectBest(table);
  const bool argmax_ok = best.replacement[0] == "and [PAD] [PAD] [PAD]" &&
                         std::abs(best.score - 0.488) <= 0.002;
  return {worst <= testing::kReferenceTolerance + 1e-12 && argmax_ok,
          Fmt("%zu rows, max deviation %.4f, argmax \"%s\" score %.3f",
              table.size(), worst, best.replacement[0].c_str(), best.score)};
}

Outcome PseudoLikelihoodProperties() {
  std::mt19937_64 rng(20201);
  double worst = 0.0;
  int bound_violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n_p = 1 + static_cast<int>(rng() % 6);
    const int vocab_size = 6 + static_cast<int>(rng() % 50);
    const PredictionGrid grid = testing::RandomGrid(rng, n_p, vocab_size);
    const auto span =
        testing::RandomIds(rng, static_cast<int>(rng() % (n_p + 1)), vocab_size);
    double direct = 1.0;
    for (int t = 0; t < n_p; ++t) {
      direct *= grid.prob(t, t < static_cast<int>(span.size()) ? span[t]
                                                               : Vocab::kPad);
    }
    worst = std::max(worst, std::abs(PseudoLikelihood(grid, span) - direct));
    const double l1 = SlotwiseLikelihood(grid, InfillArgmax(grid).ids);
    for (int s = 0; s < 100; ++s) {
      const auto other = testing::RandomIds(
          rng, static_cast<int>(rng() % (n_p + 1)), vocab_size);
      if (PseudoLikelihood(grid, other) > l1) ++bound_violations;
    }
  }
  return {worst <= 1e-12 && bound_violations == 0,
          Fmt("1000 grids, max |log-space - direct| %.2e, %d argmax bound "
              "violations in 100000 spans",
              worst, bound_violations)};
}

Outcome CountOracle() {
  const auto start = Clock::now();
  const std::vector<std::string> source = {"marie curie was born in poland .",
                                           "she died in france .", "a b"};
  const std::vector<std::string> target = {
      "marie curie was born in poland and died in france .", "x"};
  MlmConfig config;
  config.min_count = 1;
  config.spans_per_example = 1 << 20;
  const PaddedMlm model = testing::TrainOn(source, target, config);
  const auto diffs = testing::CompareWithOracle(
      model, testing::BruteForceCounts(testing::TokenizeLines(source),
                                       testing::TokenizeLines(target),
                                       config.n_p, config.k_ctx));

  std::mt19937_64 rng(5);
  const auto& tokens = model.vocab().tokens();
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    MaskedInput input;
    input.domain = i % 2 ? Domain::kSource : Domain::kTarget;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      input.left.push_back(tokens[pick(rng)]);
    }
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      input.right.push_back(tokens[pick(rng)]);
    }
    const PredictionGrid grid = model.Predict(input);
    for (int t = 0; t < grid.num_slots(); ++t) {
      double sum = 0.0;
      for (double p : grid.slot(t)) sum += p;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  const double seconds = SecondsSince(start);
  return {diffs.empty() && worst <= 1e-9 && seconds < 1.0,
          Fmt("%zu table differences, max |sum - 1| %.1e, %.3f s",
              diffs.size(), worst, seconds)};
}

Outcome FusionEndToEnd() {
  const auto start = Clock::now();
  const SynthData data = GenerateFusion({});
  const PaddedMlm model =
      testing::TrainOn(data.source_corpus, data.target_corpus);
  const GoldSides gold = Split(data.gold);
  const double to_unfused =
      ExactScore(EditAll(model, gold.target, kTargetToSource), gold.source);
  const double to_fused =
      ExactScore(EditAll(model, gold.source, kSourceToTarget), gold.target);
  const double seconds = SecondsSince(start);
  return {to_unfused >= 70.0 && to_fused < to_unfused && to_fused >= 40.0 &&
              seconds < 120.0,
          Fmt("fused->unfused %.1f, unfused->fused %.1f Exact on %zu pairs, "
              "%.1f s",
              to_unfused, to_fused, gold.source.size(), seconds)};
}

Outcome SourceScoreAblation() {
  SynthConfig synth;
  synth.distractor_rate = 0.3;
  const SynthData data = GenerateFusion(synth);
  // Rare names stay in the vocabulary instead of collapsing to [UNK].
  MlmConfig config;
  config.min_count = 1;
  const PaddedMlm model =
      testing::TrainOn(data.source_corpus, data.target_corpus, config);
  const GoldSides gold = Split(data.gold);
  const double full =
      ExactScore(EditAll(model, gold.source, kSourceToTarget), gold.target);
  const double ablated = ExactScore(
      EditAll(model, gold.source, kSourceToTarget, /*ablate=*/true),
      gold.target);
  const double relative = full > 0.0 ? (full - ablated) / full : 0.0;
  return {relative >= 0.20,
          Fmt("unfused->fused Exact %.1f full vs %.1f ablated, relative drop "
              "%.1f%% (min_count=1)",
              full, ablated, 100.0 * relative)};
}

Outcome SentimentAnalog() {
  SynthConfig synth;
  synth.task = SynthTask::kPolarity;
  const SynthData data = GeneratePolarity(synth);
  const PaddedMlm model =
      testing::TrainOn(data.source_corpus, data.target_corpus);
  const GoldSides gold = Split(data.gold);
  const auto clf =
      NbClassifier::Train(testing::TokenizeLines(data.source_corpus),
                          testing::TokenizeLines(data.target_corpus));
  const double clf_accuracy =
      (TransferAccuracy(clf, gold.source, Label::kA) +
       TransferAccuracy(clf, gold.target, Label::kB)) /
      2.0;
  const std::vector<std::string> predictions =
      EditAll(model, gold.source, kSourceToTarget);
  const double transfer = TransferAccuracy(clf, predictions, Label::kB);
  const double bleu = Bleu(predictions, gold.target);
  return {clf_accuracy >= 95.0 && transfer >= 90.0 && bleu >= 80.0,
          Fmt("transfer accuracy %.1f, BLEU %.2f, classifier held-out "
              "accuracy %.1f",
              transfer, bleu, clf_accuracy)};
}

Outcome SilverDeterminism() {
  SynthConfig synth;
  synth.n_train = 2000;
  synth.n_test = 0;
  const SynthData data = GenerateFusion(synth);
  const PaddedMlm model =
      testing::TrainOn(data.source_corpus, data.target_corpus);
  std::vector<std::string> corpus(data.target_corpus.begin(),
                                  data.target_corpus.begin() + 300);
  for (std::size_t at : {0u, 17u, 150u, 302u}) {
    corpus.insert(corpus.begin() + at, at % 2 ? "   " : "");
  }
  std::string tsv[2], jsonl[2];
  std::size_t conserved = 0;
  const int workers[2] = {1, 8};
  for (int k = 0; k < 2; ++k) {
    const SilverResult r =
        GenerateSilver(model, corpus, kTargetToSource, workers[k]);
    std::ostringstream t, j;
    WriteSilverTsv(t, r.pairs);
    WriteSilverJsonl(j, r.pairs);
    tsv[k] = t.str();
    jsonl[k] = j.str();
    conserved += r.pairs.size() + r.skipped_lines.size() == corpus.size();
  }
  return {tsv[0] == tsv[1] && jsonl[0] == jsonl[1] && conserved == 2,
          Fmt("%zu lines (4 empty), TSV %s, JSONL %s across workers 1 and 8, "
              "conservation %s",
              corpus.size(), tsv[0] == tsv[1] ? "identical" : "DIFFERENT",
              jsonl[0] == jsonl[1] ? "identical" : "DIFFERENT",
              conserved == 2 ? "holds" : "BROKEN")};
}

Outcome MetricIdentities() {
  const std::vector<std::string> p = {"the food was great .", "a b c d e",
                                      "x"};
  const bool exact_id = ExactScore(p, p) == 100.0;
  const bool bleu_id = std::abs(Bleu(p, p) - 100.0) <= 1e-9;
  const bool lowercase =
      ExactScore(std::vector<std::string>{"Hello World", "THE Cat ."},
                 std::vector<std::string>{"hello  world", "the cat ."}) ==
          100.0 &&
      ExactScore(std::vector<std::string>{"hello world"},
                 std::vector<std::string>{"hello worlds"}) == 0.0;
  double worst = 0.0;
  for (const auto& c : testing::BleuCases()) {
    std::vector<std::string> hyps, refs;
    for (const auto& [h, r] : c.pairs) {
      hyps.push_back(h);
      refs.push_back(r);
    }
    worst = std::max(worst, std::abs(Bleu(hyps, refs) - c.expected));
  }
  const std::size_t cases = testing::BleuCases().size();
  return {exact_id && bleu_id && lowercase && worst <= 1e-6 && cases == 20,
          Fmt("exact(p,p) %s, bleu(p,p) %s, lowercasing %s, %zu BLEU oracle "
              "cases max deviation %.1e",
              exact_id ? "100" : "WRONG", bleu_id ? "100" : "WRONG",
              lowercase ? "ok" : "WRONG", cases, worst)};
}

}  // namespace
}  // namespace masker

int main() {
  using masker::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"reference score table arithmetic",
           masker::ReferenceTableArithmetic},
          {"pseudo-likelihood formula", masker::PseudoLikelihoodProperties},
          {"count model oracle equivalence", masker::CountOracle},
          {"synthetic fusion end-to-end", masker::FusionEndToEnd},
          {"source score ablation", masker::SourceScoreAblation},
          {"sentiment analog", masker::SentimentAnalog},
          {"silver pipeline determinism", masker::SilverDeterminism},
          {"metric identities", masker::MetricIdentities},
      };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("[%s] %zu. %s: %s\n", outcome.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

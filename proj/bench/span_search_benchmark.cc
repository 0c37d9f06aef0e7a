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

// Serial reference vs OpenMP kernels on the synthetic fusion task.
//
//   ./span_search_benchmark --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include "masker/editor.h"
#include "masker/mlm.h"
#include "masker/pipeline.h"
#include "masker/scoring.h"
#include "masker/synth.h"

namespace masker {
namespace {

const SynthData& Data() {
  static const SynthData* data = new SynthData(GenerateFusion({}));
  return *data;
}

std::vector<TokenSeq> TokenizeAll(const std::vector<std::string>& lines) {
  std::vector<TokenSeq> out;
  for (const std::string& line : lines) out.push_back(Tokenize(line));
  return out;
}

const PaddedMlm& Model() {
  static const PaddedMlm* model = new PaddedMlm(PaddedMlm::Train(
      TokenizeAll(Data().source_corpus), TokenizeAll(Data().target_corpus),
      {}, 1));
  return *model;
}

void BM_ScoreAllSpans(benchmark::State& state, Execution execution) {
  const PaddedMlm& model = Model();
  const TokenSeq seq = Tokenize(Data().source_corpus.front());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ScoreAllSpans(model, seq, kSourceToTarget, execution));
  }
  state.counters["candidates"] = EnumerateSpans(seq.size(), 4).size();
}
BENCHMARK_CAPTURE(BM_ScoreAllSpans, serial, Execution::kSerial)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_ScoreAllSpans, parallel, Execution::kParallel)
    ->UseRealTime()
    ->Unit(benchmark::kMicrosecond);

void BM_BatchEdit(benchmark::State& state) {
  const PaddedMlm& model = Model();
  const std::vector<std::string> lines(Data().target_corpus.begin(),
                                       Data().target_corpus.begin() + 500);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BatchEdit(model, lines, kTargetToSource, workers));
  }
  state.SetItemsProcessed(state.iterations() * lines.size());
}
BENCHMARK(BM_BatchEdit)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_Train(benchmark::State& state) {
  const auto source = TokenizeAll(Data().source_corpus);
  const auto target = TokenizeAll(Data().target_corpus);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PaddedMlm::Train(source, target, {}, workers));
  }
}
BENCHMARK(BM_Train)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace masker

BENCHMARK_MAIN();

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

#ifndef MASKER_SYNTH_H_
#define MASKER_SYNTH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace masker {

// Toy parallel tasks. Only the gold pairs are aligned; the two training
// corpora are sampled independently and never share a sentence with the gold
// set.
//
// kFusion:   source = unfused "<first> <last> <vp1> . <pron> <vp2> ."
//            target = fused   "<first> <last> <vp1> <conn> <vp2> ."
// kPolarity: source = negative reviews, target = positive reviews that differ
//            only in the polar adjective.
enum class SynthTask { kFusion, kPolarity };

struct SynthConfig {
  SynthTask task = SynthTask::kFusion;
  int n_train = 5000;  // lines per corpus
  int n_test = 200;    // gold pairs
  std::uint64_t seed = 7;
  // Fraction of fusion lines whose surname is replaced by a one-off rare
  // name. Ignored for kPolarity.
  double distractor_rate = 0.0;

  void Validate() const;
};

struct GoldPair {
  std::string source;
  std::string target;
};

struct SynthData {
  std::vector<std::string> source_corpus;
  std::vector<std::string> target_corpus;
  std::vector<GoldPair> gold;
};

SynthData GenerateFusion(const SynthConfig& config);
SynthData GeneratePolarity(const SynthConfig& config);
SynthData GenerateSynth(const SynthConfig& config);

// Writes source.txt, target.txt and gold.tsv (source TAB target) into `dir`,
// creating it if needed.
void WriteSynthData(const SynthData& data, const std::string& dir);

// Fusion grammar.
enum class VpClass { kGood, kBad, kReason };

// "because" before a reason, "and" between events of the same polarity,
// "but" between contrasting events.
std::string_view ConnectiveFor(VpClass first, VpClass second);

struct FusionSentence {
  std::string unfused;
  std::string fused;
  VpClass first_class;
  VpClass second_class;
  std::string connective;
};

// Every distractor-free sentence the fusion grammar can produce.
std::vector<FusionSentence> EnumerateFusionGrammar();

// Polarity lexicon: each negative adjective maps to one positive adjective.
const std::vector<std::pair<std::string, std::string>>& PolarityLexicon();

}  // namespace masker

#endif  // MASKER_SYNTH_H_

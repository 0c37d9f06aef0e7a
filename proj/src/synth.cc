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

#include "masker/synth.h"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "masker/file_util.h"

namespace masker {
namespace {

struct Person {
  const char* first;
  const char* last;
  bool female;
};

constexpr Person kPeople[] = {
    {"anna", "berg", true},   {"mary", "clark", true},
    {"lucy", "hale", true},   {"emma", "stone", true},
    {"sara", "wells", true},  {"julia", "price", true},
    {"john", "reed", false},  {"peter", "hart", false},
    {"mark", "cole", false},  {"david", "lane", false},
    {"tom", "ford", false},   {"paul", "grant", false},
};

constexpr const char* kGoodVerbs[] = {"found", "fixed", "cleaned", "bought"};
constexpr const char* kBadVerbs[] = {"lost", "broke", "dropped", "forgot"};
constexpr const char* kObjects[] = {"keys", "phone", "bike",
                                    "car",  "wallet", "ticket"};
constexpr const char* kReasons[] = {"was very tired", "felt sick",
                                    "had no time",    "was late",
                                    "needed money",   "was busy"};

constexpr int kNumPeople = std::size(kPeople);
constexpr int kNumVerbs = std::size(kGoodVerbs);
constexpr int kNumObjects = std::size(kObjects);
constexpr int kNumReasons = std::size(kReasons);

// Syllables for one-off rare names; none of the results is a grammar word.
constexpr const char* kSyllables[] = {"ka", "zo", "vi", "lu", "ter", "mo",
                                      "ri", "xa", "bel", "dun", "qui", "ro",
                                      "sta", "vel", "nor", "pik", "zan", "ul",
                                      "gor", "fen"};

struct Vp {
  VpClass cls;
  int verb = 0;    // index into the class's verb list
  int object = 0;  // or reason index for kReason
};

struct FusionTuple {
  int person = 0;
  Vp first;
  Vp second;

  auto Key() const {
    return std::tuple(person, static_cast<int>(first.cls), first.verb,
                      first.object, static_cast<int>(second.cls), second.verb,
                      second.object);
  }
};

std::string RenderVp(const Vp& vp, bool female) {
  if (vp.cls == VpClass::kReason) return kReasons[vp.object];
  const char* verb =
      vp.cls == VpClass::kGood ? kGoodVerbs[vp.verb] : kBadVerbs[vp.verb];
  return std::string(verb) + (female ? " her " : " his ") + kObjects[vp.object];
}

std::pair<std::string, std::string> RenderFusion(const FusionTuple& t,
                                                 const std::string& surname) {
  const Person& p = kPeople[t.person];
  const std::string head =
      std::string(p.first) + " " + surname + " " + RenderVp(t.first, p.female);
  const std::string tail = RenderVp(t.second, p.female) + " .";
  const std::string pronoun = p.female ? "she " : "he ";
  std::string unfused = head + " . " + pronoun + tail;
  // A reason clause keeps its subject: ". she was late" -> "because she was
  // late".
  std::string fused = head + " " +
                      std::string(ConnectiveFor(t.first.cls, t.second.cls)) +
                      " " + (t.second.cls == VpClass::kReason ? pronoun : "") +
                      tail;
  return {std::move(unfused), std::move(fused)};
}

// The two clauses draw verbs and objects from disjoint halves of the lists,
// so a clause's words also tell which clause it is.
constexpr int kVerbsPerClause = kNumVerbs / 2;
constexpr int kObjectsPerClause = kNumObjects / 2;

Vp SampleVp(std::mt19937_64& rng, int clause) {
  std::uniform_int_distribution<int> cls_dist(0, clause == 0 ? 1 : 2);
  Vp vp;
  vp.cls = static_cast<VpClass>(cls_dist(rng));
  if (vp.cls == VpClass::kReason) {
    vp.object = std::uniform_int_distribution<int>(0, kNumReasons - 1)(rng);
  } else {
    vp.verb = clause * kVerbsPerClause +
              std::uniform_int_distribution<int>(0, kVerbsPerClause - 1)(rng);
    vp.object =
        clause * kObjectsPerClause +
        std::uniform_int_distribution<int>(0, kObjectsPerClause - 1)(rng);
  }
  return vp;
}

std::vector<Vp> AllVps(int clause) {
  std::vector<Vp> out;
  for (VpClass cls : {VpClass::kGood, VpClass::kBad}) {
    for (int v = 0; v < kVerbsPerClause; ++v) {
      for (int o = 0; o < kObjectsPerClause; ++o) {
        out.push_back({cls, clause * kVerbsPerClause + v,
                       clause * kObjectsPerClause + o});
      }
    }
  }
  if (clause == 1) {
    for (int r = 0; r < kNumReasons; ++r) out.push_back({VpClass::kReason, 0, r});
  }
  return out;
}

FusionTuple SampleFusion(std::mt19937_64& rng) {
  FusionTuple t;
  t.person = std::uniform_int_distribution<int>(0, kNumPeople - 1)(rng);
  t.first = SampleVp(rng, 0);
  t.second = SampleVp(rng, 1);
  return t;
}

class RareNameSource {
 public:
  std::string Next(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, std::size(kSyllables) - 1);
    for (int syllables = 3;; ++syllables) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::string name;
        for (int s = 0; s < syllables; ++s) name += kSyllables[pick(rng)];
        if (used_.insert(name).second) return name;
      }
    }
  }

 private:
  std::unordered_set<std::string> used_;
};

bool Bernoulli(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Polarity grammar.
struct NounEntry {
  const char* noun;
  int lexicon_index;
};

constexpr NounEntry kNouns[] = {
    {"food", 0},  {"pizza", 1},   {"soup", 2}, {"staff", 3}, {"waiter", 3},
    {"service", 4}, {"delivery", 4}, {"room", 5}, {"table", 5}, {"bar", 6},
};
constexpr const char* kOpeners[] = {"honestly", "overall", "today",
                                    "again",    "frankly", "tonight"};
constexpr const char* kPlaces[] = {"bellini", "casa",  "rosa", "kato",
                                   "olive",   "harbor", "fig", "juniper"};

struct PolarityTuple {
  int tmpl = 0;
  int opener = 0;
  int place = 0;
  int noun = 0;
};

std::string RenderPolarity(const PolarityTuple& t, const std::string& adj) {
  const std::string core =
      std::string("the ") + kNouns[t.noun].noun + " was " + adj;
  switch (t.tmpl) {
    case 0:
      return core + " .";
    case 1:
      return std::string(kOpeners[t.opener]) + " " + core + " .";
    case 2:
      return std::string("at ") + kPlaces[t.place] + " " + core + " .";
    case 3:
      return core + " at " + kPlaces[t.place] + " .";
    default:
      return std::string(kOpeners[t.opener]) + " at " + kPlaces[t.place] +
             " " + core + " .";
  }
}

std::vector<PolarityTuple> AllPolarityTuples() {
  std::vector<PolarityTuple> all;
  const int num_nouns = std::size(kNouns);
  for (int n = 0; n < num_nouns; ++n) {
    all.push_back({0, 0, 0, n});
    for (int o = 0; o < static_cast<int>(std::size(kOpeners)); ++o) {
      all.push_back({1, o, 0, n});
    }
    for (int p = 0; p < static_cast<int>(std::size(kPlaces)); ++p) {
      all.push_back({2, 0, p, n});
      all.push_back({3, 0, p, n});
      for (int o = 0; o < static_cast<int>(std::size(kOpeners)); ++o) {
        all.push_back({4, o, p, n});
      }
    }
  }
  return all;
}

}  // namespace

void SynthConfig::Validate() const {
  if (n_train < 1) throw std::invalid_argument("n_train must be >= 1");
  if (n_test < 0) throw std::invalid_argument("n_test must be >= 0");
  if (!(distractor_rate >= 0.0 && distractor_rate <= 1.0)) {
    throw std::invalid_argument("distractor_rate must be in [0, 1]");
  }
}

std::string_view ConnectiveFor(VpClass first, VpClass second) {
  if (second == VpClass::kReason) return "because";
  return first == second ? "and" : "but";
}

std::vector<FusionSentence> EnumerateFusionGrammar() {
  const std::vector<Vp> firsts = AllVps(0);
  const std::vector<Vp> seconds = AllVps(1);
  std::vector<FusionSentence> out;
  for (int p = 0; p < kNumPeople; ++p) {
    for (const Vp& a : firsts) {
      for (const Vp& b : seconds) {
        const FusionTuple t{p, a, b};
        auto [unfused, fused] = RenderFusion(t, kPeople[p].last);
        out.push_back({std::move(unfused), std::move(fused), a.cls, b.cls,
                       std::string(ConnectiveFor(a.cls, b.cls))});
      }
    }
  }
  return out;
}

SynthData GenerateFusion(const SynthConfig& config) {
  config.Validate();
  std::mt19937_64 rng(config.seed);
  RareNameSource rare_names;
  auto surname_for = [&](const FusionTuple& t) -> std::string {
    if (Bernoulli(rng, config.distractor_rate)) return rare_names.Next(rng);
    return kPeople[t.person].last;
  };

  SynthData data;
  std::set<decltype(FusionTuple().Key())> held_out;
  int attempts = 0;
  while (static_cast<int>(data.gold.size()) < config.n_test) {
    if (++attempts > 100 * (config.n_test + 1)) {
      throw std::invalid_argument("n_test is too large for the fusion grammar");
    }
    const FusionTuple t = SampleFusion(rng);
    if (!held_out.insert(t.Key()).second) continue;
    auto [unfused, fused] = RenderFusion(t, surname_for(t));
    data.gold.push_back({std::move(unfused), std::move(fused)});
  }

  auto sample_train = [&](bool fused_side) {
    std::vector<std::string> corpus;
    corpus.reserve(config.n_train);
    while (static_cast<int>(corpus.size()) < config.n_train) {
      const FusionTuple t = SampleFusion(rng);
      if (held_out.contains(t.Key())) continue;
      auto [unfused, fused] = RenderFusion(t, surname_for(t));
      corpus.push_back(fused_side ? std::move(fused) : std::move(unfused));
    }
    return corpus;
  };
  data.source_corpus = sample_train(/*fused_side=*/false);
  data.target_corpus = sample_train(/*fused_side=*/true);
  return data;
}

const std::vector<std::pair<std::string, std::string>>& PolarityLexicon() {
  static const auto* lexicon =
      new std::vector<std::pair<std::string, std::string>>{
          {"awful", "great"}, {"bland", "tasty"}, {"cold", "warm"},
          {"rude", "friendly"}, {"slow", "fast"}, {"dirty", "clean"},
          {"noisy", "quiet"}};
  return *lexicon;
}

SynthData GeneratePolarity(const SynthConfig& config) {
  config.Validate();
  std::mt19937_64 rng(config.seed);
  std::vector<PolarityTuple> pool = AllPolarityTuples();
  if (config.n_test >= static_cast<int>(pool.size())) {
    throw std::invalid_argument("n_test is too large for the polarity grammar");
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  const auto& lexicon = PolarityLexicon();

  SynthData data;
  for (int i = 0; i < config.n_test; ++i) {
    const auto& [negative, positive] = lexicon[kNouns[pool[i].noun].lexicon_index];
    data.gold.push_back(
        {RenderPolarity(pool[i], negative), RenderPolarity(pool[i], positive)});
  }
  std::uniform_int_distribution<std::size_t> pick(config.n_test,
                                                  pool.size() - 1);
  for (int side = 0; side < 2; ++side) {
    std::vector<std::string>& corpus =
        side == 0 ? data.source_corpus : data.target_corpus;
    corpus.reserve(config.n_train);
    for (int i = 0; i < config.n_train; ++i) {
      const PolarityTuple& t = pool[pick(rng)];
      const auto& entry = lexicon[kNouns[t.noun].lexicon_index];
      corpus.push_back(
          RenderPolarity(t, side == 0 ? entry.first : entry.second));
    }
  }
  return data;
}

SynthData GenerateSynth(const SynthConfig& config) {
  return config.task == SynthTask::kFusion ? GenerateFusion(config)
                                           : GeneratePolarity(config);
}

void WriteSynthData(const SynthData& data, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto join = [](const std::vector<std::string>& lines) {
    std::string out;
    for (const std::string& line : lines) out += line + "\n";
    return out;
  };
  std::string gold;
  for (const GoldPair& pair : data.gold) {
    gold += pair.source + "\t" + pair.target + "\n";
  }
  const std::filesystem::path base(dir);
  WriteFileAtomically((base / "source.txt").string(), join(data.source_corpus));
  WriteFileAtomically((base / "target.txt").string(), join(data.target_corpus));
  WriteFileAtomically((base / "gold.tsv").string(), gold);
}

}  // namespace masker

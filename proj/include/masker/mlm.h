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

#ifndef MASKER_MLM_H_
#define MASKER_MLM_H_

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "masker/tokenizer.h"

namespace masker {

// Which of the two styles the joint model emulates. The domain is a key
// dimension of every count table, which is equivalent to prepending the
// [SOURCE]/[TARGET] tag to the masked input.
enum class Domain : std::uint8_t { kSource = 0, kTarget = 1 };

std::string_view DomainName(Domain domain);
TokenId DomainTag(Domain domain);

struct MlmConfig {
  int n_p = 4;                 // mask-block length
  int k_ctx = 2;               // visible tokens per side used as context
  double alpha = 0.1;          // additive smoothing at every backoff level
  int spans_per_example = 64;  // sampled spans per training line
  int min_count = 2;           // vocabulary threshold
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on n_p < 1, k_ctx < 0, alpha <= 0,
  // spans_per_example < 1 or min_count < 1.
  void Validate() const;

  friend bool operator==(const MlmConfig&, const MlmConfig&) = default;
};

// Interpolation weights for the full-context, left-only, slot-unigram and
// uniform levels.
inline constexpr std::array<double, 4> kBackoffWeights = {0.6, 0.25, 0.1,
                                                          0.05};

// A contiguous span of `del_len` tokens starting at `start`. del_len == 0 is
// the empty span: an insertion before token `start`.
struct SpanCandidate {
  int start = 0;
  int del_len = 0;

  friend bool operator==(const SpanCandidate&, const SpanCandidate&) = default;
};

// Every legal candidate for a sequence of `length` tokens, ordered by start
// then del_len.
std::vector<SpanCandidate> EnumerateSpans(std::size_t length, int n_p);

// domain tag ++ left ++ [MASK] x n_p ++ right.
struct MaskedInput {
  Domain domain = Domain::kSource;
  TokenSeq left;
  TokenSeq right;
};

MaskedInput MaskSpan(const TokenSeq& seq, SpanCandidate span, Domain domain);

// Surface form of the full masked sequence, including the domain tag.
std::string RenderMaskedInput(const MaskedInput& input, int n_p);

struct TrainingExample {
  MaskedInput input;
  // Exactly n_p entries: the masked tokens in order, then "[PAD]" fill.
  std::vector<std::string> targets;
};

TrainingExample MakeExample(const TokenSeq& line, Domain domain,
                            SpanCandidate span, int n_p);

// Samples up to config.spans_per_example distinct (start, del_len) pairs
// uniformly without replacement. All pairs are used when there are no more
// than the cap. Output is ordered by (start, del_len).
std::vector<TrainingExample> MakeTrainingExamples(const TokenSeq& line,
                                                  Domain domain,
                                                  const MlmConfig& config,
                                                  std::mt19937_64& rng);

// Seeds the generator used for line `index` of `domain`'s corpus. Every
// per-line generator derives from the single run seed, so training output does
// not depend on how lines are sharded across workers.
std::mt19937_64 LineRng(std::uint64_t seed, Domain domain, std::size_t index);

// Per-slot distributions over the whole vocabulary ([PAD] included).
class PredictionGrid {
 public:
  PredictionGrid() = default;
  explicit PredictionGrid(std::vector<std::vector<double>> slots);

  int num_slots() const { return static_cast<int>(slots_.size()); }
  std::size_t vocab_size() const {
    return slots_.empty() ? 0 : slots_.front().size();
  }
  std::span<const double> slot(int t) const { return slots_.at(t); }
  double prob(int t, TokenId id) const { return slots_.at(t).at(id); }

  friend bool operator==(const PredictionGrid&,
                         const PredictionGrid&) = default;

 private:
  std::vector<std::vector<double>> slots_;
};

// Per-slot independent argmax (the maximum pseudo-likelihood infill). Ties go
// to the lowest vocabulary id.
struct Infill {
  std::vector<TokenId> ids;
  std::vector<double> probs;
};

Infill InfillArgmax(const PredictionGrid& grid);

// Drops every [PAD], keeping the remaining order.
TokenSeq StripPads(std::span<const std::string> slot_choices);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

enum class BackoffLevel : int { kFull = 0, kLeft = 1, kSlot = 2 };
inline constexpr int kNumCountLevels = 3;

struct CountRow {
  std::uint64_t total = 0;
  std::unordered_map<TokenId, std::uint64_t> counts;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Context key -> counts. Keys pack (domain, slot, left ids, right ids) as
// bytes; see PaddedMlm::ContextKey.
using CountTable = std::unordered_map<std::string, CountRow>;

// Count-based padded masked language model with linear-interpolation backoff.
//
// For slot t of a masked input, the prediction is
//
//   p(w) = sum_l weight_l * (c_l(w) + alpha) / (N_l + alpha * |V|)
//
// over the full-context, left-only and slot-unigram levels, plus
// weight_uniform / |V|. c_l and N_l are the counts and total under the level's
// context key; an unseen key contributes a uniform term. Context tokens are
// mapped to [UNK] when they are out of vocabulary.
class PaddedMlm {
 public:
  PaddedMlm(Vocab vocab, MlmConfig config);

  // Vocabulary over the union of both corpora. Lines are sharded across
  // `workers` OpenMP threads; local tables are merged by summation.
  static PaddedMlm Train(std::span<const TokenSeq> source_corpus,
                         std::span<const TokenSeq> target_corpus,
                         const MlmConfig& config, int workers = 1);

  void AddExample(const TrainingExample& example);
  void AddLine(const TokenSeq& line, Domain domain, std::mt19937_64& rng);
  void Merge(const PaddedMlm& other);

  PredictionGrid Predict(const MaskedInput& input) const;

  void Save(const std::string& path) const;
  static PaddedMlm Load(const std::string& path);

  const Vocab& vocab() const { return vocab_; }
  const MlmConfig& config() const { return config_; }
  const CountTable& table(BackoffLevel level) const {
    return tables_[static_cast<int>(level)];
  }

  // Slot is 0-based. `left`/`right` are the visible neighbours; only the
  // k_ctx nearest tokens on each side are used.
  std::string ContextKey(BackoffLevel level, Domain domain, int slot,
                         const TokenSeq& left, const TokenSeq& right) const;
  std::uint64_t Count(BackoffLevel level, Domain domain, int slot,
                      const TokenSeq& left, const TokenSeq& right,
                      TokenId token) const;

  friend bool operator==(const PaddedMlm&, const PaddedMlm&) = default;

 private:
  std::string KeyFromIds(BackoffLevel level, Domain domain, int slot,
                         std::span<const TokenId> left,
                         std::span<const TokenId> right) const;
  std::vector<TokenId> LeftContext(const TokenSeq& left) const;
  std::vector<TokenId> RightContext(const TokenSeq& right) const;

  Vocab vocab_;
  MlmConfig config_;
  std::array<CountTable, kNumCountLevels> tables_;
};

}  // namespace masker

#endif  // MASKER_MLM_H_

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

#ifndef MASKER_EVAL_H_
#define MASKER_EVAL_H_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "masker/tokenizer.h"

namespace masker {

// Percentage of pairs that match after ASCII lowercasing and whitespace
// normalization. Throws std::invalid_argument on a length mismatch.
double ExactScore(std::span<const std::string> predictions,
                  std::span<const std::string> references);

inline constexpr int kBleuMaxOrder = 4;
inline constexpr double kBleuEpsilon = 1e-9;

// Corpus BLEU-4 in [0, 100], one reference per prediction, uniform weights
// and the usual brevity penalty. An order with matches but no clipped hits
// uses kBleuEpsilon as its numerator; an order for which the hypotheses hold
// no n-grams at all is left out and the remaining weights renormalized.
double Bleu(std::span<const std::string> predictions,
            std::span<const std::string> references);

enum class Label { kA = 0, kB = 1 };

// Multinomial naive Bayes over token counts with additive smoothing.
class NbClassifier {
 public:
  // Throws std::invalid_argument when either corpus is empty or smoothing is
  // not positive.
  static NbClassifier Train(std::span<const TokenSeq> corpus_a,
                            std::span<const TokenSeq> corpus_b,
                            double smoothing = 1.0);

  Label Classify(const TokenSeq& doc) const;
  // Unnormalized log posterior. Tokens unseen in training are ignored.
  double LogScore(const TokenSeq& doc, Label label) const;
  // log p(token | label); for testing the per-class distributions.
  double LogTokenProb(const std::string& token, Label label) const;

  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

 private:
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> index_;
  double log_prior_[2] = {0.0, 0.0};
  std::vector<double> log_prob_[2];
};

// 100 x fraction of `docs` classified as `intended`.
double TransferAccuracy(const NbClassifier& classifier,
                        std::span<const std::string> docs, Label intended);

}  // namespace masker

#endif  // MASKER_EVAL_H_

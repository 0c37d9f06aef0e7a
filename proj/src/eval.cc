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

#include "masker/eval.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace masker {
namespace {

void CheckSameLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("predictions and references differ in length");
  }
}

std::string Canonical(const std::string& text) {
  std::string out = NormalizeWhitespace(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts CountNgrams(const TokenSeq& tokens, int order) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + order)];
  }
  return counts;
}

}  // namespace

double ExactScore(std::span<const std::string> predictions,
                  std::span<const std::string> references) {
  CheckSameLength(predictions.size(), references.size());
  if (predictions.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (Canonical(predictions[i]) == Canonical(references[i])) ++hits;
  }
  return 100.0 * static_cast<double>(hits) /
         static_cast<double>(predictions.size());
}

double Bleu(std::span<const std::string> predictions,
            std::span<const std::string> references) {
  CheckSameLength(predictions.size(), references.size());
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;
  std::int64_t matches[kBleuMaxOrder] = {};
  std::int64_t totals[kBleuMaxOrder] = {};
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const TokenSeq hyp = Tokenize(predictions[i]);
    const TokenSeq ref = Tokenize(references[i]);
    hyp_len += static_cast<std::int64_t>(hyp.size());
    ref_len += static_cast<std::int64_t>(ref.size());
    for (int n = 1; n <= kBleuMaxOrder; ++n) {
      const NgramCounts hyp_counts = CountNgrams(hyp, n);
      const NgramCounts ref_counts = CountNgrams(ref, n);
      for (const auto& [gram, count] : hyp_counts) {
        totals[n - 1] += count;
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) matches[n - 1] += std::min(count, it->second);
      }
    }
  }
  if (hyp_len == 0) return 0.0;

  double log_precision = 0.0;
  int orders = 0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    if (totals[n] == 0) continue;
    const double numerator =
        matches[n] == 0 ? kBleuEpsilon : static_cast<double>(matches[n]);
    log_precision += std::log(numerator / static_cast<double>(totals[n]));
    ++orders;
  }
  log_precision /= orders;
  const double log_bp =
      hyp_len < ref_len
          ? 1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len)
          : 0.0;
  return 100.0 * std::exp(log_precision + log_bp);
}

NbClassifier NbClassifier::Train(std::span<const TokenSeq> corpus_a,
                                 std::span<const TokenSeq> corpus_b,
                                 double smoothing) {
  if (corpus_a.empty() || corpus_b.empty()) {
    throw std::invalid_argument("each class needs at least one document");
  }
  if (!(smoothing > 0.0)) throw std::invalid_argument("smoothing must be > 0");

  NbClassifier clf;
  std::map<std::string, std::size_t> sorted;
  for (auto corpus : {corpus_a, corpus_b}) {
    for (const TokenSeq& doc : corpus) {
      for (const std::string& token : doc) sorted.emplace(token, 0);
    }
  }
  for (auto& [token, index] : sorted) {
    index = clf.vocabulary_.size();
    clf.vocabulary_.push_back(token);
  }
  clf.index_.insert(sorted.begin(), sorted.end());

  const double docs_total =
      static_cast<double>(corpus_a.size() + corpus_b.size());
  const std::span<const TokenSeq> corpora[2] = {corpus_a, corpus_b};
  const double v = static_cast<double>(clf.vocabulary_.size());
  for (int label = 0; label < 2; ++label) {
    clf.log_prior_[label] =
        std::log(static_cast<double>(corpora[label].size()) / docs_total);
    std::vector<double> counts(clf.vocabulary_.size(), 0.0);
    double total = 0.0;
    for (const TokenSeq& doc : corpora[label]) {
      for (const std::string& token : doc) {
        counts[clf.index_.at(token)] += 1.0;
        total += 1.0;
      }
    }
    std::vector<double>& log_prob = clf.log_prob_[label];
    log_prob.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      log_prob[i] = std::log((counts[i] + smoothing) / (total + smoothing * v));
    }
  }
  return clf;
}

double NbClassifier::LogScore(const TokenSeq& doc, Label label) const {
  const int l = static_cast<int>(label);
  double score = log_prior_[l];
  for (const std::string& token : doc) {
    auto it = index_.find(token);
    if (it != index_.end()) score += log_prob_[l][it->second];
  }
  return score;
}

double NbClassifier::LogTokenProb(const std::string& token, Label label) const {
  return log_prob_[static_cast<int>(label)].at(index_.at(token));
}

Label NbClassifier::Classify(const TokenSeq& doc) const {
  return LogScore(doc, Label::kB) > LogScore(doc, Label::kA) ? Label::kB
                                                             : Label::kA;
}

double TransferAccuracy(const NbClassifier& classifier,
                        std::span<const std::string> docs, Label intended) {
  if (docs.empty()) return 0.0;
  std::size_t hits = 0;
  for (const std::string& doc : docs) {
    if (classifier.Classify(Tokenize(doc)) == intended) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(docs.size());
}

}  // namespace masker

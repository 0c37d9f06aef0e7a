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

#include "masker/mlm.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <utility>

#include "masker/file_util.h"

namespace masker {
namespace {

constexpr char kModelMagic[8] = {'M', 'S', 'K', 'R', 'P', 'M', 'L', 'M'};
constexpr std::uint32_t kModelVersion = 1;
constexpr char kEndMarker[4] = {'E', 'N', 'D', '.'};

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void AppendU32(std::string& key, std::uint32_t v) {
  char bytes[4];
  std::memcpy(bytes, &v, sizeof(v));
  key.append(bytes, sizeof(bytes));
}

class Writer {
 public:
  template <typename T>
  void Pod(T v) {
    char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    out_.append(bytes, sizeof(T));
  }
  void Bytes(std::string_view s) {
    Pod<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_.append(s);
  }
  void Raw(const char* data, std::size_t n) { out_.append(data, n); }
  std::string& str() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  template <typename T>
  T Pod() {
    Need(sizeof(T));
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::string Bytes() {
    const auto n = Pod<std::uint32_t>();
    Need(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view Raw(std::size_t n) {
    Need(n);
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == data_.size(); }

 private:
  void Need(std::size_t n) const {
    if (data_.size() - pos_ < n) {
      throw FormatError("model file is truncated");
    }
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view DomainName(Domain domain) {
  return domain == Domain::kSource ? "source" : "target";
}

TokenId DomainTag(Domain domain) {
  return domain == Domain::kSource ? Vocab::kSource : Vocab::kTarget;
}

void MlmConfig::Validate() const {
  if (n_p < 1) throw std::invalid_argument("n_p must be >= 1");
  if (n_p > 255) throw std::invalid_argument("n_p must be <= 255");
  if (k_ctx < 0) throw std::invalid_argument("k_ctx must be >= 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (spans_per_example < 1) {
    throw std::invalid_argument("spans_per_example must be >= 1");
  }
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
}

std::vector<SpanCandidate> EnumerateSpans(std::size_t length, int n_p) {
  std::vector<SpanCandidate> spans;
  const int n = static_cast<int>(length);
  for (int start = 0; start <= n; ++start) {
    const int max_len = std::min(n_p, n - start);
    for (int len = 0; len <= max_len; ++len) spans.push_back({start, len});
  }
  return spans;
}

MaskedInput MaskSpan(const TokenSeq& seq, SpanCandidate span, Domain domain) {
  if (span.start < 0 || span.del_len < 0 ||
      static_cast<std::size_t>(span.start + span.del_len) > seq.size()) {
    throw std::out_of_range("span outside sequence");
  }
  MaskedInput input;
  input.domain = domain;
  input.left.assign(seq.begin(), seq.begin() + span.start);
  input.right.assign(seq.begin() + span.start + span.del_len, seq.end());
  return input;
}

std::string RenderMaskedInput(const MaskedInput& input, int n_p) {
  std::string out(input.domain == Domain::kSource ? kSourceToken
                                                 : kTargetToken);
  for (const std::string& t : input.left) out += " " + t;
  for (int i = 0; i < n_p; ++i) out += " " + std::string(kMaskToken);
  for (const std::string& t : input.right) out += " " + t;
  return out;
}

TrainingExample MakeExample(const TokenSeq& line, Domain domain,
                            SpanCandidate span, int n_p) {
  if (span.del_len > n_p) throw std::invalid_argument("span longer than n_p");
  TrainingExample example;
  example.input = MaskSpan(line, span, domain);
  example.targets.assign(line.begin() + span.start,
                         line.begin() + span.start + span.del_len);
  example.targets.resize(n_p, std::string(kPadToken));
  return example;
}

std::vector<TrainingExample> MakeTrainingExamples(const TokenSeq& line,
                                                  Domain domain,
                                                  const MlmConfig& config,
                                                  std::mt19937_64& rng) {
  std::vector<SpanCandidate> spans = EnumerateSpans(line.size(), config.n_p);
  const auto cap = static_cast<std::size_t>(config.spans_per_example);
  if (spans.size() > cap) {
    // Partial Fisher-Yates: the first `cap` entries become a uniform sample.
    for (std::size_t i = 0; i < cap; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, spans.size() - 1);
      std::swap(spans[i], spans[pick(rng)]);
    }
    spans.resize(cap);
    std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
      return std::pair(a.start, a.del_len) < std::pair(b.start, b.del_len);
    });
  }
  std::vector<TrainingExample> examples;
  examples.reserve(spans.size());
  for (SpanCandidate span : spans) {
    examples.push_back(MakeExample(line, domain, span, config.n_p));
  }
  return examples;
}

std::mt19937_64 LineRng(std::uint64_t seed, Domain domain, std::size_t index) {
  std::uint64_t state = SplitMix64(seed);
  state = SplitMix64(state ^ static_cast<std::uint64_t>(domain));
  state = SplitMix64(state ^ static_cast<std::uint64_t>(index));
  return std::mt19937_64(state);
}

PredictionGrid::PredictionGrid(std::vector<std::vector<double>> slots)
    : slots_(std::move(slots)) {}

Infill InfillArgmax(const PredictionGrid& grid) {
  Infill infill;
  for (int t = 0; t < grid.num_slots(); ++t) {
    std::span<const double> dist = grid.slot(t);
    TokenId best = 0;
    for (std::size_t id = 1; id < dist.size(); ++id) {
      if (dist[id] > dist[best]) best = static_cast<TokenId>(id);
    }
    infill.ids.push_back(best);
    infill.probs.push_back(dist[best]);
  }
  return infill;
}

TokenSeq StripPads(std::span<const std::string> slot_choices) {
  TokenSeq out;
  for (const std::string& token : slot_choices) {
    if (token != kPadToken) out.push_back(token);
  }
  return out;
}

PaddedMlm::PaddedMlm(Vocab vocab, MlmConfig config)
    : vocab_(std::move(vocab)), config_(config) {
  config_.Validate();
}

PaddedMlm PaddedMlm::Train(std::span<const TokenSeq> source_corpus,
                           std::span<const TokenSeq> target_corpus,
                           const MlmConfig& config, int workers) {
  config.Validate();
  if (source_corpus.empty() || target_corpus.empty()) {
    throw std::invalid_argument("both training corpora must be non-empty");
  }
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  std::vector<TokenSeq> all;
  all.reserve(source_corpus.size() + target_corpus.size());
  all.insert(all.end(), source_corpus.begin(), source_corpus.end());
  all.insert(all.end(), target_corpus.begin(), target_corpus.end());
  Vocab vocab = Vocab::Build(all, config.min_count);

  struct Job {
    const TokenSeq* line;
    Domain domain;
    std::size_t index;
  };
  std::vector<Job> jobs;
  jobs.reserve(all.size());
  for (std::size_t i = 0; i < source_corpus.size(); ++i) {
    jobs.push_back({&source_corpus[i], Domain::kSource, i});
  }
  for (std::size_t i = 0; i < target_corpus.size(); ++i) {
    jobs.push_back({&target_corpus[i], Domain::kTarget, i});
  }

  std::vector<PaddedMlm> shards(workers, PaddedMlm(vocab, config));
  const auto num_jobs = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t j = 0; j < num_jobs; ++j) {
    const Job& job = jobs[j];
    if (job.line->empty()) continue;
    std::mt19937_64 rng = LineRng(config.seed, job.domain, job.index);
    shards[omp_get_thread_num()].AddLine(*job.line, job.domain, rng);
  }

  PaddedMlm model(std::move(vocab), config);
  for (const PaddedMlm& shard : shards) model.Merge(shard);
  return model;
}

void PaddedMlm::AddLine(const TokenSeq& line, Domain domain,
                        std::mt19937_64& rng) {
  for (const TrainingExample& example :
       MakeTrainingExamples(line, domain, config_, rng)) {
    AddExample(example);
  }
}

void PaddedMlm::AddExample(const TrainingExample& example) {
  if (static_cast<int>(example.targets.size()) != config_.n_p) {
    throw std::invalid_argument("training example must have n_p targets");
  }
  const std::vector<TokenId> left = LeftContext(example.input.left);
  const std::vector<TokenId> right = RightContext(example.input.right);
  for (int slot = 0; slot < config_.n_p; ++slot) {
    const TokenId target = vocab_.Lookup(example.targets[slot]);
    for (int level = 0; level < kNumCountLevels; ++level) {
      CountRow& row = tables_[level][KeyFromIds(
          static_cast<BackoffLevel>(level), example.input.domain, slot, left,
          right)];
      ++row.total;
      ++row.counts[target];
    }
  }
}

void PaddedMlm::Merge(const PaddedMlm& other) {
  if (!(vocab_ == other.vocab_) || !(config_ == other.config_)) {
    throw std::invalid_argument("cannot merge models with different setup");
  }
  for (int level = 0; level < kNumCountLevels; ++level) {
    for (const auto& [key, row] : other.tables_[level]) {
      CountRow& mine = tables_[level][key];
      mine.total += row.total;
      for (const auto& [token, count] : row.counts) mine.counts[token] += count;
    }
  }
}

std::vector<TokenId> PaddedMlm::LeftContext(const TokenSeq& left) const {
  const std::size_t n =
      std::min(left.size(), static_cast<std::size_t>(config_.k_ctx));
  std::vector<TokenId> ids;
  ids.reserve(n);
  for (std::size_t i = left.size() - n; i < left.size(); ++i) {
    ids.push_back(vocab_.Lookup(left[i]));
  }
  return ids;
}

std::vector<TokenId> PaddedMlm::RightContext(const TokenSeq& right) const {
  const std::size_t n =
      std::min(right.size(), static_cast<std::size_t>(config_.k_ctx));
  std::vector<TokenId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(vocab_.Lookup(right[i]));
  return ids;
}

std::string PaddedMlm::KeyFromIds(BackoffLevel level, Domain domain, int slot,
                                  std::span<const TokenId> left,
                                  std::span<const TokenId> right) const {
  std::string key;
  key.push_back(static_cast<char>(domain));
  key.push_back(static_cast<char>(slot));
  if (level == BackoffLevel::kSlot) return key;
  key.push_back(static_cast<char>(left.size()));
  for (TokenId id : left) AppendU32(key, static_cast<std::uint32_t>(id));
  if (level == BackoffLevel::kLeft) return key;
  key.push_back(static_cast<char>(right.size()));
  for (TokenId id : right) AppendU32(key, static_cast<std::uint32_t>(id));
  return key;
}

std::string PaddedMlm::ContextKey(BackoffLevel level, Domain domain, int slot,
                                  const TokenSeq& left,
                                  const TokenSeq& right) const {
  return KeyFromIds(level, domain, slot, LeftContext(left),
                    RightContext(right));
}

std::uint64_t PaddedMlm::Count(BackoffLevel level, Domain domain, int slot,
                               const TokenSeq& left, const TokenSeq& right,
                               TokenId token) const {
  const CountTable& table = tables_[static_cast<int>(level)];
  auto row = table.find(ContextKey(level, domain, slot, left, right));
  if (row == table.end()) return 0;
  auto it = row->second.counts.find(token);
  return it == row->second.counts.end() ? 0 : it->second;
}

PredictionGrid PaddedMlm::Predict(const MaskedInput& input) const {
  const std::vector<TokenId> left = LeftContext(input.left);
  const std::vector<TokenId> right = RightContext(input.right);
  const std::size_t vocab_size = vocab_.size();
  const double v = static_cast<double>(vocab_size);
  const double alpha = config_.alpha;

  std::vector<std::vector<double>> slots(config_.n_p);
  for (int slot = 0; slot < config_.n_p; ++slot) {
    std::vector<double>& dist = slots[slot];
    dist.assign(vocab_size, 0.0);
    double base = kBackoffWeights[3] / v;
    for (int level = 0; level < kNumCountLevels; ++level) {
      const double weight = kBackoffWeights[level];
      const CountTable& table = tables_[level];
      auto row = table.find(KeyFromIds(static_cast<BackoffLevel>(level),
                                       input.domain, slot, left, right));
      const double total =
          row == table.end() ? 0.0 : static_cast<double>(row->second.total);
      const double denom = total + alpha * v;
      base += weight * alpha / denom;
      if (row == table.end()) continue;
      for (const auto& [token, count] : row->second.counts) {
        dist[token] += weight * static_cast<double>(count) / denom;
      }
    }
    double sum = 0.0;
    for (double& p : dist) {
      p += base;
      sum += p;
    }
    for (double& p : dist) p /= sum;
  }
  return PredictionGrid(std::move(slots));
}

void PaddedMlm::Save(const std::string& path) const {
  Writer w;
  w.Raw(kModelMagic, sizeof(kModelMagic));
  w.Pod<std::uint32_t>(kModelVersion);
  w.Pod<std::int32_t>(config_.n_p);
  w.Pod<std::int32_t>(config_.k_ctx);
  w.Pod<std::uint64_t>(std::bit_cast<std::uint64_t>(config_.alpha));
  w.Pod<std::int32_t>(config_.spans_per_example);
  w.Pod<std::int32_t>(config_.min_count);
  w.Pod<std::uint64_t>(config_.seed);

  const auto& tokens = vocab_.tokens();
  w.Pod<std::uint32_t>(static_cast<std::uint32_t>(tokens.size()));
  for (const std::string& token : tokens) w.Bytes(token);

  // Rows and entries are written in sorted order so identical models give
  // identical files.
  for (const CountTable& table : tables_) {
    std::vector<const std::pair<const std::string, CountRow>*> rows;
    rows.reserve(table.size());
    for (const auto& entry : table) rows.push_back(&entry);
    std::sort(rows.begin(), rows.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    w.Pod<std::uint64_t>(rows.size());
    for (const auto* entry : rows) {
      w.Bytes(entry->first);
      w.Pod<std::uint64_t>(entry->second.total);
      std::vector<std::pair<TokenId, std::uint64_t>> counts(
          entry->second.counts.begin(), entry->second.counts.end());
      std::sort(counts.begin(), counts.end());
      w.Pod<std::uint32_t>(static_cast<std::uint32_t>(counts.size()));
      for (const auto& [token, count] : counts) {
        w.Pod<std::int32_t>(token);
        w.Pod<std::uint64_t>(count);
      }
    }
  }
  w.Raw(kEndMarker, sizeof(kEndMarker));
  WriteFileAtomically(path, w.str());
}

PaddedMlm PaddedMlm::Load(const std::string& path) {
  const std::string data = ReadFile(path);
  Reader r(data);
  if (r.Raw(sizeof(kModelMagic)) !=
      std::string_view(kModelMagic, sizeof(kModelMagic))) {
    throw FormatError(path + " is not a masker model file");
  }
  const auto version = r.Pod<std::uint32_t>();
  if (version != kModelVersion) {
    throw VersionError("unsupported model version " + std::to_string(version) +
                       " (expected " + std::to_string(kModelVersion) + ")");
  }
  MlmConfig config;
  config.n_p = r.Pod<std::int32_t>();
  config.k_ctx = r.Pod<std::int32_t>();
  config.alpha = std::bit_cast<double>(r.Pod<std::uint64_t>());
  config.spans_per_example = r.Pod<std::int32_t>();
  config.min_count = r.Pod<std::int32_t>();
  config.seed = r.Pod<std::uint64_t>();
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad model config: ") + e.what());
  }

  const auto num_tokens = r.Pod<std::uint32_t>();
  if (num_tokens < static_cast<std::uint32_t>(Vocab::kNumSpecials)) {
    throw FormatError("vocabulary is missing special tokens");
  }
  std::vector<std::string> tokens;
  for (std::uint32_t i = 0; i < num_tokens; ++i) tokens.push_back(r.Bytes());
  const Vocab specials;
  for (TokenId id = 0; id < Vocab::kNumSpecials; ++id) {
    if (tokens[id] != specials.Token(id)) {
      throw FormatError("special token table mismatch");
    }
  }
  std::vector<std::string> regular(tokens.begin() + Vocab::kNumSpecials,
                                   tokens.end());
  Vocab vocab;
  try {
    vocab = Vocab::FromRegularTokens(std::move(regular));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  PaddedMlm model(std::move(vocab), config);
  for (CountTable& table : model.tables_) {
    const auto num_rows = r.Pod<std::uint64_t>();
    for (std::uint64_t i = 0; i < num_rows; ++i) {
      std::string key = r.Bytes();
      CountRow row;
      row.total = r.Pod<std::uint64_t>();
      const auto num_counts = r.Pod<std::uint32_t>();
      for (std::uint32_t c = 0; c < num_counts; ++c) {
        const auto token = r.Pod<std::int32_t>();
        const auto count = r.Pod<std::uint64_t>();
        if (token < 0 || static_cast<std::size_t>(token) >= num_tokens) {
          throw FormatError("count entry references unknown token");
        }
        row.counts[token] = count;
      }
      table.emplace(std::move(key), std::move(row));
    }
  }
  if (r.Raw(sizeof(kEndMarker)) !=
          std::string_view(kEndMarker, sizeof(kEndMarker)) ||
      !r.AtEnd()) {
    throw FormatError("model file has trailing or corrupt data");
  }
  return model;
}

}  // namespace masker

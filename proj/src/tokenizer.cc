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

#include "masker/tokenizer.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace masker {
namespace {

constexpr std::string_view kSpecialSurfaces[] = {
    kPadToken, kUnkToken, kMaskToken, kSourceToken, kTargetToken};

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

}  // namespace

bool IsSpecialSurface(std::string_view token) {
  return std::find(std::begin(kSpecialSurfaces), std::end(kSpecialSurfaces),
                   token) != std::end(kSpecialSurfaces);
}

std::string EscapeToken(std::string_view raw) {
  if (IsSpecialSurface(raw) ||
      (!raw.empty() && raw.front() == kEscapeSentinel)) {
    std::string escaped(1, kEscapeSentinel);
    escaped.append(raw);
    return escaped;
  }
  return std::string(raw);
}

std::string UnescapeToken(std::string_view token) {
  if (!token.empty() && token.front() == kEscapeSentinel) {
    token.remove_prefix(1);
  }
  return std::string(token);
}

TokenSeq Tokenize(std::string_view text) {
  TokenSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > begin) out.push_back(EscapeToken(text.substr(begin, i - begin)));
  }
  return out;
}

std::string Detokenize(const TokenSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += UnescapeToken(seq[i]);
  }
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > begin) {
      if (!out.empty()) out.push_back(' ');
      out.append(text.substr(begin, i - begin));
    }
  }
  return out;
}

Vocab::Vocab() {
  for (std::string_view special : kSpecialSurfaces) Add(std::string(special));
}

Vocab Vocab::Build(std::span<const TokenSeq> corpora, int min_count) {
  if (min_count < 1) {
    throw std::invalid_argument("min_count must be at least 1");
  }
  std::map<std::string, std::int64_t> counts;
  for (const TokenSeq& line : corpora) {
    for (const std::string& token : line) ++counts[token];
  }
  std::vector<std::pair<std::string, std::int64_t>> kept;
  for (auto& [token, count] : counts) {
    if (count >= min_count && !IsSpecialSurface(token)) {
      kept.emplace_back(token, count);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  Vocab vocab;
  for (auto& [token, count] : kept) vocab.Add(std::move(token));
  return vocab;
}

Vocab Vocab::FromRegularTokens(std::vector<std::string> regular) {
  Vocab vocab;
  for (std::string& token : regular) {
    if (IsSpecialSurface(token) || vocab.Contains(token)) {
      throw std::invalid_argument("duplicate or special vocabulary entry: " +
                                  token);
    }
    vocab.Add(std::move(token));
  }
  return vocab;
}

TokenId Vocab::Lookup(std::string_view token) const {
  auto it = id_of_.find(std::string(token));
  return it == id_of_.end() ? kUnk : it->second;
}

bool Vocab::Contains(std::string_view token) const {
  return id_of_.contains(std::string(token));
}

void Vocab::Add(std::string token) {
  const auto id = static_cast<TokenId>(tokens_.size());
  id_of_.emplace(token, id);
  tokens_.push_back(std::move(token));
}

}  // namespace masker

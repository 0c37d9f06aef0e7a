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

#ifndef MASKER_TOKENIZER_H_
#define MASKER_TOKENIZER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace masker {

// A tokenized text. Items are surface strings, never special tokens: raw
// input that collides with a special surface form is escaped by Tokenize().
using TokenSeq = std::vector<std::string>;

using TokenId = std::int32_t;

inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kMaskToken = "[MASK]";
inline constexpr std::string_view kSourceToken = "[SOURCE]";
inline constexpr std::string_view kTargetToken = "[TARGET]";

// Prefix that marks an escaped token. Any raw token that equals a special
// surface form or already starts with the sentinel gets one more sentinel.
inline constexpr char kEscapeSentinel = '\\';

bool IsSpecialSurface(std::string_view token);

std::string EscapeToken(std::string_view raw);
std::string UnescapeToken(std::string_view token);

// Splits on ASCII whitespace. Empty or all-whitespace text gives an empty
// sequence.
TokenSeq Tokenize(std::string_view text);

// Joins with single spaces, undoing the escaping done by Tokenize().
std::string Detokenize(const TokenSeq& seq);

// Collapses whitespace runs to single spaces and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

class Vocab {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kUnk = 1;
  static constexpr TokenId kMask = 2;
  static constexpr TokenId kSource = 3;
  static constexpr TokenId kTarget = 4;
  static constexpr TokenId kNumSpecials = 5;

  // Specials only.
  Vocab();

  // Keeps every token seen at least `min_count` times across all corpora.
  // Regular tokens are ordered by descending frequency, then bytewise, so the
  // result does not depend on corpus order.
  static Vocab Build(std::span<const TokenSeq> corpora, int min_count);

  // Rebuilds a vocabulary from its regular tokens in id order (used by model
  // loading and tests).
  static Vocab FromRegularTokens(std::vector<std::string> regular);

  // Unknown tokens map to kUnk.
  TokenId Lookup(std::string_view token) const;
  bool Contains(std::string_view token) const;
  const std::string& Token(TokenId id) const { return tokens_.at(id); }

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  static bool IsSpecial(TokenId id) { return id >= 0 && id < kNumSpecials; }

  friend bool operator==(const Vocab& a, const Vocab& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  void Add(std::string token);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> id_of_;
};

}  // namespace masker

#endif  // MASKER_TOKENIZER_H_

// Copyright 2026 The svominer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace svominer {

// Penn Treebank part-of-speech tags: the 36 word tags followed by the
// punctuation tags.
enum class Tag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT,
  POS, PRP, PRP_S, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBN, VBG, VBP,
  VBZ, WDT, WP, WP_S, WRB,
  // Punctuation.
  Comma, Period, Colon, LeftParen, RightParen, OpenQuote, CloseQuote,
  Dollar, Hash,
};

inline constexpr std::size_t kWordTagCount = 36;
inline constexpr std::size_t kTagCount = 45;

inline constexpr std::array<std::string_view, kTagCount> kTagNames = {
    "CC",  "CD",   "DT",  "EX",  "FW",   "IN",  "JJ",  "JJR", "JJS",
    "LS",  "MD",   "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB",  "RBR", "RBS", "RP",   "SYM", "TO",  "UH",  "VB",
    "VBD", "VBN",  "VBG", "VBP", "VBZ",  "WDT", "WP",  "WP$", "WRB",
    ",",   ".",    ":",   "(",   ")",    "``",  "''",  "$",   "#",
};

inline constexpr std::string_view tag_name(Tag t) {
  return kTagNames[static_cast<std::size_t>(t)];
}

inline constexpr Tag tag_at(std::size_t index) {
  return static_cast<Tag>(index);
}

inline std::optional<Tag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagCount; ++i) {
    if (kTagNames[i] == name) return tag_at(i);
  }
  return std::nullopt;
}

inline constexpr bool is_punctuation_tag(Tag t) {
  return static_cast<std::size_t>(t) >= kWordTagCount;
}

inline constexpr bool is_verb_tag(Tag t) {
  switch (t) {
    case Tag::VB: case Tag::VBD: case Tag::VBG:
    case Tag::VBN: case Tag::VBP: case Tag::VBZ:
      return true;
    default:
      return false;
  }
}

inline constexpr bool is_noun_tag(Tag t) {
  return t == Tag::NN || t == Tag::NNS || t == Tag::NNP || t == Tag::NNPS;
}

}  // namespace svominer

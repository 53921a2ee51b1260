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

// Shallow chunking of a tagged sentence into noun groups (NX) and verb
// groups (VX), working purely on the tag sequence:
//
//   1. protect VBD/VBG/VBN by suffixing their tag names,
//   2. find noun phrases with the noun-phrase pattern,
//   3. remove the protection suffix,
//   4. find verb phrases with the verb-phrase pattern on the tags not already
//      inside a noun phrase.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svominer/tag_pattern.hpp"
#include "svominer/tagger.hpp"
#include "svominer/tagset.hpp"

namespace svominer {

// Noun-phrase grammar over space-terminated tags, as published (line breaks
// of the original layout become spaces).
inline constexpr std::string_view kNounPhrasePattern =
    "((((PDT )?(DT |PRP[$] |WDT |WP[$] ) (VBG |VBD |VBN |JJ | "
    "JJR |JJS | , |CC |NN |NNS |NNP |NNPS |CD )*(NN |NNS |NNP "
    "|NNPS |CD )+)|((PDT )?(JJ |JJR |JJS | , |CC |NN |NNS | "
    "NNP |NNPS |CD )*(NN |NNS |NNP |NNPS |CD )+)|EX |PRP |WP "
    "|WDT )POS )?(((PDT )?(DT |PRP[$] |WDT |WP[$] ) (VBG |VBD "
    "|VBN |JJ |JJR |JJS | , |CC |NN |NNS |NNP |NNPS |CD )*(NN "
    "|NNS |NNP |NNPS |CD )+)|((PDT )?(JJ |JJR |JJS | , |CC | "
    "NN |NNS |NNP |NNPS |CD )*(NN |NNS |NNP |NNPS |CD )+)|EX "
    "|PRP |WP |WDT )";

// Verb-phrase grammar, as published.
inline constexpr std::string_view kVerbPhrasePattern =
    "(RB |RBR |RBS |WRB )*(MD )?(RB |RBR |RBS |WRB )*(VB | "
    "VBD |VBG |VBN |VBP |VBZ ) (VB |VBD |VBG |VBN |VBP |VBZ | "
    "RB |RBR |RBS |WRB )*(RP )?(TO (RB )*(VB |VBN ) (RP )?)?";

// Appended to protected verb tags; no pattern literal ends with it.
inline constexpr std::string_view kProtectionSuffix = "~P";

// Stands in for tokens already inside a noun phrase during verb-phrase
// recognition.
inline constexpr std::string_view kMaskedTag = "~NX";

enum class ChunkLabel { NX, VX, Outside };

struct ChunkItem {
  ChunkLabel label = ChunkLabel::Outside;
  TokenSpan span;

  friend bool operator==(const ChunkItem&, const ChunkItem&) = default;
};

struct ChunkedSentence {
  std::vector<ChunkItem> items;

  std::vector<TokenSpan> spans(ChunkLabel label) const {
    std::vector<TokenSpan> out;
    for (const auto& item : items) {
      if (item.label == label) out.push_back(item.span);
    }
    return out;
  }

  friend bool operator==(const ChunkedSentence&,
                         const ChunkedSentence&) = default;
};

inline const TagPattern& noun_phrase_pattern() {
  static const TagPattern p = TagPattern::compile(kNounPhrasePattern);
  return p;
}

inline const TagPattern& verb_phrase_pattern() {
  static const TagPattern p = TagPattern::compile(kVerbPhrasePattern);
  return p;
}

inline std::vector<std::string> tag_names(const TaggedSentence& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const auto& tok : ts) out.emplace_back(tag_name(tok.tag));
  return out;
}

inline std::vector<std::string> tag_names(std::span<const Tag> tags) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (Tag t : tags) out.emplace_back(tag_name(t));
  return out;
}

inline bool is_protected_verb(std::string_view tag) {
  return tag == "VBD" || tag == "VBG" || tag == "VBN";
}

inline std::vector<std::string> protect_verbs(std::vector<std::string> tags) {
  for (auto& t : tags) {
    if (is_protected_verb(t)) t.append(kProtectionSuffix);
  }
  return tags;
}

inline std::vector<std::string> unprotect_verbs(
    std::vector<std::string> tags) {
  for (auto& t : tags) {
    if (t.size() > kProtectionSuffix.size() &&
        std::string_view(t).ends_with(kProtectionSuffix)) {
      t.resize(t.size() - kProtectionSuffix.size());
    }
  }
  return tags;
}

// Expects protected verbs.
inline std::vector<TokenSpan> find_noun_phrases(
    std::span<const std::string> tags) {
  return noun_phrase_pattern().find_all(tags);
}

// Expects unprotected verbs with noun-phrase tokens masked.
inline std::vector<TokenSpan> find_verb_phrases(
    std::span<const std::string> tags) {
  return verb_phrase_pattern().find_all(tags);
}

inline std::vector<std::string> mask_spans(std::vector<std::string> tags,
                                           std::span<const TokenSpan> spans) {
  for (const auto& s : spans) {
    for (std::size_t i = s.begin; i < s.end; ++i) tags[i] = kMaskedTag;
  }
  return tags;
}

inline ChunkedSentence chunk_tags(std::span<const std::string> tags) {
  auto working = protect_verbs({tags.begin(), tags.end()});
  const auto nouns = find_noun_phrases(working);
  working = mask_spans(unprotect_verbs(std::move(working)), nouns);
  const auto verbs = find_verb_phrases(working);

  ChunkedSentence out;
  std::size_t n = 0;
  std::size_t v = 0;
  std::size_t i = 0;
  while (i < tags.size()) {
    if (n < nouns.size() && nouns[n].begin == i) {
      out.items.push_back({ChunkLabel::NX, nouns[n]});
      i = nouns[n++].end;
    } else if (v < verbs.size() && verbs[v].begin == i) {
      out.items.push_back({ChunkLabel::VX, verbs[v]});
      i = verbs[v++].end;
    } else {
      out.items.push_back({ChunkLabel::Outside, TokenSpan{i, i + 1}});
      ++i;
    }
  }
  return out;
}

inline ChunkedSentence chunk(const TaggedSentence& ts) {
  return chunk_tags(tag_names(ts));
}

// Debug rendering: "(NX MAPKK/NNP NX) (VX binds/VBZ VX) (NX MEK/NNP NX) ./."
inline std::string format_chunks(const ChunkedSentence& cs,
                                 const TaggedSentence& ts) {
  std::string out;
  auto word = [&](std::size_t i) {
    return ts[i].word + "/" + std::string(tag_name(ts[i].tag));
  };
  for (const auto& item : cs.items) {
    if (!out.empty()) out.push_back(' ');
    if (item.label == ChunkLabel::Outside) {
      out += word(item.span.begin);
      continue;
    }
    const char* label = item.label == ChunkLabel::NX ? "NX" : "VX";
    out += "(";
    out += label;
    for (std::size_t i = item.span.begin; i < item.span.end; ++i) {
      out += " " + word(i);
    }
    out += " ";
    out += label;
    out += ")";
  }
  return out;
}

}  // namespace svominer

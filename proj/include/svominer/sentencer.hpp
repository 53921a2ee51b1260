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

// Sentence splitting and tokenization.
//
// Sentences end after a word whose last character (ignoring closing brackets
// and quotes) is '.', '?' or '!', unless that word is a listed acronym such as
// "Dr." or "e.g.". Tokens never lose or gain characters: removing whitespace
// from a sentence equals concatenating its tokens.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/text.hpp"

namespace svominer {

struct Sentence {
  std::string text;
  std::size_t source_offset = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

using TokenList = std::vector<std::string>;

// Words carrying a period that must not be split or treated as a sentence
// end. One acronym per line.
class AcronymSet {
 public:
  AcronymSet() = default;
  AcronymSet(std::initializer_list<std::string> words) : words_(words) {}

  static AcronymSet load(const std::filesystem::path& path) {
    auto in = text::open_input(path);
    return parse(in, path.string());
  }

  static AcronymSet parse(std::istream& in, const std::string& source) {
    AcronymSet set;
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto word = text::trim(raw);
      if (text::has_whitespace(word)) {
        throw LoadError(source, line, "acronym contains whitespace");
      }
      set.words_.emplace(word);
    });
    return set;
  }

  bool contains(std::string_view word) const {
    return words_.count(std::string(word)) != 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Closed map of contracted surface forms to their token split, e.g.
// "don't" -> "do" "n't". Lookup is case-insensitive and the split keeps the
// original characters.
class ContractionMap {
 public:
  ContractionMap() = default;

  static ContractionMap load(const std::filesystem::path& path) {
    auto in = text::open_input(path);
    return parse(in, path.string());
  }

  static ContractionMap parse(std::istream& in, const std::string& source) {
    ContractionMap map;
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto fields = text::split(raw, '\t');
      if (fields.size() != 2) {
        throw LoadError(source, line, "expected surface<TAB>expansion");
      }
      map.add(text::trim(fields[0]), text::trim(fields[1]), source, line);
    });
    return map;
  }

  void add(std::string_view surface, std::string_view expansion,
           const std::string& source = "<memory>", std::size_t line = 0) {
    const auto pieces = text::split_whitespace(expansion);
    if (surface.empty() || pieces.size() < 2) {
      throw LoadError(source, line, "contraction needs two or more tokens");
    }
    if (!text::iequals(text::join(pieces, ""), surface)) {
      throw LoadError(source, line,
                      "expansion of '" + std::string(surface) +
                          "' does not preserve its characters");
    }
    std::vector<std::size_t> lengths;
    for (auto p : pieces) lengths.push_back(p.size());
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      clitics_.insert(text::to_lower(pieces[i]));
    }
    splits_[text::to_lower(surface)] = std::move(lengths);
  }

  std::optional<TokenList> expand(std::string_view word) const {
    auto it = splits_.find(text::to_lower(word));
    if (it == splits_.end()) return std::nullopt;
    TokenList out;
    std::size_t pos = 0;
    for (std::size_t len : it->second) {
      out.emplace_back(word.substr(pos, len));
      pos += len;
    }
    return out;
  }

  // True for the trailing pieces of an expansion ("n't", "'s"), which must
  // survive re-tokenization unchanged.
  bool is_clitic(std::string_view token) const {
    return clitics_.count(text::to_lower(token)) != 0;
  }

  std::size_t size() const { return splits_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::size_t>> splits_;
  std::unordered_set<std::string> clitics_;
};

namespace detail {

inline bool is_opening_punct(char c) {
  return c == '(' || c == '[' || c == '{' || c == '"' || c == '\'' ||
         c == '`';
}

inline bool is_closing_punct(char c) {
  return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'';
}

inline bool is_trailing_punct(char c) {
  return c == ',' || c == ';' || c == ':' || c == '.' || c == '?' ||
         c == '!' || is_closing_punct(c);
}

inline bool is_sentence_final(char c) {
  return c == '.' || c == '?' || c == '!';
}

}  // namespace detail

// Decimal numbers and currency amounts ("4.20", "$4.20", "1,000") that must
// stay one token.
inline bool is_number_token(std::string_view w) {
  std::size_t i = 0;
  if (i < w.size() && w[i] == '$') ++i;
  if (i >= w.size() || !text::is_digit(w[i])) return false;
  bool prev_sep = false;
  for (; i < w.size(); ++i) {
    const char c = w[i];
    if (text::is_digit(c)) {
      prev_sep = false;
    } else if ((c == '.' || c == ',') && !prev_sep) {
      prev_sep = true;
    } else {
      return false;
    }
  }
  return !prev_sep;
}

// True when `word` closes a sentence.
inline bool ends_sentence(std::string_view word, const AcronymSet& acronyms) {
  std::string_view core = word;
  while (!core.empty() && detail::is_closing_punct(core.back()) &&
         core.size() > 1) {
    core.remove_suffix(1);
  }
  if (core.empty() || !detail::is_sentence_final(core.back())) return false;
  while (core.size() > 1 && detail::is_opening_punct(core.front())) {
    core.remove_prefix(1);
  }
  return !acronyms.contains(core);
}

inline std::vector<Sentence> split_sentences(std::string_view abstract,
                                             const AcronymSet& acronyms) {
  std::vector<Sentence> out;
  std::optional<std::size_t> start;
  std::size_t last_end = 0;
  std::size_t i = 0;
  while (i < abstract.size()) {
    while (i < abstract.size() && text::is_space(abstract[i])) ++i;
    if (i >= abstract.size()) break;
    const std::size_t b = i;
    while (i < abstract.size() && !text::is_space(abstract[i])) ++i;
    if (!start) start = b;
    last_end = i;
    if (ends_sentence(abstract.substr(b, i - b), acronyms)) {
      out.push_back(Sentence{std::string(abstract.substr(*start, i - *start)),
                             *start});
      start.reset();
    }
  }
  if (start) {
    out.push_back(Sentence{
        std::string(abstract.substr(*start, last_end - *start)), *start});
  }
  return out;
}

namespace detail {

inline void tokenize_word(std::string_view word, const AcronymSet& acronyms,
                          const ContractionMap& contractions,
                          TokenList& out) {
  TokenList leading;
  TokenList trailing;  // reversed
  std::string_view core = word;
  while (!core.empty()) {
    if (core == "..." || acronyms.contains(core) || is_number_token(core) ||
        contractions.is_clitic(core)) {
      break;
    }
    if (core.size() > 1 && is_opening_punct(core.front())) {
      leading.emplace_back(core.substr(0, 1));
      core.remove_prefix(1);
      continue;
    }
    if (core.size() > 3 && core.ends_with("...")) {
      trailing.emplace_back("...");
      core.remove_suffix(3);
      continue;
    }
    if (core.size() > 1 && is_trailing_punct(core.back())) {
      trailing.emplace_back(core.substr(core.size() - 1));
      core.remove_suffix(1);
      continue;
    }
    break;
  }
  out.insert(out.end(), leading.begin(), leading.end());
  if (auto pieces = contractions.expand(core)) {
    out.insert(out.end(), pieces->begin(), pieces->end());
  } else if (!core.empty()) {
    out.emplace_back(core);
  }
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

}  // namespace detail

// Splits on whitespace, then detaches punctuation from words except inside
// acronyms and numbers, and expands listed contractions.
inline TokenList tokenize(std::string_view sentence, const AcronymSet& acronyms,
                          const ContractionMap& contractions) {
  TokenList out;
  for (auto word : text::split_whitespace(sentence)) {
    detail::tokenize_word(word, acronyms, contractions, out);
  }
  return out;
}

inline TokenList tokenize(const Sentence& sentence, const AcronymSet& acronyms,
                          const ContractionMap& contractions) {
  return tokenize(sentence.text, acronyms, contractions);
}

}  // namespace svominer

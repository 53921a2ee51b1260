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

// Entity normalization: multi-word biological names are replaced by their
// abbreviations so the tagger sees a single noun.
//
// Dictionary file: UTF-8, tab separated, three columns
//
//   long_form <TAB> abbreviation <TAB> score
//
// with '#' comment lines. Only rows scoring above kScoreCutoff are kept.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/text.hpp"

namespace svominer {

struct AbbreviationEntry {
  std::string long_form;
  std::string abbreviation;
  double score = 0.0;

  friend bool operator==(const AbbreviationEntry&,
                         const AbbreviationEntry&) = default;
};

class AbbreviationDictionary {
 public:
  // Rows must score strictly above this to be retained.
  static constexpr double kScoreCutoff = 0.88;

  AbbreviationDictionary() = default;

  static AbbreviationDictionary load(const std::filesystem::path& path) {
    auto in = text::open_input(path);
    return parse(in, path.string());
  }

  static AbbreviationDictionary parse(std::istream& in,
                                      const std::string& source) {
    std::vector<Row> rows;
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto fields = text::split(raw, '\t');
      if (fields.size() != 3) {
        throw LoadError(source, line,
                        "expected 3 tab-separated fields, found " +
                            std::to_string(fields.size()));
      }
      const auto score = text::parse_double(fields[2]);
      if (!score) {
        throw LoadError(source, line,
                        "unparseable score '" + std::string(fields[2]) + "'");
      }
      if (*score < 0.0 || *score > 1.0) {
        throw LoadError(source, line, "score outside [0,1]");
      }
      rows.push_back(Row{AbbreviationEntry{std::string(text::trim(fields[0])),
                                           std::string(text::trim(fields[1])),
                                           *score},
                         line});
    });
    return build(std::move(rows), source);
  }

  // Applies the score cutoff and validation to in-memory rows.
  static AbbreviationDictionary from_entries(
      std::vector<AbbreviationEntry> entries,
      const std::string& source = "<memory>") {
    std::vector<Row> rows;
    rows.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      rows.push_back(Row{std::move(entries[i]), i + 1});
    }
    return build(std::move(rows), source);
  }

  // Longest long form first, ties broken lexicographically.
  std::span<const AbbreviationEntry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Replaces every long form (case-insensitive, at word boundaries) by its
  // abbreviation. The longest entry wins at each position; replaced text is
  // never rescanned. Whitespace inside a long form matches any whitespace run.
  std::string normalize(std::string_view input) const {
    if (entries_.empty()) return std::string(input);
    std::string out;
    out.reserve(input.size());
    std::size_t i = 0;
    while (i < input.size()) {
      const auto& bucket =
          by_first_byte_[static_cast<unsigned char>(text::to_lower(input[i]))];
      bool replaced = false;
      for (std::size_t idx : bucket) {
        const auto& entry = entries_[idx];
        if (auto end = match_at(input, i, entry.long_form)) {
          out.append(entry.abbreviation);
          i = *end;
          replaced = true;
          break;
        }
      }
      if (!replaced) out.push_back(input[i++]);
    }
    return out;
  }

  // End offset of `long_form` matched at `pos`, honouring word boundaries.
  static std::optional<std::size_t> match_at(std::string_view input,
                                             std::size_t pos,
                                             std::string_view long_form) {
    if (long_form.empty()) return std::nullopt;
    if (text::is_word_char(long_form.front()) && pos > 0 &&
        text::is_word_char(input[pos - 1])) {
      return std::nullopt;
    }
    std::size_t i = pos;
    std::size_t k = 0;
    while (k < long_form.size()) {
      if (text::is_space(long_form[k])) {
        if (i >= input.size() || !text::is_space(input[i])) return std::nullopt;
        while (k < long_form.size() && text::is_space(long_form[k])) ++k;
        while (i < input.size() && text::is_space(input[i])) ++i;
        continue;
      }
      if (i >= input.size() ||
          text::to_lower(input[i]) != text::to_lower(long_form[k])) {
        return std::nullopt;
      }
      ++i;
      ++k;
    }
    if (text::is_word_char(long_form.back()) && i < input.size() &&
        text::is_word_char(input[i])) {
      return std::nullopt;
    }
    return i;
  }

 private:
  struct Row {
    AbbreviationEntry entry;
    std::size_t line;
  };

  static std::string match_key(std::string_view long_form) {
    return text::to_lower(text::join(text::split_whitespace(long_form), " "));
  }

  static AbbreviationDictionary build(std::vector<Row> rows,
                                      const std::string& source) {
    AbbreviationDictionary dict;
    std::unordered_map<std::string, std::size_t> seen;  // key -> rows index
    std::vector<Row> kept;
    for (auto& row : rows) {
      if (!(row.entry.score > kScoreCutoff)) continue;
      const auto& e = row.entry;
      if (e.long_form.empty()) {
        throw LoadError(source, row.line, "empty long form");
      }
      if (e.abbreviation.empty() || text::has_whitespace(e.abbreviation)) {
        throw LoadError(source, row.line,
                        "abbreviation must be a single non-empty token");
      }
      if (e.long_form == e.abbreviation) {
        throw LoadError(source, row.line,
                        "long form equals its abbreviation");
      }
      const std::string key = match_key(e.long_form);
      if (auto it = seen.find(key); it != seen.end()) {
        const Row& first = kept[it->second];
        if (first.entry.abbreviation != e.abbreviation) {
          throw LoadError(source, row.line,
                          "long form '" + e.long_form +
                              "' conflicts with row " +
                              std::to_string(first.line) + " ('" +
                              first.entry.abbreviation + "' vs '" +
                              e.abbreviation + "')");
        }
        continue;
      }
      seen.emplace(key, kept.size());
      kept.push_back(std::move(row));
    }
    dict.entries_.reserve(kept.size());
    for (auto& row : kept) dict.entries_.push_back(std::move(row.entry));
    std::sort(dict.entries_.begin(), dict.entries_.end(),
              [](const AbbreviationEntry& a, const AbbreviationEntry& b) {
                if (a.long_form.size() != b.long_form.size()) {
                  return a.long_form.size() > b.long_form.size();
                }
                return a.long_form < b.long_form;
              });
    for (std::size_t i = 0; i < dict.entries_.size(); ++i) {
      const char first = text::to_lower(dict.entries_[i].long_form.front());
      dict.by_first_byte_[static_cast<unsigned char>(first)].push_back(i);
    }
    return dict;
  }

  std::vector<AbbreviationEntry> entries_;
  std::array<std::vector<std::size_t>, 256> by_first_byte_;
};

inline AbbreviationDictionary load_dictionary(
    const std::filesystem::path& path) {
  return AbbreviationDictionary::load(path);
}

inline std::string normalize(std::string_view input,
                             const AbbreviationDictionary& dict) {
  return dict.normalize(input);
}

}  // namespace svominer

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

// Three-stage stemmer: specific (word, tag class) rules, then irregular forms,
// then affix stripping.
//
// Affix stripping repeats until nothing more applies, consulting the first
// two stages again after every strip, so stem() is idempotent for any rule set
// that load() accepts.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/tagset.hpp"
#include "svominer/text.hpp"

namespace svominer {

enum class TagClass { Verb = 0, Noun = 1, Any = 2 };

inline std::optional<TagClass> parse_tag_class(std::string_view s) {
  if (s == "verb") return TagClass::Verb;
  if (s == "noun") return TagClass::Noun;
  if (s == "any") return TagClass::Any;
  return std::nullopt;
}

struct Affix {
  std::string text;
  std::size_t min_stem = 2;
};

class StemRuleSet {
 public:
  // Stripping never leaves fewer characters than this.
  static constexpr std::size_t kMinStem = 2;

  StemRuleSet() = default;

  static StemRuleSet load(const std::filesystem::path& specific,
                          const std::filesystem::path& irregulars,
                          const std::filesystem::path& suffixes,
                          const std::filesystem::path& prefixes) {
    auto a = text::open_input(specific);
    auto b = text::open_input(irregulars);
    auto c = text::open_input(suffixes);
    auto d = text::open_input(prefixes);
    return parse(a, b, c, d,
                 {specific.string(), irregulars.string(), suffixes.string(),
                  prefixes.string()});
  }

  static StemRuleSet parse(std::istream& specific, std::istream& irregulars,
                           std::istream& suffixes, std::istream& prefixes,
                           const std::array<std::string, 4>& sources = {
                               "<specific>", "<irregulars>", "<suffixes>",
                               "<prefixes>"}) {
    StemRuleSet rules;
    text::for_each_data_line(
        specific, [&](std::size_t line, std::string_view raw) {
          const auto f = text::split_whitespace(raw);
          if (f.size() != 3) {
            throw LoadError(sources[0], line, "expected word tagclass stem");
          }
          const auto cls = parse_tag_class(f[1]);
          if (!cls) {
            throw LoadError(sources[0], line,
                            "unknown tag class '" + std::string(f[1]) + "'");
          }
          rules.add_specific(f[0], *cls, f[2]);
        });
    text::for_each_data_line(
        irregulars, [&](std::size_t line, std::string_view raw) {
          const auto f = text::split_whitespace(raw);
          if (f.size() != 2) {
            throw LoadError(sources[1], line, "expected word stem");
          }
          rules.add_irregular(f[0], f[1]);
        });
    read_affixes(suffixes, sources[2], rules.suffixes_);
    read_affixes(prefixes, sources[3], rules.prefixes_);
    rules.finalize(sources[0]);
    return rules;
  }

  void add_specific(std::string_view word, TagClass cls,
                    std::string_view stem) {
    specific_[text::to_lower(word)][static_cast<std::size_t>(cls)] =
        std::string(stem);
  }

  void add_irregular(std::string_view word, std::string_view stem) {
    irregulars_[text::to_lower(word)] = std::string(stem);
  }

  void add_suffix(std::string_view affix, std::size_t min_stem = kMinStem) {
    suffixes_.push_back({std::string(affix), std::max(min_stem, kMinStem)});
  }

  void add_prefix(std::string_view affix, std::size_t min_stem = kMinStem) {
    prefixes_.push_back({std::string(affix), std::max(min_stem, kMinStem)});
  }

  // Orders affixes longest first and checks that every specific and irregular
  // target is a fixpoint of the whole rule set for the tags it is reached by.
  void finalize(const std::string& source = "<stem rules>") {
    auto longest_first = [](const Affix& a, const Affix& b) {
      if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
      return a.text < b.text;
    };
    std::stable_sort(suffixes_.begin(), suffixes_.end(), longest_first);
    std::stable_sort(prefixes_.begin(), prefixes_.end(), longest_first);

    // One representative tag per class; stem() only sees the class.
    constexpr std::array<Tag, 3> kClassTag = {Tag::VB, Tag::NN, Tag::JJ};
    auto check = [&](const std::string& word, const std::string& target,
                     Tag t) {
      if (stem(target, t) != target) {
        throw LoadError(source, "stem target '" + target + "' of '" + word +
                                    "' is itself rewritten to '" +
                                    stem(target, t) + "'");
      }
    };
    for (const auto& [word, targets] : specific_) {
      for (std::size_t c = 0; c < targets.size(); ++c) {
        if (!targets[c]) continue;
        if (c == static_cast<std::size_t>(TagClass::Any)) {
          for (Tag t : kClassTag) check(word, *targets[c], t);
        } else {
          check(word, *targets[c], kClassTag[c]);
        }
      }
    }
    for (const auto& [word, target] : irregulars_) {
      for (Tag t : kClassTag) check(word, target, t);
    }
  }

  std::string stem(std::string_view word, Tag tag) const {
    if (word.empty()) return {};
    const TagClass cls = is_verb_tag(tag)   ? TagClass::Verb
                         : is_noun_tag(tag) ? TagClass::Noun
                                            : TagClass::Any;
    std::string w = text::to_lower(word);
    if (auto fixed = lookup(w, cls)) return *fixed;
    if (!strippable(word)) return std::string(word);
    while (true) {
      auto next = strip_once(w);
      if (!next) return w;
      w = std::move(*next);
      if (auto fixed = lookup(w, cls)) return *fixed;
    }
  }

  std::optional<std::string> lookup(const std::string& lowered,
                                    TagClass cls) const {
    if (auto it = specific_.find(lowered); it != specific_.end()) {
      const auto& targets = it->second;
      if (cls != TagClass::Any && targets[static_cast<std::size_t>(cls)]) {
        return targets[static_cast<std::size_t>(cls)];
      }
      if (targets[static_cast<std::size_t>(TagClass::Any)]) {
        return targets[static_cast<std::size_t>(TagClass::Any)];
      }
    }
    if (auto it = irregulars_.find(lowered); it != irregulars_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  // Lowercase or capitalized words of letters and hyphens. Other tokens
  // (gene symbols, numbers) are never stripped.
  static bool strippable(std::string_view w) {
    bool any_alpha = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const char c = w[i];
      if (c == '-') continue;
      if (!text::is_alpha(c)) return false;
      if (text::is_upper(c) && i != 0) return false;
      any_alpha = true;
    }
    return any_alpha;
  }

  // One suffix (or, failing that, prefix) removal with spelling repair.
  std::optional<std::string> strip_once(const std::string& w) const {
    for (const auto& a : suffixes_) {
      if (auto s = strip_suffix(w, a)) return s;
    }
    for (const auto& a : prefixes_) {
      if (w.size() >= a.text.size() + a.min_stem && w.starts_with(a.text)) {
        return w.substr(a.text.size());
      }
    }
    return std::nullopt;
  }

  const std::vector<Affix>& suffixes() const { return suffixes_; }
  const std::vector<Affix>& prefixes() const { return prefixes_; }
  std::size_t specific_count() const { return specific_.size(); }
  std::size_t irregular_count() const { return irregulars_.size(); }

 private:
  static void read_affixes(std::istream& in, const std::string& source,
                           std::vector<Affix>& out) {
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto f = text::split_whitespace(raw);
      if (f.empty() || f.size() > 2) {
        throw LoadError(source, line, "expected affix [min_stem_length]");
      }
      std::size_t min = kMinStem;
      if (f.size() == 2) {
        const auto v = text::parse_size(f[1]);
        if (!v) throw LoadError(source, line, "bad minimum stem length");
        min = std::max(*v, kMinStem);
      }
      out.push_back({std::string(f[0]), min});
    });
  }

  static bool has_vowel(std::string_view s) {
    return s.find_first_of("aeiouy") != std::string_view::npos;
  }

  static bool is_consonant(char c) {
    return text::is_lower(c) && std::string_view("aeiou").find(c) ==
                                    std::string_view::npos;
  }

  static std::optional<std::string> strip_suffix(const std::string& w,
                                                 const Affix& a) {
    if (!w.ends_with(a.text) || w.size() < a.text.size() + a.min_stem) {
      return std::nullopt;
    }
    std::string s = w.substr(0, w.size() - a.text.size());
    const std::string_view sv(s);
    if (a.text == "s") {
      if (sv.ends_with("s") || sv.ends_with("u") || sv.ends_with("i")) {
        return std::nullopt;
      }
    } else if (a.text == "es") {
      if (!(sv.ends_with("ss") || sv.ends_with("x") || sv.ends_with("z") ||
            sv.ends_with("ch") || sv.ends_with("sh"))) {
        return std::nullopt;
      }
    } else if (a.text == "ed" || a.text == "ing" || a.text == "ly") {
      if (!has_vowel(sv)) return std::nullopt;
    }
    if (a.text == "ed" || a.text == "ing") {
      const std::size_t n = s.size();
      if (n >= 3 && s[n - 1] == s[n - 2] && is_consonant(s[n - 1]) &&
          s[n - 1] != 'l' && s[n - 1] != 's' && s[n - 1] != 'z') {
        s.pop_back();
      } else if (sv.ends_with("at") || sv.ends_with("bl") ||
                 sv.ends_with("iz")) {
        s.push_back('e');
      }
    }
    return s;
  }

  std::unordered_map<std::string, std::array<std::optional<std::string>, 3>>
      specific_;
  std::unordered_map<std::string, std::string> irregulars_;
  std::vector<Affix> suffixes_;
  std::vector<Affix> prefixes_;
};

inline std::string stem(std::string_view word, Tag tag,
                        const StemRuleSet& rules) {
  return rules.stem(word, tag);
}

}  // namespace svominer

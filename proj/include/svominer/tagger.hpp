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

// Transformation-based part-of-speech tagger (Brill style).
//
// Tagging runs in two phases. Every token first receives its most likely tag
// from the lexicon, or a default for unknown words. Ordered lexical rules
// (affix tests) and then ordered contextual rules (neighbouring tags/words)
// rewrite those tags. Each rule makes one left-to-right pass over the
// sentence and sees the tags already rewritten earlier in that pass.
//
// File formats, one entry per line, '#' comments allowed:
//
//   lexicon           word TAG [TAG...]          first tag is the most likely
//   lexical rules     FROM affix fhassuf 3 TO     conditional on current tag
//                     affix hassuf 3 TO           unconditional
//   contextual rules  FROM TO TRIGGER arg [arg]

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/sentencer.hpp"
#include "svominer/tagset.hpp"
#include "svominer/text.hpp"

namespace svominer {

struct TaggedToken {
  std::string word;
  Tag tag = Tag::NN;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

using TaggedSentence = std::vector<TaggedToken>;

enum class LexicalKind {
  HasSuffix,
  HasPrefix,
  DeleteSuffix,  // word minus the suffix is a lexicon word
  DeletePrefix,
  AddSuffix,     // word plus the suffix is a lexicon word
  AddPrefix,
  HasChar,
};

struct LexicalRule {
  std::optional<Tag> from_tag;  // unset for unconditional rules
  std::string affix;
  LexicalKind kind = LexicalKind::HasSuffix;
  std::size_t affix_length = 0;
  Tag to_tag = Tag::NN;

  friend bool operator==(const LexicalRule&, const LexicalRule&) = default;
};

enum class ContextTrigger {
  PrevTag,
  NextTag,
  Prev1Or2Tag,
  Next1Or2Tag,
  Prev1Or2Or3Tag,
  Next1Or2Or3Tag,
  Prev2Tag,
  Next2Tag,
  SurroundTag,  // tag before, tag after
  PrevBigram,   // tags at -2, -1
  NextBigram,   // tags at +1, +2
  PrevWord,
  NextWord,
  CurrentWord,
  Prev1Or2Word,
  Next1Or2Word,
  Prev2Word,
  Next2Word,
  WordPrevTag,  // tag at -1, current word
  WordNextTag,  // current word, tag at +1
  LeftBigram,   // word at -1, current word
  RightBigram,  // current word, word at +1
};

struct ContextualRule {
  Tag from_tag = Tag::NN;
  Tag to_tag = Tag::NN;
  ContextTrigger trigger = ContextTrigger::NextTag;
  // Raw arguments as written; tag arguments are also parsed into `tags`.
  std::array<std::string, 2> args;
  std::array<Tag, 2> tags{};

  friend bool operator==(const ContextualRule&,
                         const ContextualRule&) = default;
};

namespace detail {

struct LexicalKeyword {
  std::string_view name;
  LexicalKind kind;
  bool conditional;
};

inline constexpr std::array<LexicalKeyword, 14> kLexicalKeywords = {{
    {"hassuf", LexicalKind::HasSuffix, false},
    {"fhassuf", LexicalKind::HasSuffix, true},
    {"haspref", LexicalKind::HasPrefix, false},
    {"fhaspref", LexicalKind::HasPrefix, true},
    {"deletesuf", LexicalKind::DeleteSuffix, false},
    {"fdeletesuf", LexicalKind::DeleteSuffix, true},
    {"deletepref", LexicalKind::DeletePrefix, false},
    {"fdeletepref", LexicalKind::DeletePrefix, true},
    {"addsuf", LexicalKind::AddSuffix, false},
    {"faddsuf", LexicalKind::AddSuffix, true},
    {"addpref", LexicalKind::AddPrefix, false},
    {"faddpref", LexicalKind::AddPrefix, true},
    {"char", LexicalKind::HasChar, false},
    {"fchar", LexicalKind::HasChar, true},
}};

// How a trigger's arguments are read: 'T' tag, 'W' word.
struct TriggerKeyword {
  std::string_view name;
  ContextTrigger trigger;
  std::string_view args;
};

inline constexpr std::array<TriggerKeyword, 22> kTriggerKeywords = {{
    {"PREVTAG", ContextTrigger::PrevTag, "T"},
    {"NEXTTAG", ContextTrigger::NextTag, "T"},
    {"PREV1OR2TAG", ContextTrigger::Prev1Or2Tag, "T"},
    {"NEXT1OR2TAG", ContextTrigger::Next1Or2Tag, "T"},
    {"PREV1OR2OR3TAG", ContextTrigger::Prev1Or2Or3Tag, "T"},
    {"NEXT1OR2OR3TAG", ContextTrigger::Next1Or2Or3Tag, "T"},
    {"PREV2TAG", ContextTrigger::Prev2Tag, "T"},
    {"NEXT2TAG", ContextTrigger::Next2Tag, "T"},
    {"SURROUNDTAG", ContextTrigger::SurroundTag, "TT"},
    {"PREVBIGRAM", ContextTrigger::PrevBigram, "TT"},
    {"NEXTBIGRAM", ContextTrigger::NextBigram, "TT"},
    {"PREVWD", ContextTrigger::PrevWord, "W"},
    {"NEXTWD", ContextTrigger::NextWord, "W"},
    {"CURWD", ContextTrigger::CurrentWord, "W"},
    {"PREV1OR2WD", ContextTrigger::Prev1Or2Word, "W"},
    {"NEXT1OR2WD", ContextTrigger::Next1Or2Word, "W"},
    {"PREV2WD", ContextTrigger::Prev2Word, "W"},
    {"NEXT2WD", ContextTrigger::Next2Word, "W"},
    {"WDPREVTAG", ContextTrigger::WordPrevTag, "TW"},
    {"WDNEXTTAG", ContextTrigger::WordNextTag, "WT"},
    {"LBIGRAM", ContextTrigger::LeftBigram, "WW"},
    {"RBIGRAM", ContextTrigger::RightBigram, "WW"},
}};

inline Tag require_tag(std::string_view name, const std::string& source,
                       std::size_t line) {
  if (auto t = parse_tag(name)) return *t;
  throw LoadError(source, line, "unknown tag '" + std::string(name) + "'");
}

}  // namespace detail

inline LexicalRule parse_lexical_rule(std::string_view line_text,
                                      const std::string& source = "<memory>",
                                      std::size_t line = 0) {
  const auto f = text::split_whitespace(line_text);
  // The keyword sits at index 1 (unconditional) or 2 (conditional).
  for (std::size_t pos : {std::size_t{1}, std::size_t{2}}) {
    if (f.size() <= pos) continue;
    for (const auto& kw : detail::kLexicalKeywords) {
      if (f[pos] != kw.name) continue;
      if (kw.conditional != (pos == 2)) {
        throw LoadError(source, line,
                        "misplaced keyword '" + std::string(kw.name) + "'");
      }
      LexicalRule rule;
      rule.kind = kw.kind;
      std::size_t i = 0;
      if (kw.conditional) {
        rule.from_tag = detail::require_tag(f[i++], source, line);
      }
      rule.affix = std::string(f[i++]);
      ++i;  // keyword
      const bool has_length = kw.kind != LexicalKind::HasChar;
      const std::size_t expected = i + (has_length ? 2 : 1);
      if (f.size() != expected) {
        throw LoadError(source, line, "wrong field count for lexical rule");
      }
      if (has_length) {
        const auto len = text::parse_size(f[i++]);
        if (!len) throw LoadError(source, line, "bad affix length");
        rule.affix_length = *len;
      } else {
        rule.affix_length = 1;
      }
      if (rule.affix_length != rule.affix.size()) {
        throw LoadError(source, line, "affix length does not match affix");
      }
      rule.to_tag = detail::require_tag(f[i], source, line);
      return rule;
    }
  }
  throw LoadError(source, line,
                  "unknown lexical rule keyword in '" +
                      std::string(line_text) + "'");
}

inline ContextualRule parse_contextual_rule(
    std::string_view line_text, const std::string& source = "<memory>",
    std::size_t line = 0) {
  const auto f = text::split_whitespace(line_text);
  if (f.size() < 4) throw LoadError(source, line, "contextual rule too short");
  ContextualRule rule;
  rule.from_tag = detail::require_tag(f[0], source, line);
  rule.to_tag = detail::require_tag(f[1], source, line);
  for (const auto& kw : detail::kTriggerKeywords) {
    if (f[2] != kw.name) continue;
    if (f.size() != 3 + kw.args.size()) {
      throw LoadError(source, line,
                      "trigger " + std::string(kw.name) + " takes " +
                          std::to_string(kw.args.size()) + " argument(s)");
    }
    rule.trigger = kw.trigger;
    for (std::size_t a = 0; a < kw.args.size(); ++a) {
      rule.args[a] = std::string(f[3 + a]);
      if (kw.args[a] == 'T') {
        rule.tags[a] = detail::require_tag(f[3 + a], source, line);
      }
    }
    return rule;
  }
  throw LoadError(source, line,
                  "unknown contextual trigger '" + std::string(f[2]) + "'");
}

class TaggerModel {
 public:
  TaggerModel() = default;

  static TaggerModel load(const std::filesystem::path& lexicon,
                          const std::filesystem::path& lexical_rules,
                          const std::filesystem::path& contextual_rules) {
    TaggerModel model;
    {
      auto in = text::open_input(lexicon);
      model.read_lexicon(in, lexicon.string());
    }
    {
      auto in = text::open_input(lexical_rules);
      model.read_lexical_rules(in, lexical_rules.string());
    }
    {
      auto in = text::open_input(contextual_rules);
      model.read_contextual_rules(in, contextual_rules.string());
    }
    return model;
  }

  void read_lexicon(std::istream& in, const std::string& source) {
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto f = text::split_whitespace(raw);
      if (f.size() < 2) throw LoadError(source, line, "word without tags");
      for (std::size_t i = 1; i < f.size(); ++i) {
        detail::require_tag(f[i], source, line);
      }
      lexicon_.try_emplace(std::string(f[0]), *parse_tag(f[1]));
    });
  }

  void read_lexical_rules(std::istream& in, const std::string& source) {
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      lexical_rules_.push_back(parse_lexical_rule(raw, source, line));
    });
  }

  void read_contextual_rules(std::istream& in, const std::string& source) {
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      contextual_rules_.push_back(parse_contextual_rule(raw, source, line));
    });
  }

  void add_word(std::string word, Tag tag) {
    lexicon_.insert_or_assign(std::move(word), tag);
  }
  void add_rule(LexicalRule rule) { lexical_rules_.push_back(std::move(rule)); }
  void add_rule(ContextualRule rule) {
    contextual_rules_.push_back(std::move(rule));
  }

  // Exact spelling first, then lowercased so sentence-initial capitals
  // still find their entry.
  std::optional<Tag> lookup(std::string_view word) const {
    if (auto it = lexicon_.find(std::string(word)); it != lexicon_.end()) {
      return it->second;
    }
    if (auto it = lexicon_.find(text::to_lower(word)); it != lexicon_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  bool in_lexicon(std::string_view word) const {
    return lexicon_.count(std::string(word)) != 0;
  }

  std::size_t lexicon_size() const { return lexicon_.size(); }
  std::span<const LexicalRule> lexical_rules() const { return lexical_rules_; }
  std::span<const ContextualRule> contextual_rules() const {
    return contextual_rules_;
  }

 private:
  std::unordered_map<std::string, Tag> lexicon_;
  std::vector<LexicalRule> lexical_rules_;
  std::vector<ContextualRule> contextual_rules_;
};

inline TaggerModel load_tagger_model(
    const std::filesystem::path& lexicon,
    const std::filesystem::path& lexical_rules,
    const std::filesystem::path& contextual_rules) {
  return TaggerModel::load(lexicon, lexical_rules, contextual_rules);
}

// Tag of a token made only of punctuation or symbols, if it is one.
inline std::optional<Tag> punctuation_tag(std::string_view w) {
  if (w.empty()) return std::nullopt;
  for (char c : w) {
    if (text::is_word_char(c)) return std::nullopt;
  }
  if (w == ",") return Tag::Comma;
  if (w == "." || w == "?" || w == "!") return Tag::Period;
  if (w == ":" || w == ";" || w == "-" || w == "--") return Tag::Colon;
  if (w == "(" || w == "[" || w == "{") return Tag::LeftParen;
  if (w == ")" || w == "]" || w == "}") return Tag::RightParen;
  if (w == "`" || w == "``") return Tag::OpenQuote;
  if (w == "'" || w == "''" || w == "\"") return Tag::CloseQuote;
  if (w == "$") return Tag::Dollar;
  if (w == "#") return Tag::Hash;
  if (w.find_first_not_of('.') == std::string_view::npos) return Tag::Colon;
  return Tag::SYM;
}

inline bool is_numeral(std::string_view w) {
  if (w.empty()) return false;
  std::size_t i = 0;
  if (w[0] == '$' || w[0] == '-' || w[0] == '+') ++i;
  if (i >= w.size() || !text::is_digit(w[i])) return false;
  for (; i < w.size(); ++i) {
    const char c = w[i];
    if (!(text::is_digit(c) || c == '.' || c == ',' || c == '-' || c == '/' ||
          c == '%' || c == ':')) {
      return false;
    }
  }
  return true;
}

// Default tag for a word absent from the lexicon.
inline Tag default_tag(std::string_view w) {
  if (auto p = punctuation_tag(w)) return *p;
  if (is_numeral(w)) return Tag::CD;
  if (!w.empty() && text::is_upper(w.front())) return Tag::NNP;
  return Tag::NN;
}

inline TaggedSentence tag_initial(std::span<const std::string> tokens,
                                  const TaggerModel& model) {
  TaggedSentence out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const auto known = model.lookup(tok);
    out.push_back(TaggedToken{tok, known ? *known : default_tag(tok)});
  }
  return out;
}

inline bool lexical_rule_matches(const LexicalRule& rule,
                                 const TaggedToken& tok,
                                 const TaggerModel& model) {
  if (rule.from_tag && tok.tag != *rule.from_tag) return false;
  const std::string_view w = tok.word;
  const std::string_view a = rule.affix;
  switch (rule.kind) {
    case LexicalKind::HasSuffix:
      return w.size() >= a.size() && w.ends_with(a);
    case LexicalKind::HasPrefix:
      return w.size() >= a.size() && w.starts_with(a);
    case LexicalKind::DeleteSuffix:
      return w.size() > a.size() && w.ends_with(a) &&
             model.in_lexicon(w.substr(0, w.size() - a.size()));
    case LexicalKind::DeletePrefix:
      return w.size() > a.size() && w.starts_with(a) &&
             model.in_lexicon(w.substr(a.size()));
    case LexicalKind::AddSuffix:
      return model.in_lexicon(std::string(w) + std::string(a));
    case LexicalKind::AddPrefix:
      return model.in_lexicon(std::string(a) + std::string(w));
    case LexicalKind::HasChar:
      return w.find(a) != std::string_view::npos;
  }
  return false;
}

inline TaggedSentence apply_lexical_rules(TaggedSentence ts,
                                          std::span<const LexicalRule> rules,
                                          const TaggerModel& model) {
  for (const auto& rule : rules) {
    for (auto& tok : ts) {
      if (lexical_rule_matches(rule, tok, model)) tok.tag = rule.to_tag;
    }
  }
  return ts;
}

inline bool contextual_rule_matches(const ContextualRule& rule,
                                    const TaggedSentence& ts, std::size_t i) {
  const auto n = static_cast<std::ptrdiff_t>(ts.size());
  const auto at = static_cast<std::ptrdiff_t>(i);
  auto tag_is = [&](std::ptrdiff_t off, Tag t) {
    const auto j = at + off;
    return j >= 0 && j < n && ts[static_cast<std::size_t>(j)].tag == t;
  };
  auto word_is = [&](std::ptrdiff_t off, const std::string& w) {
    const auto j = at + off;
    return j >= 0 && j < n && ts[static_cast<std::size_t>(j)].word == w;
  };
  const Tag t0 = rule.tags[0];
  const Tag t1 = rule.tags[1];
  const std::string& w0 = rule.args[0];
  const std::string& w1 = rule.args[1];
  switch (rule.trigger) {
    case ContextTrigger::PrevTag: return tag_is(-1, t0);
    case ContextTrigger::NextTag: return tag_is(1, t0);
    case ContextTrigger::Prev1Or2Tag: return tag_is(-1, t0) || tag_is(-2, t0);
    case ContextTrigger::Next1Or2Tag: return tag_is(1, t0) || tag_is(2, t0);
    case ContextTrigger::Prev1Or2Or3Tag:
      return tag_is(-1, t0) || tag_is(-2, t0) || tag_is(-3, t0);
    case ContextTrigger::Next1Or2Or3Tag:
      return tag_is(1, t0) || tag_is(2, t0) || tag_is(3, t0);
    case ContextTrigger::Prev2Tag: return tag_is(-2, t0);
    case ContextTrigger::Next2Tag: return tag_is(2, t0);
    case ContextTrigger::SurroundTag: return tag_is(-1, t0) && tag_is(1, t1);
    case ContextTrigger::PrevBigram: return tag_is(-2, t0) && tag_is(-1, t1);
    case ContextTrigger::NextBigram: return tag_is(1, t0) && tag_is(2, t1);
    case ContextTrigger::PrevWord: return word_is(-1, w0);
    case ContextTrigger::NextWord: return word_is(1, w0);
    case ContextTrigger::CurrentWord: return word_is(0, w0);
    case ContextTrigger::Prev1Or2Word:
      return word_is(-1, w0) || word_is(-2, w0);
    case ContextTrigger::Next1Or2Word:
      return word_is(1, w0) || word_is(2, w0);
    case ContextTrigger::Prev2Word: return word_is(-2, w0);
    case ContextTrigger::Next2Word: return word_is(2, w0);
    case ContextTrigger::WordPrevTag: return tag_is(-1, t0) && word_is(0, w1);
    case ContextTrigger::WordNextTag: return word_is(0, w0) && tag_is(1, t1);
    case ContextTrigger::LeftBigram: return word_is(-1, w0) && word_is(0, w1);
    case ContextTrigger::RightBigram: return word_is(0, w0) && word_is(1, w1);
  }
  return false;
}

inline TaggedSentence apply_contextual_rules(
    TaggedSentence ts, std::span<const ContextualRule> rules) {
  for (const auto& rule : rules) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i].tag == rule.from_tag && contextual_rule_matches(rule, ts, i)) {
        ts[i].tag = rule.to_tag;
      }
    }
  }
  return ts;
}

inline TaggedSentence tag(std::span<const std::string> tokens,
                          const TaggerModel& model) {
  auto ts = tag_initial(tokens, model);
  ts = apply_lexical_rules(std::move(ts), model.lexical_rules(), model);
  return apply_contextual_rules(std::move(ts), model.contextual_rules());
}

}  // namespace svominer

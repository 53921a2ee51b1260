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

// A small regular-expression engine whose alphabet is whole tags.
//
// Patterns use the notation of tag-sequence grammars written over a
// space-terminated tag string: each literal is a tag name followed by a
// space ("NN "), "[$]" stands for a literal '$', and ( ) | * + ? have their
// usual meaning. Whitespace that does not terminate a tag name is ignored,
// so patterns may be wrapped across lines.
//
// Matching uses leftmost-longest semantics: scanning left to right, the
// first start position with a non-empty match wins, and from that position
// the longest match is taken. Matching resumes after it.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "svominer/text.hpp"

namespace svominer {

// Half-open token index range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
  friend auto operator<=>(const TokenSpan&, const TokenSpan&) = default;
};

class TagPattern {
 public:
  static TagPattern compile(std::string_view pattern) {
    Parser parser(lex(pattern));
    TagPattern p;
    Fragment f = parser.parse_alternation(p);
    if (!parser.at_end()) {
      throw std::invalid_argument("tag pattern: unbalanced ')'");
    }
    p.start_ = f.start;
    const std::size_t accept = p.add_state({StateKind::Accept, {}, 0, 0});
    p.patch(f, accept);
    return p;
  }

  // End of the longest non-empty match starting at `start`.
  std::optional<std::size_t> longest_match(std::span<const std::string> tags,
                                           std::size_t start) const {
    std::vector<std::size_t> current;
    std::vector<std::size_t> next;
    std::vector<std::size_t> mark(states_.size(), kUnmarked);
    std::size_t generation = 0;
    add_closure(start_, current, mark, generation);

    std::optional<std::size_t> best;
    std::size_t pos = start;
    while (true) {
      for (std::size_t s : current) {
        if (states_[s].kind == StateKind::Accept && pos > start) best = pos;
      }
      if (pos >= tags.size() || current.empty()) break;
      ++generation;
      next.clear();
      for (std::size_t s : current) {
        const State& st = states_[s];
        if (st.kind == StateKind::Literal && st.literal == tags[pos]) {
          add_closure(st.out, next, mark, generation);
        }
      }
      current.swap(next);
      ++pos;
    }
    return best;
  }

  std::vector<TokenSpan> find_all(std::span<const std::string> tags) const {
    std::vector<TokenSpan> out;
    std::size_t i = 0;
    while (i < tags.size()) {
      if (auto end = longest_match(tags, i)) {
        out.push_back(TokenSpan{i, *end});
        i = *end;
      } else {
        ++i;
      }
    }
    return out;
  }

  std::size_t state_count() const { return states_.size(); }

 private:
  static constexpr std::size_t kUnmarked = static_cast<std::size_t>(-1);
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  enum class StateKind { Literal, Split, Jump, Accept };

  struct State {
    StateKind kind;
    std::string literal;
    std::size_t out;
    std::size_t alt;
  };

  // A partially built automaton: entry state plus dangling exits to patch.
  struct Fragment {
    std::size_t start;
    std::vector<std::pair<std::size_t, bool>> exits;  // (state, is_alt)
  };

  enum class TokKind { Literal, Open, Close, Bar, Star, Plus, Question };
  struct Tok {
    TokKind kind;
    std::string text;
  };

  static std::vector<Tok> lex(std::string_view p) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < p.size()) {
      const char c = p[i];
      if (text::is_space(c)) { ++i; continue; }
      switch (c) {
        case '(': out.push_back({TokKind::Open, {}}); ++i; continue;
        case ')': out.push_back({TokKind::Close, {}}); ++i; continue;
        case '|': out.push_back({TokKind::Bar, {}}); ++i; continue;
        case '*': out.push_back({TokKind::Star, {}}); ++i; continue;
        case '+': out.push_back({TokKind::Plus, {}}); ++i; continue;
        case '?': out.push_back({TokKind::Question, {}}); ++i; continue;
        default: break;
      }
      std::string lit;
      while (i < p.size() && !text::is_space(p[i]) && p[i] != '(' &&
             p[i] != ')' && p[i] != '|' && p[i] != '*' && p[i] != '+' &&
             p[i] != '?') {
        if (p[i] == '[') {
          const auto close = p.find(']', i);
          if (close == std::string_view::npos || close != i + 2) {
            throw std::invalid_argument(
                "tag pattern: only single-character classes are supported");
          }
          lit.push_back(p[i + 1]);
          i = close + 1;
        } else {
          lit.push_back(p[i++]);
        }
      }
      out.push_back({TokKind::Literal, std::move(lit)});
    }
    return out;
  }

  std::size_t add_state(State s) {
    states_.push_back(std::move(s));
    return states_.size() - 1;
  }

  void patch(const Fragment& f, std::size_t target) {
    for (auto [state, is_alt] : f.exits) {
      if (is_alt) {
        states_[state].alt = target;
      } else {
        states_[state].out = target;
      }
    }
  }

  class Parser {
   public:
    explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

    bool at_end() const { return pos_ >= toks_.size(); }

    Fragment parse_alternation(TagPattern& p) {
      Fragment left = parse_sequence(p);
      while (peek(TokKind::Bar)) {
        ++pos_;
        Fragment right = parse_sequence(p);
        const std::size_t split =
            p.add_state({StateKind::Split, {}, left.start, right.start});
        Fragment f{split, {}};
        f.exits = left.exits;
        f.exits.insert(f.exits.end(), right.exits.begin(), right.exits.end());
        left = std::move(f);
      }
      return left;
    }

   private:
    bool peek(TokKind k) const { return pos_ < toks_.size() && toks_[pos_].kind == k; }

    Fragment parse_sequence(TagPattern& p) {
      std::optional<Fragment> acc;
      while (pos_ < toks_.size() && toks_[pos_].kind != TokKind::Bar &&
             toks_[pos_].kind != TokKind::Close) {
        Fragment item = parse_repeat(p);
        if (!acc) {
          acc = std::move(item);
        } else {
          p.patch(*acc, item.start);
          acc->exits = std::move(item.exits);
        }
      }
      if (!acc) {
        // Empty sequence: a jump with one dangling exit.
        const std::size_t j = p.add_state({StateKind::Jump, {}, kNone, kNone});
        return Fragment{j, {{j, false}}};
      }
      return std::move(*acc);
    }

    Fragment parse_repeat(TagPattern& p) {
      Fragment atom = parse_atom(p);
      while (pos_ < toks_.size()) {
        const TokKind k = toks_[pos_].kind;
        if (k == TokKind::Star) {
          ++pos_;
          const std::size_t split =
              p.add_state({StateKind::Split, {}, atom.start, kNone});
          p.patch(atom, split);
          atom = Fragment{split, {{split, true}}};
        } else if (k == TokKind::Plus) {
          ++pos_;
          const std::size_t split =
              p.add_state({StateKind::Split, {}, atom.start, kNone});
          p.patch(atom, split);
          atom = Fragment{atom.start, {{split, true}}};
        } else if (k == TokKind::Question) {
          ++pos_;
          const std::size_t split =
              p.add_state({StateKind::Split, {}, atom.start, kNone});
          Fragment f{split, atom.exits};
          f.exits.push_back({split, true});
          atom = std::move(f);
        } else {
          break;
        }
      }
      return atom;
    }

    Fragment parse_atom(TagPattern& p) {
      if (pos_ >= toks_.size()) {
        throw std::invalid_argument("tag pattern: unexpected end");
      }
      const Tok& t = toks_[pos_];
      if (t.kind == TokKind::Literal) {
        ++pos_;
        const std::size_t s =
            p.add_state({StateKind::Literal, t.text, kNone, kNone});
        return Fragment{s, {{s, false}}};
      }
      if (t.kind == TokKind::Open) {
        ++pos_;
        Fragment inner = parse_alternation(p);
        if (!peek(TokKind::Close)) {
          throw std::invalid_argument("tag pattern: missing ')'");
        }
        ++pos_;
        return inner;
      }
      throw std::invalid_argument("tag pattern: unexpected operator");
    }

    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
  };

  void add_closure(std::size_t s, std::vector<std::size_t>& set,
                   std::vector<std::size_t>& mark,
                   std::size_t generation) const {
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      if (cur == kNone || mark[cur] == generation) continue;
      mark[cur] = generation;
      const State& st = states_[cur];
      switch (st.kind) {
        case StateKind::Split:
          stack.push_back(st.alt);
          stack.push_back(st.out);
          break;
        case StateKind::Jump:
          stack.push_back(st.out);
          break;
        default:
          set.push_back(cur);
      }
    }
  }

  std::vector<State> states_;
  std::size_t start_ = 0;
};

}  // namespace svominer

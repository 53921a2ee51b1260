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

// Reference implementations used only by the tests. None of them share code
// with the library beyond plain data types.

#pragma once

#include <regex.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// Tag grammars as POSIX extended regular expressions over a tag string in
// which every tag is followed by one space.
inline const char* const kNounPhraseEre =
    "((("
    "(PDT )?(DT |PRP[$] |WDT |WP[$] )"
    "(VBG |VBD |VBN |JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
    "(NN |NNS |NNP |NNPS |CD )+"
    ")|("
    "(PDT )?(JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
    "(NN |NNS |NNP |NNPS |CD )+"
    ")|EX |PRP |WP |WDT )POS )?"
    "(("
    "(PDT )?(DT |PRP[$] |WDT |WP[$] )"
    "(VBG |VBD |VBN |JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
    "(NN |NNS |NNP |NNPS |CD )+"
    ")|("
    "(PDT )?(JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
    "(NN |NNS |NNP |NNPS |CD )+"
    ")|EX |PRP |WP |WDT )";

inline const char* const kVerbPhraseEre =
    "(RB |RBR |RBS |WRB )*(MD )?(RB |RBR |RBS |WRB )*"
    "(VB |VBD |VBG |VBN |VBP |VBZ )"
    "(VB |VBD |VBG |VBN |VBP |VBZ |RB |RBR |RBS |WRB )*(RP )?"
    "(TO (RB )*(VB |VBN )(RP )?)?";

class PosixPattern {
 public:
  explicit PosixPattern(const std::string& ere) {
    const std::string anchored = "^(" + ere + ")";
    if (regcomp(&re_, anchored.c_str(), REG_EXTENDED) != 0) {
      throw std::runtime_error("regcomp failed");
    }
  }
  ~PosixPattern() { regfree(&re_); }
  PosixPattern(const PosixPattern&) = delete;
  PosixPattern& operator=(const PosixPattern&) = delete;

  // Length in characters of the longest match at the start of `s`, or -1.
  long match_length(const char* s) const {
    regmatch_t m[1];
    if (regexec(&re_, s, 1, m, 0) != 0) return -1;
    return static_cast<long>(m[0].rm_eo - m[0].rm_so);
  }

 private:
  regex_t re_{};
};

using Span = std::pair<std::size_t, std::size_t>;  // [begin, end)

// Leftmost-longest non-empty matches, tried at each token boundary.
inline std::vector<Span> find_spans(const PosixPattern& p,
                                    const std::vector<std::string>& tags) {
  std::string joined;
  std::vector<std::size_t> offset;
  for (const auto& t : tags) {
    offset.push_back(joined.size());
    joined += t;
    joined += ' ';
  }
  offset.push_back(joined.size());
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < tags.size()) {
    const long len = p.match_length(joined.c_str() + offset[i]);
    if (len > 0) {
      const std::size_t end_char = offset[i] + static_cast<std::size_t>(len);
      const auto it = std::find(offset.begin(), offset.end(), end_char);
      if (it == offset.end()) throw std::runtime_error("match off boundary");
      const auto j = static_cast<std::size_t>(it - offset.begin());
      out.emplace_back(i, j);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

struct Chunks {
  std::vector<Span> nx;
  std::vector<Span> vx;
};

// protect -> noun phrases -> unprotect -> mask -> verb phrases.
inline Chunks chunk(const std::vector<std::string>& tags) {
  static const PosixPattern np(kNounPhraseEre);
  static const PosixPattern vp(kVerbPhraseEre);
  std::vector<std::string> work = tags;
  for (auto& t : work) {
    if (t == "VBD" || t == "VBG" || t == "VBN") t += "_X";
  }
  Chunks c;
  c.nx = find_spans(np, work);
  work = tags;
  for (const auto& [b, e] : c.nx) {
    for (std::size_t k = b; k < e; ++k) work[k] = "_MASK";
  }
  c.vx = find_spans(vp, work);
  return c;
}

// Literal execution of the relation-mining pseudocode:
//   for each subject protein, for each object protein,
//     select assertions with the verb whose subject contains the subject
//     protein and whose object contains the object protein.
struct Atom {
  std::string doc, subject, verb, object;
};

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline bool contains_token(const std::string& clause, const std::string& name) {
  std::istringstream ss(clause);
  std::string tok;
  while (ss >> tok) {
    if (lower(tok) == lower(name)) return true;
  }
  return false;
}

inline std::set<std::tuple<std::string, std::string, std::string>>
nested_loop_relations(const std::vector<Atom>& atoms,
                      const std::vector<std::string>& entities,
                      const std::string& verb) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& s : entities) {
    for (const auto& o : entities) {
      for (const auto& a : atoms) {
        if (a.verb == verb && contains_token(a.subject, s) &&
            contains_token(a.object, o)) {
          out.emplace(a.doc, s, o);
        }
      }
    }
  }
  return out;
}

// Exact quantile of the resampled proportion: with k of n flags true, a
// bootstrap resample mean is Binomial(n, k/n) / n.
inline double binomial_proportion_quantile(std::size_t n, std::size_t k,
                                           double q) {
  const double p = static_cast<double>(k) / static_cast<double>(n);
  double cdf = 0.0;
  for (std::size_t x = 0; x <= n; ++x) {
    const double logpmf = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) -
                          std::lgamma(n - x + 1.0) +
                          (x ? x * std::log(p) : 0.0) +
                          (n - x ? (n - x) * std::log1p(-p) : 0.0);
    cdf += std::exp(logpmf);
    if (cdf >= q) return static_cast<double>(x) / static_cast<double>(n);
  }
  return 1.0;
}

// Percentile bootstrap written independently: binomial draws, nearest-rank
// percentiles.
inline std::pair<double, double> simple_bootstrap(std::size_t n, std::size_t k,
                                                  std::size_t resamples,
                                                  double level,
                                                  std::uint64_t seed) {
  std::minstd_rand rng(static_cast<std::uint32_t>(seed * 2654435761u + 17));
  std::binomial_distribution<std::size_t> draw(
      n, static_cast<double>(k) / static_cast<double>(n));
  std::vector<double> means(resamples);
  for (auto& m : means) {
    m = static_cast<double>(draw(rng)) / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const double a = (1.0 - level) / 2.0;
  auto rank = [&](double q) {
    auto idx = static_cast<std::size_t>(std::ceil(q * resamples));
    return means[std::min(resamples - 1, idx == 0 ? 0 : idx - 1)];
  };
  return {rank(a), rank(1.0 - a)};
}

// Line-level grammar for the DOT subset the exporter writes.
inline bool valid_dot(const std::string& dot, bool directed,
                      std::size_t* nodes = nullptr,
                      std::size_t* edges = nullptr) {
  static const std::string id = R"("(?:[^"\\]|\\.)*")";
  const std::regex node_re("  " + id + ";");
  const std::regex edge_re("  " + id + (directed ? " -> " : " -- ") + id +
                           R"( \[label=)" + id + ", confidence=" + id +
                           R"(\];)");
  std::istringstream in(dot);
  std::string line;
  if (!std::getline(in, line)) return false;
  if (line != (directed ? "digraph interactions {" : "graph interactions {")) {
    return false;
  }
  std::size_t n = 0;
  std::size_t e = 0;
  bool closed = false;
  bool in_edges = false;
  while (std::getline(in, line)) {
    if (closed) return false;
    if (line == "}") {
      closed = true;
    } else if (!in_edges && std::regex_match(line, node_re)) {
      ++n;
    } else if (std::regex_match(line, edge_re)) {
      in_edges = true;
      ++e;
    } else {
      return false;
    }
  }
  if (nodes) *nodes = n;
  if (edges) *edges = e;
  return closed;
}

}  // namespace oracle

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

// Scoring of predicted entity pairs against a gold standard, and percentile
// bootstrap intervals for precision.
//
// Gold file: tab separated "agent target [doc_id]" rows. An optional header
// line "#mode=directional" or "#mode=undirected" states how the pairs are
// meant; in undirected mode (A,B) and (B,A) are the same entry.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/text.hpp"

namespace svominer {

using EntityPair = std::pair<std::string, std::string>;

struct GoldEntry {
  std::string agent;
  std::string target;
  std::optional<std::string> doc_id;
};

inline bool pairs_match(const EntityPair& a, const EntityPair& b,
                        bool directional) {
  if (a == b) return true;
  return !directional && a.first == b.second && a.second == b.first;
}

class GoldSet {
 public:
  GoldSet() = default;
  explicit GoldSet(bool directional) : directional_(directional) {}

  static GoldSet load(const std::filesystem::path& path) {
    auto in = text::open_input(path);
    return parse(in, path.string());
  }

  static GoldSet parse(std::istream& in, const std::string& source) {
    GoldSet gold;
    std::string raw;
    std::size_t line = 0;
    std::vector<std::pair<GoldEntry, std::size_t>> rows;
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      const auto t = text::trim(raw);
      if (t.empty()) continue;
      if (t.starts_with("#mode=")) {
        const auto mode = t.substr(6);
        if (mode == "directional") {
          gold.directional_ = true;
        } else if (mode == "undirected") {
          gold.directional_ = false;
        } else {
          throw LoadError(source, line, "unknown mode '" + std::string(mode) + "'");
        }
        continue;
      }
      if (t.front() == '#') continue;
      const auto f = text::split(t, '\t');
      if (f.size() < 2 || f.size() > 3 || text::trim(f[0]).empty() ||
          text::trim(f[1]).empty()) {
        throw LoadError(source, line, "expected agent<TAB>target[<TAB>doc_id]");
      }
      GoldEntry e{std::string(text::trim(f[0])), std::string(text::trim(f[1])),
                  std::nullopt};
      if (f.size() == 3 && !text::trim(f[2]).empty()) {
        e.doc_id = std::string(text::trim(f[2]));
      }
      rows.emplace_back(std::move(e), line);
    }
    for (auto& [e, l] : rows) gold.add(std::move(e));
    return gold;
  }

  // Ignored when an equivalent pair is already present.
  bool add(GoldEntry e) {
    const EntityPair p{e.agent, e.target};
    for (const auto& g : entries_) {
      if (pairs_match({g.agent, g.target}, p, directional_)) return false;
    }
    entries_.push_back(std::move(e));
    return true;
  }

  bool add(std::string agent, std::string target) {
    return add(GoldEntry{std::move(agent), std::move(target), std::nullopt});
  }

  bool directional() const { return directional_; }
  const std::vector<GoldEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::vector<EntityPair> pairs() const {
    std::vector<EntityPair> out;
    for (const auto& e : entries_) out.emplace_back(e.agent, e.target);
    return out;
  }

 private:
  bool directional_ = true;
  std::vector<GoldEntry> entries_;
};

// true_positives counts predicted pairs that match some gold pair;
// matched_gold counts gold pairs matched by some prediction. The two agree
// in directional mode; keeping both makes undirected scores dominate
// directional ones for precision and recall alike.
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  std::size_t true_positives = 0;
  std::size_t matched_gold = 0;
  std::size_t predicted_count = 0;
  std::size_t gold_count = 0;
};

inline std::vector<EntityPair> unique_pairs(std::vector<EntityPair> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// One flag per distinct predicted pair (sorted order): does it match gold?
inline std::vector<bool> correctness_flags(
    const std::vector<EntityPair>& predicted, const GoldSet& gold,
    bool directional) {
  const auto pred = unique_pairs(predicted);
  const auto g = gold.pairs();
  std::vector<bool> out;
  out.reserve(pred.size());
  for (const auto& p : pred) {
    out.push_back(std::any_of(g.begin(), g.end(), [&](const EntityPair& x) {
      return pairs_match(p, x, directional);
    }));
  }
  return out;
}

inline Metrics score(const std::vector<EntityPair>& predicted,
                     const GoldSet& gold, bool directional) {
  const auto pred = unique_pairs(predicted);
  const auto g = gold.pairs();
  Metrics m;
  m.predicted_count = pred.size();
  m.gold_count = g.size();
  for (bool f : correctness_flags(pred, gold, directional)) {
    m.true_positives += f ? 1 : 0;
  }
  for (const auto& x : g) {
    if (std::any_of(pred.begin(), pred.end(), [&](const EntityPair& p) {
          return pairs_match(p, x, directional);
        })) {
      ++m.matched_gold;
    }
  }
  if (m.predicted_count > 0) {
    m.precision = static_cast<double>(m.true_positives) /
                  static_cast<double>(m.predicted_count);
  }
  if (m.gold_count > 0) {
    m.recall = static_cast<double>(m.matched_gold) /
               static_cast<double>(m.gold_count);
  }
  return m;
}

struct BootstrapResult {
  double low = 0.0;
  double high = 0.0;
  double point = 0.0;
};

inline constexpr std::size_t kMinResamples = 1000;

// Sample quantile with linear interpolation between order statistics
// (Hyndman and Fan type 7). `sorted` must be non-empty and ascending.
inline double quantile(const std::vector<double>& sorted, double q) {
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

// Mean of one resample. Each resample has its own generator seeded from
// (seed, index), so results do not depend on how work is split.
inline double bootstrap_resample_mean(const std::vector<bool>& flags,
                                      std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, flags.size() - 1);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < flags.size(); ++k) hits += flags[pick(rng)] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(flags.size());
}

inline BootstrapResult bootstrap_ci(const std::vector<bool>& flags,
                                    std::size_t resamples = 10000,
                                    double level = 0.95,
                                    std::uint64_t seed = 1,
                                    unsigned threads = 1) {
  if (flags.empty()) throw Error("bootstrap needs a non-empty sample");
  if (resamples < kMinResamples) {
    throw ConfigError("bootstrap needs at least 1000 resamples");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw ConfigError("confidence level must lie strictly between 0 and 1");
  }
  std::vector<double> means(resamples);
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (threads == 1) {
    for (std::size_t r = 0; r < resamples; ++r) {
      means[r] = bootstrap_resample_mean(flags, seed, r);
    }
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < resamples; r += threads) {
          means[r] = bootstrap_resample_mean(flags, seed, r);
        }
      });
    }
  }
  std::sort(means.begin(), means.end());
  BootstrapResult out;
  out.point = static_cast<double>(std::count(flags.begin(), flags.end(), true)) /
              static_cast<double>(flags.size());
  const double alpha = (1.0 - level) / 2.0;
  out.low = quantile(means, alpha);
  out.high = quantile(means, 1.0 - alpha);
  return out;
}

}  // namespace svominer

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

// Relation mining over atomic assertions: keep one verb, reduce subject and
// object clauses to the known entities they mention, and aggregate the
// resulting pairs across documents.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/svo.hpp"
#include "svominer/text.hpp"

namespace svominer {

inline constexpr double kDefaultBasePrecision = 0.82;

class EntityList {
 public:
  EntityList() = default;
  EntityList(std::initializer_list<std::string> names) {
    for (const auto& n : names) add(n);
  }

  static EntityList load(const std::filesystem::path& path) {
    auto in = text::open_input(path);
    return parse(in, path.string());
  }

  static EntityList parse(std::istream& in, const std::string& source) {
    EntityList list;
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto name = text::trim(raw);
      if (text::has_whitespace(name)) {
        throw LoadError(source, line, "entity name contains whitespace");
      }
      list.add(name, source, line);
    });
    return list;
  }

  // Names compare case-insensitively; the first spelling is canonical.
  void add(std::string_view name, const std::string& source = "<memory>",
           std::size_t line = 0) {
    if (name.empty() || text::has_whitespace(name)) {
      throw LoadError(source, line, "entity names must be single tokens");
    }
    if (by_key_.try_emplace(text::to_lower(name), std::string(name)).second) {
      names_.emplace_back(name);
    }
  }

  // Canonical spelling of `token` if it names an entity.
  const std::string* find(std::string_view token) const {
    auto it = by_key_.find(text::to_lower(token));
    return it == by_key_.end() ? nullptr : &it->second;
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::string> by_key_;
};

inline std::vector<AtomicAssertion> filter_by_verb(
    const std::vector<AtomicAssertion>& atoms, std::string_view verb) {
  std::vector<AtomicAssertion> out;
  for (const auto& a : atoms) {
    if (a.verb == verb) out.push_back(a);
  }
  return out;
}

// Distinct entities named by whole tokens of the clause, in order of first
// appearance. Empty when the clause mentions none.
inline std::vector<std::string> clean_clause(std::string_view clause,
                                             const EntityList& entities) {
  std::vector<std::string> out;
  for (auto tok : text::split_whitespace(clause)) {
    if (const std::string* name = entities.find(tok)) {
      if (std::find(out.begin(), out.end(), *name) == out.end()) {
        out.push_back(*name);
      }
    }
  }
  return out;
}

struct EntityRelation {
  std::string doc_id;
  std::string subject;
  std::string object;

  friend bool operator==(const EntityRelation&,
                         const EntityRelation&) = default;
  friend auto operator<=>(const EntityRelation&,
                          const EntityRelation&) = default;
};

// Every (subject entity, object entity) pair of every matching assertion,
// one row per (doc, subject, object), sorted.
inline std::vector<EntityRelation> find_entity_relations(
    const std::vector<AtomicAssertion>& atoms, const EntityList& entities,
    std::string_view verb) {
  std::set<EntityRelation> rows;
  if (entities.empty()) return {};
  for (const auto& a : atoms) {
    if (a.verb != verb) continue;
    const auto subjects = clean_clause(a.subject, entities);
    if (subjects.empty()) continue;
    const auto objects = clean_clause(a.object, entities);
    for (const auto& s : subjects) {
      for (const auto& o : objects) rows.insert({a.doc_id, s, o});
    }
  }
  return {rows.begin(), rows.end()};
}

// Probability that at least one of n independent sources, each correct with
// probability p, is correct.
inline double confidence(std::size_t n, double p) {
  return 1.0 - std::pow(1.0 - p, static_cast<double>(n));
}

struct InteractionRecord {
  std::string subject;
  std::string verb;
  std::string object;
  std::set<std::string> doc_ids;
  double confidence = 0.0;
  bool self_loop = false;

  std::size_t n() const { return doc_ids.size(); }
  friend bool operator==(const InteractionRecord&,
                         const InteractionRecord&) = default;
};

inline void check_base_precision(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("base precision must lie strictly between 0 and 1");
  }
}

// Groups rows by (subject, object), or by the unordered pair when not
// directional, in which case the lexicographically smaller entity becomes
// the subject. Output is sorted by (subject, object).
inline std::vector<InteractionRecord> aggregate(
    const std::vector<EntityRelation>& rows, std::string_view verb,
    double p = kDefaultBasePrecision, bool directional = true) {
  check_base_precision(p);
  std::map<std::pair<std::string, std::string>, std::set<std::string>> groups;
  for (const auto& r : rows) {
    auto key = std::make_pair(r.subject, r.object);
    if (!directional && key.second < key.first) std::swap(key.first, key.second);
    groups[key].insert(r.doc_id);
  }
  std::vector<InteractionRecord> out;
  out.reserve(groups.size());
  for (auto& [key, docs] : groups) {
    InteractionRecord rec;
    rec.subject = key.first;
    rec.verb = std::string(verb);
    rec.object = key.second;
    rec.doc_ids = std::move(docs);
    rec.confidence = confidence(rec.doc_ids.size(), p);
    rec.self_loop = rec.subject == rec.object;
    out.push_back(std::move(rec));
  }
  return out;
}

// Counts of records by number of supporting documents; every count above 7
// is pooled under kPooledBucket.
inline constexpr std::size_t kPooledBucket = 8;

inline std::map<std::size_t, std::size_t> occurrence_histogram(
    const std::vector<InteractionRecord>& records) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& r : records) {
    ++out[std::min(r.n(), kPooledBucket)];
  }
  return out;
}

inline std::string histogram_label(std::size_t bucket) {
  return bucket >= kPooledBucket ? ">7" : std::to_string(bucket);
}

inline constexpr std::string_view kInteractionHeader =
    "#subject\tverb\tobject\tn\tconfidence\tdoc_ids";

inline std::string format_confidence(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", c);
  return buf;
}

inline void write_interactions(std::ostream& os,
                               const std::vector<InteractionRecord>& records) {
  os << kInteractionHeader << '\n';
  for (const auto& r : records) {
    std::vector<std::string_view> docs(r.doc_ids.begin(), r.doc_ids.end());
    os << r.subject << '\t' << r.verb << '\t' << r.object << '\t' << r.n()
       << '\t' << format_confidence(r.confidence) << '\t'
       << text::join(docs, ",") << '\n';
  }
}

inline std::vector<InteractionRecord> read_interactions(
    std::istream& in, const std::string& source) {
  std::vector<InteractionRecord> out;
  text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
    const auto f = text::split(raw, '\t');
    if (f.size() != 6) {
      throw LoadError(source, line, "expected 6 tab-separated fields");
    }
    InteractionRecord r;
    r.subject = std::string(f[0]);
    r.verb = std::string(f[1]);
    r.object = std::string(f[2]);
    const auto n = text::parse_size(f[3]);
    const auto c = text::parse_double(f[4]);
    if (!n || !c) throw LoadError(source, line, "bad count or confidence");
    for (auto d : text::split(f[5], ',')) {
      if (!d.empty()) r.doc_ids.emplace(d);
    }
    if (r.doc_ids.size() != *n) {
      throw LoadError(source, line, "count disagrees with doc_ids");
    }
    r.confidence = *c;
    r.self_loop = r.subject == r.object;
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace svominer

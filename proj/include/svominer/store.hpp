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

// Single-file store of atomic assertions, indexed by document and by verb.
//
// File format: the header line "#svominer-store\t1" followed by one
// "doc_id<TAB>subject<TAB>verb<TAB>object" row per assertion, documents in
// ascending id order.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "svominer/error.hpp"
#include "svominer/svo.hpp"
#include "svominer/text.hpp"

namespace svominer {

inline constexpr std::string_view kStoreHeader = "#svominer-store\t1";

class AssertionStore {
 public:
  AssertionStore() = default;
  AssertionStore(const AssertionStore& other) {
    std::shared_lock lock(other.mu_);
    by_doc_ = other.by_doc_;
    by_verb_ = other.by_verb_;
  }
  AssertionStore& operator=(const AssertionStore& other) {
    if (this != &other) {
      AssertionStore copy(other);
      std::unique_lock lock(mu_);
      by_doc_ = std::move(copy.by_doc_);
      by_verb_ = std::move(copy.by_verb_);
    }
    return *this;
  }

  // Replaces whatever the store held for `doc_id`.
  void put(const std::string& doc_id, std::vector<AtomicAssertion> atoms) {
    std::unique_lock lock(mu_);
    erase_locked(doc_id);
    if (atoms.empty()) return;
    for (auto& a : atoms) {
      a.doc_id = doc_id;
      by_verb_[a.verb].insert(doc_id);
    }
    by_doc_[doc_id] = std::move(atoms);
  }

  void erase(const std::string& doc_id) {
    std::unique_lock lock(mu_);
    erase_locked(doc_id);
  }

  std::vector<AtomicAssertion> by_doc(const std::string& doc_id) const {
    std::shared_lock lock(mu_);
    auto it = by_doc_.find(doc_id);
    return it == by_doc_.end() ? std::vector<AtomicAssertion>{} : it->second;
  }

  std::vector<AtomicAssertion> by_verb(std::string_view verb) const {
    std::shared_lock lock(mu_);
    std::vector<AtomicAssertion> out;
    auto it = by_verb_.find(std::string(verb));
    if (it == by_verb_.end()) return out;
    for (const auto& doc : it->second) {
      for (const auto& a : by_doc_.at(doc)) {
        if (a.verb == verb) out.push_back(a);
      }
    }
    return out;
  }

  std::vector<AtomicAssertion> all() const {
    std::shared_lock lock(mu_);
    std::vector<AtomicAssertion> out;
    for (const auto& [doc, atoms] : by_doc_) {
      out.insert(out.end(), atoms.begin(), atoms.end());
    }
    return out;
  }

  std::vector<std::string> verbs() const {
    std::shared_lock lock(mu_);
    std::vector<std::string> out;
    for (const auto& [v, docs] : by_verb_) out.push_back(v);
    return out;
  }

  std::size_t document_count() const {
    std::shared_lock lock(mu_);
    return by_doc_.size();
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    std::size_t n = 0;
    for (const auto& [doc, atoms] : by_doc_) n += atoms.size();
    return n;
  }

  void write(std::ostream& os) const {
    os << kStoreHeader << '\n';
    for (const auto& a : all()) {
      os << a.doc_id << '\t' << a.subject << '\t' << a.verb << '\t'
         << a.object << '\n';
    }
  }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write(out);
    if (!out) throw Error("write failed for " + path.string());
  }

  static AssertionStore read(std::istream& in, const std::string& source) {
    std::string raw;
    if (!std::getline(in, raw) || raw != kStoreHeader) {
      throw LoadError(source, 1, "not an assertion store");
    }
    std::map<std::string, std::vector<AtomicAssertion>> docs;
    std::size_t line = 1;
    while (std::getline(in, raw)) {
      ++line;
      if (raw.empty()) continue;
      const auto f = text::split(raw, '\t');
      if (f.size() != 4) {
        throw LoadError(source, line, "expected 4 tab-separated fields");
      }
      docs[std::string(f[0])].push_back({std::string(f[0]), std::string(f[1]),
                                         std::string(f[2]),
                                         std::string(f[3])});
    }
    AssertionStore store;
    for (auto& [doc, atoms] : docs) store.put(doc, std::move(atoms));
    return store;
  }

  static AssertionStore load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(path.string(), "cannot open");
    return read(in, path.string());
  }

  friend bool operator==(const AssertionStore& a, const AssertionStore& b) {
    return a.all() == b.all();
  }

 private:
  void erase_locked(const std::string& doc_id) {
    auto it = by_doc_.find(doc_id);
    if (it == by_doc_.end()) return;
    for (const auto& a : it->second) {
      auto v = by_verb_.find(a.verb);
      if (v == by_verb_.end()) continue;
      v->second.erase(doc_id);
      if (v->second.empty()) by_verb_.erase(v);
    }
    by_doc_.erase(it);
  }

  mutable std::shared_mutex mu_;
  std::map<std::string, std::vector<AtomicAssertion>> by_doc_;
  std::map<std::string, std::set<std::string>> by_verb_;
};

}  // namespace svominer

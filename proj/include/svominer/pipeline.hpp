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

// End-to-end text to assertion pipeline:
//
//   normalize -> split -> tokenize -> tag -> chunk -> stem -> extract
//
// Documents are independent. A failure in one is recorded and the rest of
// the batch continues.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "svominer/corpus.hpp"
#include "svominer/error.hpp"
#include "svominer/miner.hpp"
#include "svominer/normalizer.hpp"
#include "svominer/sentencer.hpp"
#include "svominer/stemmer.hpp"
#include "svominer/store.hpp"
#include "svominer/svo.hpp"
#include "svominer/tagger.hpp"
#include "svominer/text.hpp"

namespace svominer {

// key=value settings. File names are resolved against data_dir unless
// absolute.
struct Config {
  std::filesystem::path data_dir = "data";
  std::map<std::string, std::string> files = {
      {"abbrev_dict", "abbreviations.tsv"},
      {"acronyms", "acronyms.txt"},
      {"contractions", "contractions.tsv"},
      {"lexicon", "lexicon.txt"},
      {"lexical_rules", "lexical_rules.txt"},
      {"contextual_rules", "contextual_rules.txt"},
      {"stem_rules", "stem_rules.txt"},
      {"irregulars", "irregulars.txt"},
      {"suffixes", "suffixes.txt"},
      {"prefixes", "prefixes.txt"},
  };
  double base_precision = kDefaultBasePrecision;
  unsigned jobs = 1;

  void set(std::string_view key, std::string_view value) {
    const std::string k(key);
    const std::string v(text::trim(value));
    if (k == "data_dir") {
      data_dir = v;
    } else if (k == "base_precision") {
      const auto p = text::parse_double(v);
      if (!p) throw ConfigError("base_precision: not a number '" + v + "'");
      check_base_precision(*p);
      base_precision = *p;
    } else if (k == "jobs") {
      const auto n = text::parse_size(v);
      if (!n || *n == 0) throw ConfigError("jobs: expected a positive integer");
      jobs = static_cast<unsigned>(*n);
    } else if (files.count(k)) {
      if (v.empty()) throw ConfigError(k + ": empty path");
      files[k] = v;
    } else {
      throw ConfigError("unknown configuration key '" + k + "'");
    }
  }

  static Config parse(std::istream& in, const std::string& source) {
    Config c;
    text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
      const auto eq = raw.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(source + ":" + std::to_string(line) +
                          ": expected key=value");
      }
      try {
        c.set(text::trim(raw.substr(0, eq)), raw.substr(eq + 1));
      } catch (const ConfigError& e) {
        throw ConfigError(source + ":" + std::to_string(line) + ": " +
                          e.what());
      }
    });
    return c;
  }

  static Config load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    return parse(in, path.string());
  }

  std::filesystem::path path(const std::string& key) const {
    const std::filesystem::path p = files.at(key);
    return p.is_absolute() ? p : data_dir / p;
  }
};

struct PipelineResources {
  AbbreviationDictionary abbreviations;
  AcronymSet acronyms;
  ContractionMap contractions;
  TaggerModel tagger;
  StemRuleSet stems;

  static PipelineResources load(const Config& c) {
    PipelineResources r;
    r.abbreviations = AbbreviationDictionary::load(c.path("abbrev_dict"));
    r.acronyms = AcronymSet::load(c.path("acronyms"));
    r.contractions = ContractionMap::load(c.path("contractions"));
    r.tagger = TaggerModel::load(c.path("lexicon"), c.path("lexical_rules"),
                                 c.path("contextual_rules"));
    r.stems = StemRuleSet::load(c.path("stem_rules"), c.path("irregulars"),
                                c.path("suffixes"), c.path("prefixes"));
    return r;
  }
};

inline AnalyzedSentence analyze_sentence(std::string_view sentence,
                                         const PipelineResources& r) {
  const auto tokens = tokenize(sentence, r.acronyms, r.contractions);
  return analyze(tag(tokens, r.tagger), r.stems);
}

inline std::vector<AnalyzedSentence> analyze_document(
    std::string_view text, const PipelineResources& r) {
  if (!text::is_valid_utf8(text)) throw Error("text is not valid UTF-8");
  const std::string normalized = r.abbreviations.normalize(text);
  std::vector<AnalyzedSentence> out;
  for (const auto& s : split_sentences(normalized, r.acronyms)) {
    out.push_back(analyze_sentence(s.text, r));
  }
  return out;
}

inline std::vector<SVOAssertion> process_document(const Document& doc,
                                                  const PipelineResources& r) {
  if (doc.malformed_utf8) throw Error("abstract is not valid UTF-8");
  std::vector<SVOAssertion> out;
  for (const auto& s : analyze_document(doc.text, r)) {
    auto svos = extract_svos(s, doc.doc_id);
    out.insert(out.end(), std::make_move_iterator(svos.begin()),
               std::make_move_iterator(svos.end()));
  }
  return out;
}

struct DocumentOutcome {
  std::string doc_id;
  std::vector<SVOAssertion> svos;
  std::optional<std::string> error;
};

struct PipelineResult {
  std::vector<DocumentOutcome> documents;  // input order
  AssertionStore store;
  std::size_t failures = 0;

  std::vector<SVOAssertion> svos() const {
    std::vector<SVOAssertion> out;
    for (const auto& d : documents) {
      out.insert(out.end(), d.svos.begin(), d.svos.end());
    }
    return out;
  }
};

// Output does not depend on `jobs`: each worker fills its documents' slots
// and the store is built afterwards in input order.
inline PipelineResult run_pipeline(const std::vector<Document>& docs,
                                   const PipelineResources& r,
                                   unsigned jobs = 1) {
  PipelineResult result;
  result.documents.resize(docs.size());
  auto work = [&](std::size_t i) {
    auto& out = result.documents[i];
    out.doc_id = docs[i].doc_id;
    try {
      out.svos = process_document(docs[i], r);
    } catch (const std::exception& e) {
      out.svos.clear();
      out.error = e.what();
    }
  };
  jobs = std::max(1u, std::min<unsigned>(
                          jobs, static_cast<unsigned>(std::max<std::size_t>(
                                    docs.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < docs.size(); i = next++) work(i);
      });
    }
  }
  for (const auto& d : result.documents) {
    if (d.error) {
      ++result.failures;
      continue;
    }
    result.store.put(d.doc_id, atomize(d.svos));
  }
  return result;
}

}  // namespace svominer

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

// JSON-lines corpus reader: one {"pmid": ..., "abstract": ...} object per
// line. Blank lines are skipped.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "svominer/error.hpp"
#include "svominer/text.hpp"

namespace svominer {

struct Document {
  std::string doc_id;
  std::string text;
  // Set when the record's bytes were not UTF-8; `text` then carries U+FFFD
  // replacements and the pipeline reports the document as failed.
  bool malformed_utf8 = false;

  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::vector<std::string> warnings;
};

// A repeated pmid keeps its first position and takes the later text.
inline Corpus parse_corpus(std::istream& in, const std::string& source) {
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> index;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (text::trim(raw).empty()) continue;
    const bool malformed = !text::is_valid_utf8(raw);
    if (malformed) raw = text::replace_invalid_utf8(raw);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw LoadError(source, line, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw LoadError(source, line, "record is not an object");
    auto pmid = j.find("pmid");
    auto abstract = j.find("abstract");
    if (pmid == j.end() || abstract == j.end()) {
      throw LoadError(source, line, "record needs \"pmid\" and \"abstract\"");
    }
    Document doc;
    if (pmid->is_string()) {
      doc.doc_id = pmid->get<std::string>();
    } else if (pmid->is_number_unsigned()) {
      doc.doc_id = std::to_string(pmid->get<std::uint64_t>());
    } else {
      throw LoadError(source, line, "\"pmid\" must be a string or integer");
    }
    if (doc.doc_id.empty() || text::has_whitespace(doc.doc_id)) {
      throw LoadError(source, line, "\"pmid\" must be a non-empty token");
    }
    if (!abstract->is_string()) {
      throw LoadError(source, line, "\"abstract\" must be a string");
    }
    doc.text = abstract->get<std::string>();
    doc.malformed_utf8 = malformed;
    if (auto it = index.find(doc.doc_id); it != index.end()) {
      corpus.warnings.push_back(source + ":" + std::to_string(line) +
                                ": duplicate pmid " + doc.doc_id +
                                ", later record replaces earlier");
      corpus.documents[it->second].text = std::move(doc.text);
      corpus.documents[it->second].malformed_utf8 = doc.malformed_utf8;
      continue;
    }
    index.emplace(doc.doc_id, corpus.documents.size());
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

inline Corpus ingest_corpus(const std::filesystem::path& path) {
  auto in = text::open_input(path);
  return parse_corpus(in, path.string());
}

}  // namespace svominer

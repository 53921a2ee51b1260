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

// Subject-verb-object extraction over a chunked, stemmed sentence.
//
// The subject is the first NX; the verb is the first VX after it; the
// objects are every NX between that VX and the next one. Extraction then
// continues at the next VX, taking the nearest NX before it as subject.

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "svominer/chunker.hpp"
#include "svominer/error.hpp"
#include "svominer/stemmer.hpp"
#include "svominer/tagger.hpp"
#include "svominer/text.hpp"

namespace svominer {

struct AnalyzedSentence {
  TaggedSentence tokens;
  std::vector<std::string> stems;  // parallel to tokens
  ChunkedSentence chunks;
};

struct SVOAssertion {
  std::string doc_id;
  std::string subject;
  std::string verb;
  std::vector<std::string> objects;
  TokenSpan subject_span;
  TokenSpan verb_span;
  std::vector<TokenSpan> object_spans;

  friend bool operator==(const SVOAssertion&, const SVOAssertion&) = default;
};

struct AtomicAssertion {
  std::string doc_id;
  std::string subject;
  std::string verb;
  std::string object;

  friend bool operator==(const AtomicAssertion&,
                         const AtomicAssertion&) = default;
  friend auto operator<=>(const AtomicAssertion&,
                          const AtomicAssertion&) = default;
};

inline AnalyzedSentence analyze(TaggedSentence ts, const StemRuleSet& rules) {
  AnalyzedSentence out;
  out.stems.reserve(ts.size());
  for (const auto& tok : ts) out.stems.push_back(rules.stem(tok.word, tok.tag));
  out.chunks = chunk(ts);
  out.tokens = std::move(ts);
  return out;
}

inline std::string clause_text(const TaggedSentence& ts, TokenSpan span) {
  std::string out;
  for (std::size_t i = span.begin; i < span.end; ++i) {
    if (i != span.begin) out.push_back(' ');
    out += ts[i].word;
  }
  return out;
}

// Stem of the last verb-tagged token of a verb group, so "can bind" gives
// "bind".
inline std::string head_verb(const AnalyzedSentence& s, TokenSpan vx) {
  for (std::size_t i = vx.end; i > vx.begin; --i) {
    if (is_verb_tag(s.tokens[i - 1].tag)) return s.stems[i - 1];
  }
  return s.stems[vx.end - 1];
}

inline std::vector<SVOAssertion> extract_svos(const AnalyzedSentence& s,
                                              std::string_view doc_id = {}) {
  std::vector<ChunkItem> groups;
  for (const auto& item : s.chunks.items) {
    if (item.label != ChunkLabel::Outside) groups.push_back(item);
  }

  std::vector<SVOAssertion> out;
  std::optional<std::size_t> subject;
  std::size_t i = 0;
  for (; i < groups.size(); ++i) {
    if (groups[i].label == ChunkLabel::NX) {
      subject = i;
      break;
    }
  }
  if (!subject) return out;

  // Invariant: groups[*subject] is an NX before position i.
  for (i = *subject + 1; i < groups.size(); ++i) {
    if (groups[i].label != ChunkLabel::VX) continue;
    const std::size_t verb = i;
    std::size_t j = verb + 1;
    std::vector<std::size_t> objects;
    for (; j < groups.size() && groups[j].label == ChunkLabel::NX; ++j) {
      objects.push_back(j);
    }
    if (!objects.empty()) {
      SVOAssertion a;
      a.doc_id = std::string(doc_id);
      a.subject_span = groups[*subject].span;
      a.subject = clause_text(s.tokens, a.subject_span);
      a.verb_span = groups[verb].span;
      a.verb = head_verb(s, a.verb_span);
      for (std::size_t o : objects) {
        a.object_spans.push_back(groups[o].span);
        a.objects.push_back(clause_text(s.tokens, groups[o].span));
      }
      out.push_back(std::move(a));
      subject = objects.back();
    }
    i = j - 1;
  }
  return out;
}

inline std::vector<AtomicAssertion> atomize(const SVOAssertion& a) {
  std::vector<AtomicAssertion> out;
  out.reserve(a.objects.size());
  for (const auto& o : a.objects) {
    out.push_back({a.doc_id, a.subject, a.verb, o});
  }
  return out;
}

inline std::vector<AtomicAssertion> atomize(
    const std::vector<SVOAssertion>& as) {
  std::vector<AtomicAssertion> out;
  for (const auto& a : as) {
    auto atoms = atomize(a);
    out.insert(out.end(), atoms.begin(), atoms.end());
  }
  return out;
}

// Dump line: doc_id, subject, verb, then each object, tab separated.
inline std::string format_svo(const SVOAssertion& a) {
  std::string out = a.doc_id + '\t' + a.subject + '\t' + a.verb;
  for (const auto& o : a.objects) out += '\t' + o;
  return out;
}

inline void write_svo_dump(std::ostream& os,
                           const std::vector<SVOAssertion>& as) {
  for (const auto& a : as) os << format_svo(a) << '\n';
}

// Spans are not part of the dump and come back empty.
inline std::vector<SVOAssertion> read_svo_dump(std::istream& in,
                                               const std::string& source) {
  std::vector<SVOAssertion> out;
  text::for_each_data_line(in, [&](std::size_t line, std::string_view raw) {
    const auto f = text::split(raw, '\t');
    if (f.size() < 4) {
      throw LoadError(source, line, "expected doc, subject, verb, objects");
    }
    SVOAssertion a;
    a.doc_id = std::string(f[0]);
    a.subject = std::string(f[1]);
    a.verb = std::string(f[2]);
    for (std::size_t k = 3; k < f.size(); ++k) a.objects.emplace_back(f[k]);
    out.push_back(std::move(a));
  });
  return out;
}

}  // namespace svominer

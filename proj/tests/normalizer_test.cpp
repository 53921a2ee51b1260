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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "svominer/normalizer.hpp"

namespace svominer {
namespace {

AbbreviationDictionary parse_dict(const std::string& tsv) {
  std::istringstream in(tsv);
  return AbbreviationDictionary::parse(in, "test.tsv");
}

TEST(Normalizer, KeepsRowsAboveCutoff) {
  const auto d = parse_dict(
      "MAP kinase kinase\tMAPKK\t0.95\n"
      "alpha subunit\tAS\t0.50\n"
      "exactly cutoff\tEC\t0.88\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.entries()[0].abbreviation, "MAPKK");
  EXPECT_EQ(d.normalize("the alpha subunit"), "the alpha subunit");
  EXPECT_EQ(d.normalize("exactly cutoff"), "exactly cutoff");
}

TEST(Normalizer, EmptyDictionaryIsIdentity) {
  const auto d = parse_dict("# only a comment\n\n");
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.normalize("MAP kinase kinase binds"), "MAP kinase kinase binds");
}

TEST(Normalizer, ReplacesLongPhrase) {
  const auto d = parse_dict(
      "phosphatase and tensin homolog deleted on chromosome 10\tPTEN10\t0.92\n");
  EXPECT_EQ(d.normalize(
                "phosphatase and tensin homolog deleted on chromosome 10 binds X"),
            "PTEN10 binds X");
}

TEST(Normalizer, NoMatchIsUnchanged) {
  const auto d = parse_dict("MAP kinase\tMAPK\t0.91\n");
  EXPECT_EQ(d.normalize("no dictionary words here"), "no dictionary words here");
}

TEST(Normalizer, CaseInsensitiveAtWordBoundaries) {
  const auto d = parse_dict("insulin receptor\tIR\t0.90\n");
  EXPECT_EQ(d.normalize("Insulin Receptor binds"), "IR binds");
  EXPECT_EQ(d.normalize("the insulin  receptor."), "the IR.");
  EXPECT_EQ(d.normalize("proinsulin receptor"), "proinsulin receptor");
  EXPECT_EQ(d.normalize("insulin receptors"), "insulin receptors");
}

TEST(Normalizer, RejectsMultiTokenAbbreviation) {
  EXPECT_THROW(parse_dict("alpha beta\tgamma delta\t0.99\n"), LoadError);
}

TEST(Normalizer, OutputIsNotRescanned) {
  const auto d = parse_dict(
      "kinase kinase\tkinase\t0.95\n"
      "kinase binds\tKB\t0.95\n");
  // "kinase kinase" -> "kinase"; the produced "kinase" is not combined with
  // the following "binds".
  EXPECT_EQ(d.normalize("kinase kinase binds"), "kinase binds");
}

TEST(Normalizer, MalformedRowsNameTheLine) {
  try {
    parse_dict("a\tA\t0.9\nbroken row\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_dict("a\tA\tnot-a-number\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Normalizer, ConflictNamesBothRows) {
  try {
    parse_dict("MAP kinase\tMAPK\t0.91\nx\tX\t0.9\nmap  kinase\tMK\t0.95\n");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
  // Same mapping twice is harmless.
  EXPECT_EQ(parse_dict("MAP kinase\tMAPK\t0.91\nMAP kinase\tMAPK\t0.95\n").size(),
            1u);
}

TEST(Normalizer, OrderIsLongestFirstThenLexicographic) {
  const auto d = parse_dict(
      "bb\tB\t0.9\naa\tA\t0.9\nccc\tC\t0.9\n");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.entries()[0].long_form, "ccc");
  EXPECT_EQ(d.entries()[1].long_form, "aa");
  EXPECT_EQ(d.entries()[2].long_form, "bb");
}

// All ways of choosing non-overlapping dictionary matches; the one covering
// the most characters must be unique and equal to normalize().
TEST(Normalizer, LongestFirstIsUniqueMaximalCoverage) {
  const std::vector<AbbreviationEntry> entries = {
      {"MAP kinase kinase", "MAPKK", 0.95},
      {"kinase kinase", "KK", 0.95},
      {"MAP kinase", "MAPK", 0.95},
  };
  const auto d = AbbreviationDictionary::from_entries(entries);
  const std::string input = "the MAP kinase kinase binds";

  struct Occ {
    std::size_t begin, end;
    std::string abbr;
  };
  std::vector<Occ> occs;
  auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(c));
    return s;
  };
  const std::string li = lower(input);
  for (const auto& e : entries) {
    const std::string lf = lower(e.long_form);
    for (std::size_t p = li.find(lf); p != std::string::npos;
         p = li.find(lf, p + 1)) {
      const bool left = p == 0 || li[p - 1] == ' ';
      const bool right = p + lf.size() == li.size() || li[p + lf.size()] == ' ';
      if (left && right) occs.push_back({p, p + lf.size(), e.abbreviation});
    }
  }
  ASSERT_EQ(occs.size(), 3u);

  std::size_t best = 0;
  std::vector<std::string> best_outputs;
  for (unsigned mask = 0; mask < (1u << occs.size()); ++mask) {
    std::vector<Occ> chosen;
    for (std::size_t k = 0; k < occs.size(); ++k) {
      if (mask & (1u << k)) chosen.push_back(occs[k]);
    }
    bool overlap = false;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (chosen[a].begin < chosen[b].end && chosen[b].begin < chosen[a].end) {
          overlap = true;
        }
      }
    }
    if (overlap) continue;
    std::sort(chosen.begin(), chosen.end(),
              [](const Occ& x, const Occ& y) { return x.begin < y.begin; });
    std::size_t covered = 0;
    std::string out;
    std::size_t pos = 0;
    for (const auto& c : chosen) {
      out += input.substr(pos, c.begin - pos) + c.abbr;
      pos = c.end;
      covered += c.end - c.begin;
    }
    out += input.substr(pos);
    if (covered > best) {
      best = covered;
      best_outputs = {out};
    } else if (covered == best) {
      best_outputs.push_back(out);
    }
  }
  ASSERT_EQ(best_outputs.size(), 1u);
  EXPECT_EQ(d.normalize(input), best_outputs[0]);
  EXPECT_EQ(d.normalize(input), "the MAPKK binds");
}

TEST(Normalizer, BundledDictionary) {
  const auto d = load_dictionary(SVOMINER_DATA_DIR "/abbreviations.tsv");
  EXPECT_EQ(normalize("MAP kinase kinase binds mitogen-activated protein kinase",
                      d),
            "MAPKK binds MAPK");
  EXPECT_EQ(normalize("growth factor receptor-bound protein 2", d),
            "growth factor receptor-bound protein 2");
  EXPECT_EQ(normalize("alpha subunit", d), "alpha subunit");
}

// Idempotence and byte preservation outside matches on random texts.
TEST(Normalizer, RandomTextProperties) {
  const auto d = load_dictionary(SVOMINER_DATA_DIR "/abbreviations.tsv");
  const std::vector<std::string> words = {
      "MAP", "kinase", "insulin", "receptor", "substrate", "1", "binds",
      "the", "protein", "B", "Insulin", "Receptor", "of", "cAMP"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string t;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      if (k) t += ' ';
      t += words[pick(rng)];
    }
    const std::string once = d.normalize(t);
    EXPECT_EQ(d.normalize(once), once) << t;
    for (const auto& e : d.entries()) {
      bool found = false;
      for (std::size_t p = 0; p < once.size(); ++p) {
        if (AbbreviationDictionary::match_at(once, p, e.long_form)) found = true;
      }
      EXPECT_FALSE(found) << e.long_form << " in " << once;
    }
  }
}

TEST(Normalizer, UnmatchedPrefixAndSuffixBytesPreserved) {
  const auto d = parse_dict("MAP kinase\tMAPK\t0.91\n");
  const std::string in = "  (x) MAP kinase; y\tz ";
  const std::string out = d.normalize(in);
  EXPECT_EQ(out, "  (x) MAPK; y\tz ");
}

}  // namespace
}  // namespace svominer

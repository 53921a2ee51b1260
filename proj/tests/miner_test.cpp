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

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "svominer/miner.hpp"

namespace svominer {
namespace {

const EntityList kProteins = {"MEK", "MAPK", "ERK", "Raf", "insulin", "CREB"};

TEST(Miner, FilterByVerb) {
  const std::vector<AtomicAssertion> atoms = {{"1", "A", "bind", "B"},
                                              {"1", "A", "activate", "B"},
                                              {"2", "C", "bind", "D"}};
  const auto f = filter_by_verb(atoms, "bind");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].subject, "A");
  EXPECT_EQ(f[1].subject, "C");
  EXPECT_TRUE(filter_by_verb(atoms, "inhibit").empty());
}

TEST(Miner, CleanClause) {
  EXPECT_EQ(clean_clause("MAPK in the cytoplasm", kProteins),
            (std::vector<std::string>{"MAPK"}));
  EXPECT_TRUE(clean_clause("the cytoplasm", kProteins).empty());
  EXPECT_EQ(clean_clause("MEK and MAPK complex", kProteins),
            (std::vector<std::string>{"MEK", "MAPK"}));
  // Whole tokens only, case-insensitive, canonical spelling.
  EXPECT_EQ(clean_clause("raf MEKK erk", kProteins),
            (std::vector<std::string>{"Raf", "ERK"}));
  EXPECT_EQ(clean_clause("MEK MEK", kProteins),
            (std::vector<std::string>{"MEK"}));
}

TEST(Miner, EntityListRejectsBadNames) {
  std::istringstream ok("# comment\nMEK\nmek\nERK\n");
  const auto list = EntityList::parse(ok, "e");
  EXPECT_EQ(list.names(), (std::vector<std::string>{"MEK", "ERK"}));
  std::istringstream bad("MEK\nprotein kinase C\n");
  EXPECT_THROW(EntityList::parse(bad, "e"), LoadError);
}

TEST(Miner, CartesianRows) {
  const std::vector<AtomicAssertion> atoms = {
      {"1", "MEK and Raf", "bind", "ERK in the cytoplasm"},
      {"1", "MEK", "bind", "ERK"},
      {"2", "the protein", "bind", "ERK"}};
  const auto rows = find_entity_relations(atoms, kProteins, "bind");
  EXPECT_EQ(rows, (std::vector<EntityRelation>{{"1", "MEK", "ERK"},
                                               {"1", "Raf", "ERK"}}));
}

TEST(Miner, SelfLoopIsKeptAndFlagged) {
  const std::vector<AtomicAssertion> atoms = {{"9", "MEK", "bind", "MEK"}};
  const auto rows = find_entity_relations(atoms, kProteins, "bind");
  ASSERT_EQ(rows.size(), 1u);
  const auto recs = aggregate(rows, "bind");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].self_loop);
}

// Random instances against the literal nested-loop formulation.
TEST(Miner, AgreesWithNestedLoopOracle) {
  const std::vector<std::string> vocab = {
      "MEK", "ERK", "Raf", "Akt", "p53", "the", "kinase", "in", "and",
      "complex", "cells", "mek", "erk", "AKT", "MEKK", "P53"};
  const std::vector<std::string> verbs = {"bind", "activate", "inhibit"};
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> n_atoms(0, 50);
    std::uniform_int_distribution<int> n_ents(0, 10);
    std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
    std::uniform_int_distribution<std::size_t> verb(0, verbs.size() - 1);
    std::uniform_int_distribution<int> clause_len(1, 4);
    std::uniform_int_distribution<int> doc(1, 6);
    // Entities are distinct ignoring case so that canonical spelling is the
    // only spelling.
    std::vector<std::string> ents;
    std::set<std::string> seen;
    const int ne = n_ents(rng);
    for (int k = 0; k < ne; ++k) {
      const auto& w = vocab[word(rng)];
      if (seen.insert(oracle::lower(w)).second) ents.push_back(w);
    }
    EntityList list;
    for (const auto& e : ents) list.add(e);
    auto clause = [&] {
      std::string c;
      const int n = clause_len(rng);
      for (int k = 0; k < n; ++k) {
        if (k) c += ' ';
        c += vocab[word(rng)];
      }
      return c;
    };
    std::vector<AtomicAssertion> atoms;
    std::vector<oracle::Atom> plain;
    const int na = n_atoms(rng);
    for (int k = 0; k < na; ++k) {
      AtomicAssertion a{std::to_string(doc(rng)), clause(), verbs[verb(rng)],
                        clause()};
      plain.push_back({a.doc_id, a.subject, a.verb, a.object});
      atoms.push_back(std::move(a));
    }
    const auto expected = oracle::nested_loop_relations(plain, ents, "bind");
    std::set<std::tuple<std::string, std::string, std::string>> got;
    const auto rows = find_entity_relations(atoms, list, "bind");
    for (const auto& r : rows) got.emplace(r.doc_id, r.subject, r.object);
    ASSERT_EQ(got.size(), rows.size());
    ASSERT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(Miner, ConfidenceValues) {
  EXPECT_NEAR(confidence(1, 0.82), 0.82, 1e-12);
  EXPECT_NEAR(confidence(2, 0.82), 0.9676, 1e-12);
  EXPECT_NEAR(confidence(5, 0.82), 1.0 - 0.18 * 0.18 * 0.18 * 0.18 * 0.18,
              1e-12);
  EXPECT_EQ(confidence(0, 0.82), 0.0);
  for (std::size_t n = 1; n < 40; ++n) {
    EXPECT_LE(confidence(n, 0.82), confidence(n + 1, 0.82));
    EXPECT_LE(confidence(n, 0.82), 1.0);
  }
}

TEST(Miner, BasePrecisionMustBeOpenUnitInterval) {
  const std::vector<EntityRelation> rows = {{"1", "A", "B"}};
  for (double p : {0.0, 1.0, -0.5, 1.5, std::nan("")}) {
    EXPECT_THROW(aggregate(rows, "bind", p), ConfigError) << p;
  }
  EXPECT_NO_THROW(aggregate(rows, "bind", 0.5));
}

TEST(Miner, AggregateCountsDistinctDocuments) {
  const std::vector<EntityRelation> rows = {
      {"1", "A", "B"}, {"2", "A", "B"}, {"2", "B", "A"}, {"3", "C", "D"}};
  const auto d = aggregate(rows, "bind");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].subject, "A");
  EXPECT_EQ(d[0].n(), 2u);
  EXPECT_NEAR(d[0].confidence, confidence(2, 0.82), 1e-15);
  EXPECT_EQ(d[1].subject, "B");
  EXPECT_EQ(d[1].n(), 1u);
  const auto u = aggregate(rows, "bind", 0.82, false);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].subject, "A");
  EXPECT_EQ(u[0].object, "B");
  EXPECT_EQ(u[0].doc_ids, (std::set<std::string>{"1", "2"}));
}

TEST(Miner, UndirectedNeverHasMoreRecords) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> ent(0, 5);
  std::uniform_int_distribution<int> doc(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EntityRelation> rows;
    for (int k = 0; k < trial % 30; ++k) {
      rows.push_back({std::to_string(doc(rng)), "E" + std::to_string(ent(rng)),
                      "E" + std::to_string(ent(rng))});
    }
    const auto d = aggregate(rows, "bind");
    const auto u = aggregate(rows, "bind", 0.82, false);
    EXPECT_LE(u.size(), d.size());
    for (const auto& rec : u) {
      std::set<std::string> docs;
      for (const auto& r : d) {
        if ((r.subject == rec.subject && r.object == rec.object) ||
            (r.subject == rec.object && r.object == rec.subject)) {
          docs.insert(r.doc_ids.begin(), r.doc_ids.end());
        }
      }
      EXPECT_EQ(rec.doc_ids, docs);
    }
  }
}

std::vector<InteractionRecord> records_with_counts(
    const std::vector<std::size_t>& counts) {
  std::vector<InteractionRecord> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    InteractionRecord r;
    r.subject = "S" + std::to_string(i);
    for (std::size_t d = 0; d < counts[i]; ++d) r.doc_ids.insert(std::to_string(d));
    out.push_back(r);
  }
  return out;
}

TEST(Miner, Histogram) {
  using H = std::map<std::size_t, std::size_t>;
  EXPECT_EQ(occurrence_histogram(records_with_counts({1, 1, 2})),
            (H{{1, 2}, {2, 1}}));
  EXPECT_TRUE(occurrence_histogram({}).empty());
  EXPECT_EQ(occurrence_histogram(records_with_counts({1, 2, 3, 4, 5, 6, 7, 8, 9})),
            (H{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 2}}));
  EXPECT_EQ(histogram_label(7), "7");
  EXPECT_EQ(histogram_label(kPooledBucket), ">7");
}

TEST(Miner, InteractionTableRoundTrip) {
  const std::vector<EntityRelation> rows = {
      {"11", "insulin", "CREB"}, {"12", "insulin", "CREB"}, {"11", "MEK", "MEK"}};
  const auto recs = aggregate(rows, "activate");
  std::ostringstream os;
  write_interactions(os, recs);
  EXPECT_EQ(os.str(),
            "#subject\tverb\tobject\tn\tconfidence\tdoc_ids\n"
            "MEK\tactivate\tMEK\t1\t0.820000\t11\n"
            "insulin\tactivate\tCREB\t2\t0.967600\t11,12\n");
  std::istringstream in(os.str());
  const auto back = read_interactions(in, "t");
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].subject, recs[i].subject);
    EXPECT_EQ(back[i].doc_ids, recs[i].doc_ids);
    EXPECT_EQ(back[i].self_loop, recs[i].self_loop);
    EXPECT_NEAR(back[i].confidence, recs[i].confidence, 1e-6);
  }
  std::istringstream bad("A\tbind\tB\t2\t0.5\t1\n");
  EXPECT_THROW(read_interactions(bad, "t"), LoadError);
}

}  // namespace
}  // namespace svominer

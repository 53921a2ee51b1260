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

// svominer command-line tool.
//
// Exit status: 0 success, 1 some documents failed, 2 configuration or input
// error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svominer/svominer.hpp"

namespace {

using namespace svominer;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

struct GlobalOptions {
  std::string config;
  std::string data_dir;
  std::string abbrev_dict;
  unsigned jobs = 0;
};

Config make_config(const GlobalOptions& g) {
  Config c;
#ifdef SVOMINER_DATA_DIR
  c.data_dir = SVOMINER_DATA_DIR;
#endif
  if (!g.config.empty()) c = Config::load(g.config);
  if (!g.data_dir.empty()) c.data_dir = g.data_dir;
  if (!g.abbrev_dict.empty()) c.set("abbrev_dict", g.abbrev_dict);
  if (g.jobs > 0) c.jobs = g.jobs;
  return c;
}

// Writes through a file when a path is given, else stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  fn(out);
  if (!out) throw Error("write failed for " + path);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return text::read_file(path);
}

PipelineResult parse_corpus_file(const std::string& path,
                                 const PipelineResources& res, unsigned jobs) {
  auto corpus = ingest_corpus(path);
  for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
  auto result = run_pipeline(corpus.documents, res, jobs);
  for (const auto& d : result.documents) {
    if (d.error) {
      std::cerr << "error: document " << d.doc_id << ": " << *d.error << '\n';
    }
  }
  return result;
}

int run_normalize(const GlobalOptions& g, const std::string& in,
                  const std::string& out) {
  const Config c = make_config(g);
  const auto dict = AbbreviationDictionary::load(c.path("abbrev_dict"));
  const std::string text = read_input(in);
  with_output(out, [&](std::ostream& os) { os << dict.normalize(text); });
  return kExitOk;
}

struct ParseOptions {
  std::string corpus;
  std::string out;
  std::string store;
  std::string chunks;
};

int run_parse(const GlobalOptions& g, const ParseOptions& o) {
  const Config c = make_config(g);
  const auto res = PipelineResources::load(c);
  const auto result = parse_corpus_file(o.corpus, res, c.jobs);
  with_output(o.out, [&](std::ostream& os) {
    write_svo_dump(os, result.svos());
  });
  if (!o.store.empty()) result.store.save(o.store);
  if (!o.chunks.empty()) {
    const auto corpus = ingest_corpus(o.corpus);
    with_output(o.chunks, [&](std::ostream& os) {
      for (const auto& d : corpus.documents) {
        try {
          for (const auto& s : analyze_document(d.text, res)) {
            os << d.doc_id << '\t' << format_chunks(s.chunks, s.tokens)
               << '\n';
          }
        } catch (const Error&) {
          // Already reported by the pipeline run.
        }
      }
    });
  }
  return result.failures > 0 ? kExitPartial : kExitOk;
}

struct MineOptions {
  std::string store;
  std::string corpus;
  std::string verb;
  std::string entities;
  std::string out;
  std::string dot;
  bool undirected = false;
  std::optional<double> base_precision;
};

int run_mine(const GlobalOptions& g, const MineOptions& o) {
  Config c = make_config(g);
  if (o.base_precision) {
    check_base_precision(*o.base_precision);
    c.base_precision = *o.base_precision;
  }
  if (o.store.empty() == o.corpus.empty()) {
    throw ConfigError("mine needs exactly one of --store or --corpus");
  }
  const auto entities = EntityList::load(o.entities);
  AssertionStore store;
  std::size_t failures = 0;
  if (!o.store.empty()) {
    store = AssertionStore::load(o.store);
  } else {
    const auto res = PipelineResources::load(c);
    auto result = parse_corpus_file(o.corpus, res, c.jobs);
    failures = result.failures;
    store = std::move(result.store);
  }
  const auto rows = find_entity_relations(store.by_verb(o.verb), entities,
                                          o.verb);
  const auto records =
      aggregate(rows, o.verb, c.base_precision, !o.undirected);
  with_output(o.out, [&](std::ostream& os) {
    write_interactions(os, records);
  });
  if (!o.dot.empty()) {
    with_output(o.dot, [&](std::ostream& os) {
      os << emit_dot(records, !o.undirected);
    });
  }
  std::cerr << "records: " << records.size() << '\n';
  for (const auto& [bucket, count] : occurrence_histogram(records)) {
    std::cerr << "  n=" << histogram_label(bucket) << ": " << count << '\n';
  }
  return failures > 0 ? kExitPartial : kExitOk;
}

struct EvalOptions {
  std::string gold;
  std::string predicted;
  bool directional = false;
  std::size_t bootstrap = 0;
  std::uint64_t seed = 1;
  double level = 0.95;
};

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
  return buf;
}

int run_eval(const GlobalOptions& g, const EvalOptions& o) {
  const Config c = make_config(g);
  const auto gold = GoldSet::load(o.gold);
  std::ifstream in(o.predicted);
  if (!in) throw LoadError(o.predicted, "cannot open");
  std::vector<EntityPair> predicted;
  for (const auto& r : read_interactions(in, o.predicted)) {
    predicted.emplace_back(r.subject, r.object);
  }
  const bool directional = o.directional || gold.directional();
  const auto m = score(predicted, gold, directional);
  std::cout << "mode\t" << (directional ? "directional" : "undirected")
            << '\n'
            << "precision\t" << percent(m.precision) << '\t'
            << m.true_positives << '/' << m.predicted_count << '\n'
            << "recall\t" << percent(m.recall) << '\t' << m.matched_gold
            << '/' << m.gold_count << '\n';
  if (o.bootstrap > 0) {
    const auto flags = correctness_flags(predicted, gold, directional);
    const auto ci = bootstrap_ci(flags, o.bootstrap, o.level, o.seed,
                                 c.jobs);
    std::cout << "precision_ci\t" << percent(ci.low) << '\t'
              << percent(ci.high) << '\n';
  }
  return kExitOk;
}

int run_graph(const std::string& interactions, const std::string& dot,
              bool undirected) {
  std::ifstream in(interactions);
  if (!in) throw LoadError(interactions, "cannot open");
  const auto records = read_interactions(in, interactions);
  with_output(dot, [&](std::ostream& os) {
    os << emit_dot(records, !undirected);
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subject-verb-object extraction and relation mining"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--config", g.config, "key=value configuration file");
  app.add_option("--data-dir", g.data_dir, "Directory holding the data files");
  app.add_option("--abbrev-dict", g.abbrev_dict, "Abbreviation dictionary");
  app.add_option("-j,--jobs", g.jobs, "Worker threads");

  std::string norm_in;
  std::string norm_out;
  auto* normalize = app.add_subcommand("normalize", "Apply the dictionary");
  normalize->add_option("input", norm_in, "Text file (default stdin)");
  normalize->add_option("-o,--out", norm_out, "Output file");

  ParseOptions po;
  auto* parse = app.add_subcommand("parse", "Extract SVO assertions");
  parse->add_option("--corpus", po.corpus, "JSON-lines corpus")->required();
  parse->add_option("-o,--out", po.out, "SVO dump (default stdout)");
  parse->add_option("--store", po.store, "Write the assertion store");
  parse->add_option("--chunks", po.chunks, "Write chunked sentences");

  MineOptions mo;
  auto* mine = app.add_subcommand("mine", "Mine entity relations");
  mine->add_option("--store", mo.store, "Assertion store");
  mine->add_option("--corpus", mo.corpus, "Corpus to parse first");
  mine->add_option("--verb", mo.verb, "Relation verb (stemmed)")->required();
  mine->add_option("--entities", mo.entities, "Entity list")->required();
  mine->add_flag("--undirected", mo.undirected, "Merge (A,B) with (B,A)");
  mine->add_option("--base-precision", mo.base_precision,
                   "Precision of one assertion");
  mine->add_option("-o,--out", mo.out, "Interactions TSV (default stdout)");
  mine->add_option("--dot", mo.dot, "Also write a DOT graph");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "Score interactions against gold");
  eval->add_option("--gold", eo.gold, "Gold pairs")->required();
  eval->add_option("--predicted", eo.predicted, "Interactions TSV")
      ->required();
  eval->add_flag("--directional", eo.directional, "Require direction");
  eval->add_option("--bootstrap", eo.bootstrap, "Resamples for precision CI");
  eval->add_option("--seed", eo.seed, "Bootstrap seed");
  eval->add_option("--level", eo.level, "Confidence level");

  std::string graph_in;
  std::string graph_out;
  bool graph_undirected = false;
  auto* graph = app.add_subcommand("graph", "Interactions TSV to DOT");
  graph->add_option("--interactions", graph_in, "Interactions TSV")
      ->required();
  graph->add_option("--dot", graph_out, "DOT output (default stdout)");
  graph->add_flag("--undirected", graph_undirected, "Emit an undirected graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*normalize) return run_normalize(g, norm_in, norm_out);
    if (*parse) return run_parse(g, po);
    if (*mine) return run_mine(g, mo);
    if (*eval) return run_eval(g, eo);
    if (*graph) return run_graph(graph_in, graph_out, graph_undirected);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const LoadError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

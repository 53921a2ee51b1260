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

// Graphviz DOT export of an interaction network. Nodes and edges are listed
// in lexicographic order so output is stable.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "svominer/miner.hpp"

namespace svominer {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string emit_dot(const std::vector<InteractionRecord>& records,
                            bool directional = true) {
  std::set<std::string> nodes;
  std::vector<const InteractionRecord*> edges;
  for (const auto& r : records) {
    nodes.insert(r.subject);
    nodes.insert(r.object);
    edges.push_back(&r);
  }
  std::sort(edges.begin(), edges.end(), [](const auto* a, const auto* b) {
    return std::tie(a->subject, a->object, a->verb) <
           std::tie(b->subject, b->object, b->verb);
  });
  std::string out = directional ? "digraph interactions {\n"
                                : "graph interactions {\n";
  const char* arrow = directional ? " -> " : " -- ";
  for (const auto& n : nodes) out += "  " + dot_quote(n) + ";\n";
  for (const auto* e : edges) {
    out += "  " + dot_quote(e->subject) + arrow + dot_quote(e->object) +
           " [label=" + dot_quote(e->verb) + ", confidence=" +
           dot_quote(format_confidence(e->confidence)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace svominer

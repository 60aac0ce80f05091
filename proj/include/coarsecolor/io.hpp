// Copyright 2026 The coarsecolor Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "coarsecolor/coloring.hpp"
#include "coarsecolor/graph.hpp"

namespace coarsecolor {

inline constexpr int kDocumentVersion = 1;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph plus an optional (possibly partial) 2-coloring.
///
/// JSON layout:
///   {"version": 1, "n": 4, "edges": [[0,1],[1,2]],
///    "labels": ["a", ...], "coloring": [0, 1, null, 0]}
/// "labels" and "coloring" are optional. Edges are written sorted with u < v.
struct GraphDocument {
  Graph graph;
  std::optional<PartialColoring> coloring;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

PartialColoring to_partial(const Coloring& phi);

/// Total coloring, or DocumentError if some entry is undefined.
Coloring to_total(const PartialColoring& psi);

std::string serialize_document(const GraphDocument& doc);
GraphDocument parse_document(const std::string& text);

GraphDocument read_document(const std::string& path);
void write_document(const std::string& path, const GraphDocument& doc);

/// Graphviz text: one node per vertex in index order, label = index.
/// Filled black for 0, white for 1, gray for undefined; unfilled when no
/// coloring is given.
std::string export_dot(const Graph& g,
                       const std::optional<PartialColoring>& coloring = std::nullopt);

}  // namespace coarsecolor

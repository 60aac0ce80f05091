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

#include "coarsecolor/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coarsecolor {

using nlohmann::json;

PartialColoring to_partial(const Coloring& phi) {
  return PartialColoring(phi.begin(), phi.end());
}

Coloring to_total(const PartialColoring& psi) {
  Coloring phi;
  phi.reserve(psi.size());
  for (std::size_t v = 0; v < psi.size(); ++v) {
    if (!psi[v]) {
      throw DocumentError("coloring is undefined at vertex " + std::to_string(v));
    }
    phi.push_back(*psi[v]);
  }
  return phi;
}

std::string serialize_document(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  json j;
  j["version"] = kDocumentVersion;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  if (doc.coloring) {
    if (doc.coloring->size() != g.vertex_count()) {
      throw DocumentError("coloring length does not match vertex count");
    }
    json c = json::array();
    for (const auto& x : *doc.coloring) {
      if (x) c.push_back(static_cast<int>(*x));
      else c.push_back(nullptr);
    }
    j["coloring"] = std::move(c);
  }
  return j.dump() + "\n";
}

GraphDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw DocumentError("document must be a JSON object");
    if (j.at("version").get<int>() != kDocumentVersion) {
      throw DocumentError("unsupported document version");
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DocumentError("edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j["labels"].get<std::vector<std::string>>();
      if (labels.size() != n) throw DocumentError("labels length does not match n");
    }
    GraphDocument doc;
    doc.graph = Graph::from_edges(n, edges, std::move(labels));
    if (j.contains("coloring")) {
      const auto& c = j["coloring"];
      if (!c.is_array() || c.size() != n) {
        throw DocumentError("coloring length does not match n");
      }
      PartialColoring psi;
      for (const auto& x : c) {
        if (x.is_null()) {
          psi.emplace_back();
          continue;
        }
        const int value = x.get<int>();
        if (value != 0 && value != 1) throw DocumentError("colors must be 0, 1, or null");
        psi.emplace_back(static_cast<std::uint8_t>(value));
      }
      doc.coloring = std::move(psi);
    }
    return doc;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("invalid document: ") + e.what());
  } catch (const GraphError& e) {
    throw DocumentError(std::string("invalid graph: ") + e.what());
  }
}

GraphDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_document(const std::string& path, const GraphDocument& doc) {
  std::ofstream out(path);
  if (!out) throw DocumentError("cannot write " + path);
  out << serialize_document(doc);
  if (!out) throw DocumentError("write failed for " + path);
}

std::string export_dot(const Graph& g,
                       const std::optional<PartialColoring>& coloring) {
  if (coloring && coloring->size() != g.vertex_count()) {
    throw DocumentError("coloring length does not match vertex count");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v << "\"";
    if (coloring) {
      const auto& c = (*coloring)[v];
      const char* fill = !c ? "gray" : (*c == 0 ? "black" : "white");
      out << ", style=filled, fillcolor=" << fill;
      if (c && *c == 0) out << ", fontcolor=white";
    }
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coarsecolor

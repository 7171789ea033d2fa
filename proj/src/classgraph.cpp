#include "gcg/classgraph.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <sstream>

#include "gcg/errors.hpp"

namespace gcg {

ClassGraph graph_from_classes(const std::vector<GClass>& classes) {
  ClassGraph graph;
  for (const GClass& cls : classes) {
    if (cls.size > 1) graph.vertices.push_back(cls);
  }
  const std::size_t n = graph.vertices.size();
  graph.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool edge = graph.vertices[a].primes.intersects(graph.vertices[b].primes);
      graph.adjacency[a][b] = edge;
      graph.adjacency[b][a] = edge;
    }
  }
  graph.distances.assign(n, std::vector<int>(n, ClassGraph::kUnreachable));
  for (std::size_t source = 0; source < n; ++source) {
    auto& dist = graph.distances[source];
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!graph.adjacency[v][w] || dist[w] != ClassGraph::kUnreachable) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return graph;
}

ClassGraph build_graph(const PermGroup& g, const Subgroup& n) {
  return graph_from_classes(g_classes_in(g, n));
}

std::string Diameter::to_string() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::disconnected:
      return "disconnected";
    case Kind::empty:
      return "empty";
  }
  return "unknown";
}

GraphSummary summarize(const ClassGraph& graph) {
  GraphSummary summary;
  summary.vertex_count = graph.size();
  std::vector<bool> placed(graph.size(), false);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (placed[v]) continue;
    std::vector<std::size_t> component;
    for (std::size_t w = 0; w < graph.size(); ++w) {
      if (graph.distance(v, w) != ClassGraph::kUnreachable) {
        placed[w] = true;
        component.push_back(w);
      }
    }
    summary.components.push_back(std::move(component));
  }
  summary.component_count = summary.components.size();
  if (summary.vertex_count == 0) {
    summary.diameter = {Diameter::Kind::empty, 0};
  } else if (summary.component_count > 1) {
    summary.diameter = {Diameter::Kind::disconnected, 0};
  } else {
    int diameter = 0;
    for (const auto& row : graph.distances) {
      for (const int d : row) diameter = std::max(diameter, d);
    }
    summary.diameter = {Diameter::Kind::finite, diameter};
  }
  return summary;
}

std::vector<std::pair<std::size_t, std::size_t>> isolated_pairs(const ClassGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& v = graph.vertices;
  for (std::size_t x = 0; x < v.size(); ++x) {
    for (std::size_t y = x + 1; y < v.size(); ++y) {
      bool isolated = true;
      for (std::size_t z = 0; z < v.size() && isolated; ++z) {
        isolated = !v[z].primes.intersects(v[x].primes) || !v[z].primes.intersects(v[y].primes);
      }
      if (isolated) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> far_pairs(const ClassGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < graph.size(); ++x) {
    for (std::size_t y = x + 1; y < graph.size(); ++y) {
      const int d = graph.distance(x, y);
      if (d == ClassGraph::kUnreachable || d >= 3) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

bool components_complete(const ClassGraph& graph, const GraphSummary& summary) {
  for (const auto& component : summary.components) {
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t j = i + 1; j < component.size(); ++j) {
        if (!graph.adjacent(component[i], component[j])) return false;
      }
    }
  }
  return true;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw ValidationError("unknown graph format '" + std::string(name) + "' (expected dot or json)");
}

std::string export_graph(const ClassGraph& graph, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::ostringstream out;
    out << "graph class_graph {\n";
    for (std::size_t v = 0; v < graph.size(); ++v) {
      out << "  v" << v << " [label=\"size=" << graph.vertices[v].size
          << " rep=" << graph.vertices[v].representative.to_cycle_string() << "\"];\n";
    }
    for (std::size_t a = 0; a < graph.size(); ++a) {
      for (std::size_t b = a + 1; b < graph.size(); ++b) {
        if (graph.adjacent(a, b)) out << "  v" << a << " -- v" << b << ";\n";
      }
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const GClass& cls = graph.vertices[v];
    doc["vertices"].push_back({{"id", v},
                               {"size", cls.size},
                               {"primes", cls.primes.primes()},
                               {"rep", cls.representative.to_cycle_string()}});
  }
  doc["edges"] = nlohmann::json::array();
  for (std::size_t a = 0; a < graph.size(); ++a) {
    for (std::size_t b = a + 1; b < graph.size(); ++b) {
      if (graph.adjacent(a, b)) doc["edges"].push_back({a, b});
    }
  }
  return doc.dump(2) + "\n";
}

SizeGraph size_graph(const ClassGraph& graph) {
  SizeGraph out;
  std::vector<PrimeSet> primes;
  for (const GClass& cls : graph.vertices) {
    if (std::find(out.sizes.begin(), out.sizes.end(), cls.size) != out.sizes.end()) continue;
    out.sizes.push_back(cls.size);
    primes.push_back(cls.primes);
  }
  // vertices are already sorted by size
  for (std::size_t a = 0; a < out.sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < out.sizes.size(); ++b) {
      if (primes[a].intersects(primes[b])) out.edges.emplace_back(a, b);
    }
  }
  return out;
}

GraphShape shape_of(const ClassGraph& graph) {
  GraphShape shape;
  for (const GClass& cls : graph.vertices) {
    shape.sizes.push_back(cls.size);
    shape.representatives.push_back(cls.representative.to_cycle_string());
  }
  for (std::size_t a = 0; a < graph.size(); ++a) {
    for (std::size_t b = a + 1; b < graph.size(); ++b) {
      if (graph.adjacent(a, b)) shape.edges.emplace_back(a, b);
    }
  }
  return shape;
}

GraphShape parse_graph_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  GraphShape shape;
  for (const auto& v : doc.at("vertices")) {
    shape.sizes.push_back(v.at("size").get<std::uint64_t>());
    shape.representatives.push_back(v.at("rep").get<std::string>());
  }
  for (const auto& e : doc.at("edges")) {
    shape.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  }
  return shape;
}

}  // namespace gcg

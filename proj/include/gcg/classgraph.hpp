#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcg/group_ops.hpp"

namespace gcg {

/// Γ_G(N): non-central G-classes of N, joined when their sizes share a prime.
struct ClassGraph {
  static constexpr int kUnreachable = -1;

  std::vector<GClass> vertices;
  std::vector<std::vector<bool>> adjacency;  // no self-loops
  std::vector<std::vector<int>> distances;   // BFS; kUnreachable between components

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a][b]; }
  int distance(std::size_t a, std::size_t b) const { return distances[a][b]; }
};

/// Builds the graph from every G-class of N (central ones are dropped).
ClassGraph graph_from_classes(const std::vector<GClass>& classes);
ClassGraph build_graph(const PermGroup& g, const Subgroup& n);

struct Diameter {
  enum class Kind { finite, disconnected, empty };
  Kind kind = Kind::empty;
  int value = 0;  // meaningful only for Kind::finite

  bool is(int d) const { return kind == Kind::finite && value == d; }
  std::string to_string() const;
  friend bool operator==(const Diameter&, const Diameter&) = default;
};

struct GraphSummary {
  std::size_t vertex_count = 0;
  std::size_t component_count = 0;
  std::vector<std::vector<std::size_t>> components;  // vertex indices, ascending
  Diameter diameter;
};

GraphSummary summarize(const ClassGraph& graph);

/// Unordered vertex pairs {X, Y} (X < Y) such that every vertex has size coprime to
/// |X| or to |Y|.
std::vector<std::pair<std::size_t, std::size_t>> isolated_pairs(const ClassGraph& graph);

/// Pairs at distance at least 3 or in different components.
std::vector<std::pair<std::size_t, std::size_t>> far_pairs(const ClassGraph& graph);

/// True iff every component is a complete graph.
bool components_complete(const ClassGraph& graph, const GraphSummary& summary);

/// Γ with classes of equal size merged: one vertex per distinct non-central size.
/// Same-size classes are always adjacent, so distances (and the diameter) agree with Γ.
struct SizeGraph {
  std::vector<std::uint64_t> sizes;                        // ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b
};

SizeGraph size_graph(const ClassGraph& graph);

enum class GraphFormat { dot, json };

/// Throws ValidationError for anything other than "dot" or "json".
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const ClassGraph& graph, GraphFormat format);

/// Vertex sizes and edge list read back from a json export.
struct GraphShape {
  std::vector<std::uint64_t> sizes;
  std::vector<std::string> representatives;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

GraphShape shape_of(const ClassGraph& graph);
GraphShape parse_graph_json(std::string_view text);

}  // namespace gcg

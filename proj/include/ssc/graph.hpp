#pragma once

#include "ssc/bigint.hpp"
#include "ssc/edge_set.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssc {

// Label e_{ji} of a Jahangir edge: j is the base-cycle index (1..m), i the
// position within it (1 = spoke shared with the previous cycle, 2 and 3 rim).
struct EdgeLabel {
  int j = 0;
  int i = 0;

  bool operator==(const EdgeLabel&) const = default;
  bool is_spoke() const { return i == 1; }
  std::string str() const;
  // Parses "e<j><i>" (single-digit i, j of any width).
  static EdgeLabel parse(std::string_view text);
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with at most 64 edges. Edges
// keep their insertion order; that order is the edge index used by EdgeSet.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidParameter on loops, parallel edges, out-of-range
  // endpoints, a label/edge count mismatch, or more than 64 edges.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<EdgeLabel> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<EdgeLabel>& labels() const { return labels_; }
  const EdgeLabel& label_of(int e) const { return labels_.at(e); }
  // Index of the edge carrying `label`, or -1.
  int index_of(const EdgeLabel& label) const;
  // "e11" style name when labelled, decimal index otherwise.
  std::string edge_name(int e) const;

  int degree(int v) const;
  bool is_connected() const;
  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeLabel> labels_;
};

// J(2,m): hub 0, rim vertices 1..2m clockwise from the rim end of e11.
// Edge index of e_{ji} is 3(j-1) + (i-1).
Graph build_jahangir(int m);

constexpr int jahangir_edge_index(int j, int i) { return 3 * (j - 1) + (i - 1); }

// Edge set of the base cycle C_k = {e_k1, e_k2, e_k3, e_(k+1)1}.
EdgeSet jahangir_base_cycle(int k, int m);
EdgeSet jahangir_spokes(int m);

// m when `g` is exactly build_jahangir(m) (including labels).
std::optional<int> jahangir_order_of(const Graph& g);

// JSON edge-list document {"vertices": N, "edges": [[u,v],...], "labels": [...]}.
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

// Acyclicity / spanning checks on edge subsets of `g`.
bool is_forest(const Graph& g, EdgeSet s);
bool is_spanning_tree(const Graph& g, EdgeSet s);
// Connected components of (V, s), counting isolated vertices.
int component_count(const Graph& g, EdgeSet s);
// True when `s` is non-empty, connected and 2-regular on the vertices it touches.
bool is_simple_cycle(const Graph& g, EdgeSet s);

// Number of spanning trees, as an exact reduced-Laplacian determinant.
BigInt matrix_tree_count(const Graph& g);

// Every simple cycle exactly once, in canonical order.
std::vector<EdgeSet> enumerate_simple_cycles(const Graph& g);

}  // namespace ssc

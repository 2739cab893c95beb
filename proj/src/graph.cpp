#include "ssc/graph.hpp"

#include "ssc/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace ssc {

using json = nlohmann::json;

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

using Adjacency = std::vector<std::vector<std::pair<int, int>>>;  // (neighbour, edge)

Adjacency adjacency(const Graph& g) {
  Adjacency adj(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  return adj;
}

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
}

// Source line of the k-th element of the top-level "edges" array. Returns 0
// when the array cannot be located.
std::size_t edge_entry_line(std::string_view text, std::size_t k) {
  std::size_t pos = text.find("\"edges\"");
  if (pos == std::string_view::npos) return 0;
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '[') {
      ++depth;
      if (depth == 2) {
        if (seen == k) return line_at(text, i);
        ++seen;
      }
    } else if (c == ']') {
      if (--depth == 0) break;
    }
  }
  return 0;
}

}  // namespace

std::string EdgeLabel::str() const { return "e" + std::to_string(j) + std::to_string(i); }

EdgeLabel EdgeLabel::parse(std::string_view text) {
  if (text.size() < 3 || text[0] != 'e' ||
      !std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidParameter("bad edge label '" + std::string(text) + "'");
  }
  EdgeLabel label;
  label.i = text.back() - '0';
  label.j = std::stoi(std::string(text.substr(1, text.size() - 2)));
  if (label.j < 1 || label.i < 1 || label.i > 3) {
    throw InvalidParameter("bad edge label '" + std::string(text) + "'");
  }
  return label;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<EdgeLabel> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count_ < 0) throw InvalidParameter("negative vertex count");
  if (edge_count() > EdgeSet::kCapacity) {
    throw InvalidParameter("at most " + std::to_string(EdgeSet::kCapacity) + " edges are supported");
  }
  if (!labels_.empty() && labels_.size() != edges_.size()) {
    throw InvalidParameter("label count does not match edge count");
  }
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw InvalidParameter("edge endpoint out of range");
    }
    if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InvalidParameter("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  for (std::size_t a = 0; a < labels_.size(); ++a)
    for (std::size_t b = a + 1; b < labels_.size(); ++b)
      if (labels_[a] == labels_[b]) throw InvalidParameter("duplicate label " + labels_[a].str());
}

int Graph::index_of(const EdgeLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::string Graph::edge_name(int e) const { return has_labels() ? labels_[e].str() : std::to_string(e); }

int Graph::degree(int v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.first == v || e.second == v; }));
}

bool Graph::is_connected() const { return vertex_count_ > 0 && component_count(*this, all_edges()) == 1; }

Graph build_jahangir(int m) {
  if (m < 3) throw InvalidParameter("Jahangir graph J(2,m) needs m >= 3, got " + std::to_string(m));
  if (3 * m > EdgeSet::kCapacity) throw CapacityError("J(2,m) with 3m > 64 edges is not representable");
  std::vector<Edge> edges;
  std::vector<EdgeLabel> labels;
  for (int k = 1; k <= m; ++k) {
    int spoke_end = 2 * k - 1;
    int middle = 2 * k;
    int next_spoke_end = k < m ? 2 * k + 1 : 1;
    edges.emplace_back(0, spoke_end);
    edges.emplace_back(spoke_end, middle);
    edges.emplace_back(middle, next_spoke_end);
    labels.push_back({k, 1});
    labels.push_back({k, 2});
    labels.push_back({k, 3});
  }
  return Graph(2 * m + 1, std::move(edges), std::move(labels));
}

EdgeSet jahangir_base_cycle(int k, int m) {
  int next = k % m + 1;
  return EdgeSet{jahangir_edge_index(k, 1), jahangir_edge_index(k, 2), jahangir_edge_index(k, 3),
                 jahangir_edge_index(next, 1)};
}

EdgeSet jahangir_spokes(int m) {
  EdgeSet s;
  for (int k = 1; k <= m; ++k) s.insert(jahangir_edge_index(k, 1));
  return s;
}

std::optional<int> jahangir_order_of(const Graph& g) {
  if (g.edge_count() % 3 != 0 || g.edge_count() < 9 || !g.has_labels()) return std::nullopt;
  int m = g.edge_count() / 3;
  if (g == build_jahangir(m)) return m;
  return std::nullopt;
}

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_at(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object", 1);
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
    throw ParseError("missing integer field \"vertices\"", 1);
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing array field \"edges\"", 1);
  long long n = doc["vertices"].get<long long>();
  if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", 1);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  const auto& arr = doc["edges"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& item = arr[k];
    auto fail = [&](const std::string& why) {
      throw ParseError("edge " + std::to_string(k) + ": " + why, edge_entry_line(text, k));
    };
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      fail("expected [u, v] with integer endpoints");
    }
    long long u = item[0].get<long long>(), v = item[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
    if (u == v) fail("loop at vertex " + std::to_string(u));
    Edge edge{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(std::minmax(edge.first, edge.second)).second) {
      fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    edges.push_back(edge);
  }
  if (edges.size() > static_cast<std::size_t>(EdgeSet::kCapacity)) {
    throw ParseError("more than " + std::to_string(EdgeSet::kCapacity) + " edges", 1);
  }

  std::vector<EdgeLabel> labels;
  if (doc.contains("labels")) {
    const auto& ls = doc["labels"];
    if (!ls.is_array() || ls.size() != edges.size()) {
      throw ParseError("\"labels\" must be an array matching the edge list length", 1);
    }
    for (const auto& l : ls) {
      if (!l.is_string()) throw ParseError("labels must be strings", 1);
      try {
        labels.push_back(EdgeLabel::parse(l.get<std::string>()));
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), 1);
      }
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string emit_graph(const Graph& g) {
  json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  if (g.has_labels()) {
    doc["labels"] = json::array();
    for (const auto& l : g.labels()) doc["labels"].push_back(l.str());
  }
  return doc.dump(2) + "\n";
}

bool is_forest(const Graph& g, EdgeSet s) {
  DisjointSets ds(g.vertex_count());
  for (int e : s.members())
    if (!ds.unite(g.edge(e).first, g.edge(e).second)) return false;
  return true;
}

int component_count(const Graph& g, EdgeSet s) {
  DisjointSets ds(g.vertex_count());
  int components = g.vertex_count();
  for (int e : s.members())
    if (ds.unite(g.edge(e).first, g.edge(e).second)) --components;
  return components;
}

bool is_spanning_tree(const Graph& g, EdgeSet s) {
  return g.vertex_count() > 0 && s.size() == g.vertex_count() - 1 && is_forest(g, s);
}

bool is_simple_cycle(const Graph& g, EdgeSet s) {
  if (s.empty()) return false;
  std::vector<int> deg(g.vertex_count(), 0);
  for (int e : s.members()) {
    ++deg[g.edge(e).first];
    ++deg[g.edge(e).second];
  }
  int touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    touched += d != 0;
  }
  // 2-regular with |E| = |V| on touched vertices; connected iff exactly one
  // component among them.
  int isolated = g.vertex_count() - touched;
  return component_count(g, s) - isolated == 1;
}

BigInt matrix_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Laplacian with the last row/column removed.
  const int r = n - 1;
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r, 0));
  for (auto [u, v] : g.edges()) {
    if (u < r) a[u][u] += 1;
    if (v < r) a[v][v] += 1;
    if (u < r && v < r) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss fraction-free elimination; every division below is exact.
  BigInt prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < r; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < r; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  BigInt det = a[r - 1][r - 1] * sign;
  return det < 0 ? BigInt(0) : det;
}

std::vector<EdgeSet> enumerate_simple_cycles(const Graph& g) {
  const Adjacency adj = adjacency(g);
  std::set<EdgeSet, CanonicalLess> found;
  std::vector<bool> on_path(g.vertex_count(), false);

  // Cycles whose smallest vertex is `start`, walked through larger vertices.
  auto search = [&](auto&& self, int start, int v, EdgeSet path) -> void {
    for (auto [w, e] : adj[v]) {
      if (path.contains(e)) continue;
      if (w == start) {
        // Each cycle is reached once per direction; the set dedups them.
        if (path.size() >= 2) {
          EdgeSet cycle = path;
          cycle.insert(e);
          found.insert(cycle);
        }
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = true;
      EdgeSet next = path;
      next.insert(e);
      self(self, start, w, next);
      on_path[w] = false;
    }
  };

  for (int s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    search(search, s, s, EdgeSet{});
    on_path[s] = false;
  }
  return {found.begin(), found.end()};
}

}  // namespace ssc

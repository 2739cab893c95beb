#include "ssc/spanning.hpp"

#include "ssc/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ssc {

const char* to_string(TreeClass c) {
  switch (c) {
    case TreeClass::CJ1: return "CJ1";
    case TreeClass::CJ2: return "CJ2";
    case TreeClass::CJ3a: return "CJ3a";
    case TreeClass::CJ3b: return "CJ3b";
    case TreeClass::CJ3c: return "CJ3c";
  }
  return "?";
}

namespace {

// Do u and v stay connected in (V, available)?
bool connected_within(const Graph& g, EdgeSet available, int u, int v) {
  if (u == v) return true;
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : available.members()) parent[find(g.edge(e).first)] = find(g.edge(e).second);
  return find(u) == find(v);
}

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const Graph& g) : g_(g), target_(g.vertex_count() - 1) {}

  std::vector<EdgeSet> run() {
    parent_.resize(g_.vertex_count());
    std::iota(parent_.begin(), parent_.end(), 0);
    visit(0, EdgeSet{}, g_.all_edges());
    return std::move(out_);
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Edges below `next` are decided: `chosen` is a forest and `available`
  // holds chosen plus all undecided edges, which always keeps the graph
  // connected.
  void visit(int next, EdgeSet chosen, EdgeSet available) {
    if (chosen.size() == target_) {
      out_.push_back(chosen);
      return;
    }
    if (next >= g_.edge_count()) return;
    auto [u, v] = g_.edge(next);
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      // Include first so emission is lexicographic on member lists.
      parent_[ru] = rv;
      EdgeSet with = chosen;
      with.insert(next);
      visit(next + 1, with, available);
      parent_[ru] = ru;
    }
    // Excluding a bridge of the available graph would disconnect it.
    EdgeSet without = available;
    without.erase(next);
    if (ru == rv || connected_within(g_, without, u, v)) visit(next + 1, chosen, without);
  }

  const Graph& g_;
  int target_;
  std::vector<int> parent_;
  std::vector<EdgeSet> out_;
};

std::vector<int> removed_spoke_indices(EdgeSet removed, int m) {
  std::vector<int> spokes;
  for (int k = 1; k <= m; ++k)
    if (removed.contains(jahangir_edge_index(k, 1))) spokes.push_back(k);
  return spokes;
}

TreeClass class_of_spokes(const std::vector<int>& spokes, int m) {
  const int rho = static_cast<int>(spokes.size());
  if (rho == 0) return TreeClass::CJ1;
  if (rho == 1) return TreeClass::CJ2;
  std::vector<bool> removed(m + 1, false);
  for (int k : spokes) removed[k] = true;
  // Count removed spokes whose cyclic successor spoke is also removed.
  int adjacent_pairs = 0;
  for (int k : spokes)
    if (removed[k % m + 1]) ++adjacent_pairs;
  if (adjacent_pairs == 0) return TreeClass::CJ3b;
  // A single cyclic run of length rho < m has exactly rho - 1 adjacent pairs.
  if (adjacent_pairs == rho - 1) return TreeClass::CJ3a;
  return TreeClass::CJ3c;
}

}  // namespace

std::vector<EdgeSet> enumerate_spanning_trees_generic(const Graph& g) {
  if (!g.is_connected()) return {};
  auto trees = TreeEnumerator(g).run();
  std::sort(trees.begin(), trees.end(), canonical_less);
  return trees;
}

std::vector<SpanningTreeRecord> enumerate_spanning_trees_jahangir(int m) {
  if (m < 3) throw InvalidParameter("J(2,m) needs m >= 3, got " + std::to_string(m));
  if (m > 20) throw CapacityError("cutting-down enumeration supports m <= 20");
  const EdgeSet all = EdgeSet::full(3 * m);
  std::vector<SpanningTreeRecord> records;

  // Bit (k-1) of `removed_spokes` marks spoke e_k1 as removed.
  const std::uint32_t full_mask = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t removed_spokes = 0; removed_spokes < full_mask; ++removed_spokes) {
    std::vector<int> kept, cut;
    for (int k = 1; k <= m; ++k) ((removed_spokes >> (k - 1)) & 1u ? cut : kept).push_back(k);

    // Each kept spoke opens a merged cycle running up to the next kept spoke;
    // it holds the rim edges e_k2, e_k3 of every base cycle it spans.
    std::vector<std::vector<int>> blocks;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      int from = kept[a];
      int to = kept[(a + 1) % kept.size()];
      std::vector<int> rim;
      int k = from;
      do {
        rim.push_back(jahangir_edge_index(k, 2));
        rim.push_back(jahangir_edge_index(k, 3));
        k = k % m + 1;
      } while (k != to);
      blocks.push_back(std::move(rim));
    }

    EdgeSet base_removed;
    for (int k : cut) base_removed.insert(jahangir_edge_index(k, 1));
    const TreeClass cls = class_of_spokes(cut, m);

    std::vector<std::size_t> pick(blocks.size(), 0);
    for (bool more = true; more;) {
      EdgeSet removed = base_removed;
      for (std::size_t b = 0; b < blocks.size(); ++b) removed.insert(blocks[b][pick[b]]);
      records.push_back({all - removed, removed, cls});
      more = false;
      for (std::size_t b = blocks.size(); b-- > 0;) {
        if (++pick[b] < blocks[b].size()) {
          more = true;
          break;
        }
        pick[b] = 0;
      }
    }
  }
  return records;
}

TreeClass classify_tree(EdgeSet removed, int m) {
  if (m < 3) throw InvalidParameter("J(2,m) needs m >= 3");
  const Graph g = build_jahangir(m);
  if (!removed.is_subset_of(g.all_edges()) || removed.size() != m) {
    throw ClassificationError("a spanning tree of J(2," + std::to_string(m) + ") removes exactly " +
                              std::to_string(m) + " edges");
  }
  if (!is_spanning_tree(g, g.all_edges() - removed)) {
    throw ClassificationError("complement of the removed set is not a spanning tree");
  }
  return class_of_spokes(removed_spoke_indices(removed, m), m);
}

std::size_t PartitionReport::total() const {
  return std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
}

PartitionReport verify_partition(int m) {
  PartitionReport report;
  report.m = m;
  const Graph g = build_jahangir(m);
  const auto records = enumerate_spanning_trees_jahangir(m);
  const auto generic = enumerate_spanning_trees_generic(g);
  report.generic_count = generic.size();

  std::array<std::set<EdgeSet, CanonicalLess>, 5> classes;
  report.reclassification_consistent = true;
  for (const auto& r : records) {
    classes[static_cast<std::size_t>(r.tree_class)].insert(r.kept);
    try {
      if (classify_tree(r.removed, m) != r.tree_class) report.reclassification_consistent = false;
    } catch (const ClassificationError& e) {
      report.reclassification_consistent = false;
      report.failures.push_back("record is not a spanning tree: " + std::string(e.what()));
    }
  }
  for (std::size_t c = 0; c < classes.size(); ++c) report.class_sizes[c] = classes[c].size();
  if (report.total() != records.size()) report.failures.push_back("duplicate record within a class");

  report.pairwise_disjoint = true;
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      for (EdgeSet s : classes[a])
        if (classes[b].count(s)) report.pairwise_disjoint = false;
  if (!report.pairwise_disjoint) report.failures.push_back("classes overlap");

  std::set<EdgeSet, CanonicalLess> merged;
  for (const auto& c : classes) merged.insert(c.begin(), c.end());
  std::set<EdgeSet, CanonicalLess> expected(generic.begin(), generic.end());
  report.union_matches_generic = merged == expected;
  if (!report.union_matches_generic) report.failures.push_back("union of classes differs from generic enumeration");
  if (!report.reclassification_consistent) report.failures.push_back("re-classification disagrees with stored class");
  return report;
}

}  // namespace ssc

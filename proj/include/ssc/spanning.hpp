#pragma once

#include "ssc/edge_set.hpp"
#include "ssc/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace ssc {

// Cutting-down classes of spanning trees of J(2,m), keyed on the removed spokes:
// none, exactly one, or at least two that form one cyclic run / are pairwise
// non-adjacent / are anything else.
enum class TreeClass { CJ1, CJ2, CJ3a, CJ3b, CJ3c };
inline constexpr std::array<TreeClass, 5> kTreeClasses{TreeClass::CJ1, TreeClass::CJ2, TreeClass::CJ3a,
                                                       TreeClass::CJ3b, TreeClass::CJ3c};
const char* to_string(TreeClass c);

struct SpanningTreeRecord {
  EdgeSet kept;
  EdgeSet removed;
  TreeClass tree_class;
};

// All spanning trees of g in canonical order; empty for a disconnected graph.
std::vector<EdgeSet> enumerate_spanning_trees_generic(const Graph& g);

// Spanning trees of J(2,m) built by the cutting-down rules: pick the removed
// spokes (never all m), then remove exactly one rim edge from every merged
// cycle the kept spokes delimit.
std::vector<SpanningTreeRecord> enumerate_spanning_trees_jahangir(int m);

// Class of the tree E \ removed. Throws ClassificationError when |removed| != m
// or the complement is not a spanning tree.
TreeClass classify_tree(EdgeSet removed, int m);

struct PartitionReport {
  int m = 0;
  std::array<std::size_t, 5> class_sizes{};
  std::size_t generic_count = 0;
  bool pairwise_disjoint = false;
  bool union_matches_generic = false;
  bool reclassification_consistent = false;
  std::vector<std::string> failures;

  std::size_t total() const;
  bool ok() const { return failures.empty(); }
};

PartitionReport verify_partition(int m);

}  // namespace ssc

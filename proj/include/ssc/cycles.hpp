#pragma once

#include "ssc/edge_set.hpp"
#include "ssc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssc {

// Run of consecutive base cycles C_start, C_start+1, ..., wrapping after m.
struct CycleWord {
  int start = 1;
  int length = 1;

  bool operator==(const CycleWord&) const = default;

  int first() const { return start; }
  int last(int m) const { return (start + length - 2) % m + 1; }
  std::vector<int> indices(int m) const;
  // Bit (k-1) set for every base cycle k in the word.
  std::uint64_t index_mask(int m) const;
  std::string str(int m) const;  // "C_{1,2}"
};

// Throws InvalidParameter unless 1 <= start <= m and 1 <= length <= m.
void validate_word(CycleWord w, int m);

// Union of the word's base cycles minus its length-1 interior spokes.
EdgeSet word_edges(CycleWord w, int m);

// True when b immediately follows a in the cyclic order 1 -> 2 -> ... -> m -> 1.
inline bool follows(int a, int b, int m) { return a % m + 1 == b; }

struct CycleCatalogEntry {
  std::optional<CycleWord> word;  // empty for cycles no word describes
  std::string name;
  EdgeSet edges;
  int beta = 0;
  bool is_simple_cycle = false;
};

struct CycleCatalog {
  int m = 0;  // 0 for catalogs of non-Jahangir graphs
  std::vector<CycleCatalogEntry> entries;

  std::size_t size() const { return entries.size(); }
  const CycleCatalogEntry* find(CycleWord w) const;
  // Pairs of entry indices whose edge sets coincide.
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_edge_sets() const;
};

// All m^2 words ordered by length then start, with the word's edge set
// recorded even where it is not a simple cycle (length m).
CycleCatalog paper_cycle_catalog(int m);

// One entry per simple cycle of g. On J(2,m) entries matching a word carry
// it; the rest are named "rim" (the outer 2m-cycle) or "Z<k>".
CycleCatalog oracle_cycle_catalog(const Graph& g);

int direct_intersection(EdgeSet a, EdgeSet b);

// Intersection cardinalities of two word cycles of J(2,m) predicted from the
// words alone. Each throws PreconditionError outside its hypothesis.
int predict_intersection_nested(CycleWord u, CycleWord v, int m);   // indices(u) within indices(v)
int predict_intersection_partial(CycleWord u, CycleWord v, int m);  // overlap without containment
int predict_intersection_disjoint(CycleWord u, CycleWord v, int m);

enum class WordRelation { Nested, NestedReversed, Partial, Disjoint };
WordRelation relation_of(CycleWord u, CycleWord v, int m);
const char* to_string(WordRelation r);

// Dispatches nested -> partial -> disjoint. Nested with v inside u is
// evaluated as nested(v, u).
int predict_intersection(CycleWord u, CycleWord v, int m);

struct IntersectionDivergence {
  CycleWord u;
  CycleWord v;
  WordRelation relation;
  int predicted;
  int direct;
};

struct IntersectionReport {
  int m = 0;
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::vector<IntersectionDivergence> divergences;
};

// Every ordered pair of catalog words of J(2,m): prediction vs direct count.
IntersectionReport intersection_sweep(int m);

}  // namespace ssc

#include "ssc/cycles.hpp"

#include "ssc/error.hpp"

#include <algorithm>

namespace ssc {

std::vector<int> CycleWord::indices(int m) const {
  std::vector<int> out;
  out.reserve(length);
  for (int j = 0; j < length; ++j) out.push_back((start - 1 + j) % m + 1);
  return out;
}

std::uint64_t CycleWord::index_mask(int m) const {
  std::uint64_t mask = 0;
  for (int k : indices(m)) mask |= std::uint64_t{1} << (k - 1);
  return mask;
}

std::string CycleWord::str(int m) const {
  std::string s = "C_{";
  auto idx = indices(m);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(idx[j]);
  }
  return s + "}";
}

void validate_word(CycleWord w, int m) {
  if (m < 3) throw InvalidParameter("m must be >= 3");
  if (w.start < 1 || w.start > m || w.length < 1 || w.length > m) {
    throw InvalidParameter("cycle word (start " + std::to_string(w.start) + ", length " +
                           std::to_string(w.length) + ") out of range for m = " + std::to_string(m));
  }
}

EdgeSet word_edges(CycleWord w, int m) {
  validate_word(w, m);
  auto idx = w.indices(m);
  EdgeSet edges;
  for (int k : idx) edges |= jahangir_base_cycle(k, m);
  for (std::size_t j = 1; j < idx.size(); ++j) edges.erase(jahangir_edge_index(idx[j], 1));
  return edges;
}

const CycleCatalogEntry* CycleCatalog::find(CycleWord w) const {
  for (const auto& e : entries)
    if (e.word && *e.word == w) return &e;
  return nullptr;
}

std::vector<std::pair<std::size_t, std::size_t>> CycleCatalog::duplicate_edge_sets() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b)
      if (entries[a].edges == entries[b].edges) out.emplace_back(a, b);
  return out;
}

CycleCatalog paper_cycle_catalog(int m) {
  if (m < 3) throw InvalidParameter("word catalog needs m >= 3, got " + std::to_string(m));
  const Graph g = build_jahangir(m);
  CycleCatalog cat;
  cat.m = m;
  for (int length = 1; length <= m; ++length) {
    for (int start = 1; start <= m; ++start) {
      CycleWord w{start, length};
      CycleCatalogEntry entry;
      entry.word = w;
      entry.name = w.str(m);
      entry.edges = word_edges(w, m);
      entry.beta = entry.edges.size();
      entry.is_simple_cycle = is_simple_cycle(g, entry.edges);
      cat.entries.push_back(std::move(entry));
    }
  }
  return cat;
}

CycleCatalog oracle_cycle_catalog(const Graph& g) {
  CycleCatalog cat;
  const auto m = jahangir_order_of(g);
  std::vector<std::pair<CycleWord, EdgeSet>> words;
  EdgeSet rim;
  if (m) {
    cat.m = *m;
    for (int length = 1; length < *m; ++length)
      for (int start = 1; start <= *m; ++start) words.emplace_back(CycleWord{start, length}, word_edges({start, length}, *m));
    rim = g.all_edges() - jahangir_spokes(*m);
  }
  int synthetic = 0;
  for (EdgeSet c : enumerate_simple_cycles(g)) {
    CycleCatalogEntry entry;
    entry.edges = c;
    entry.beta = c.size();
    entry.is_simple_cycle = true;
    auto it = std::find_if(words.begin(), words.end(), [c](const auto& w) { return w.second == c; });
    if (it != words.end()) {
      entry.word = it->first;
      entry.name = it->first.str(*m);
    } else if (m && c == rim) {
      entry.name = "rim";
    } else {
      entry.name = "Z" + std::to_string(++synthetic);
    }
    cat.entries.push_back(std::move(entry));
  }
  return cat;
}

int direct_intersection(EdgeSet a, EdgeSet b) { return (a & b).size(); }

namespace {

int beta(CycleWord w, int m) { return word_edges(w, m).size(); }

}  // namespace

// Four cases keyed on where u's end cycles sit relative to v's ends. The
// source's last case ("u_1 = v_q, u_p = v_q") is read as matching ends
// u_1 = v_1 and u_p = v_q; everything not covered by the middle two cases
// falls to the first.
int predict_intersection_nested(CycleWord u, CycleWord v, int m) {
  validate_word(u, m);
  validate_word(v, m);
  if ((u.index_mask(m) & ~v.index_mask(m)) != 0) {
    throw PreconditionError("nested intersection needs " + u.str(m) + " inside " + v.str(m));
  }
  const int b = beta(u, m);
  const int u1 = u.first(), up = u.last(m), v1 = v.first(), vq = v.last(m);
  auto at_end = [&](int x) { return x == v1 || x == vq; };
  if (u1 == v1 && up == vq) return b;
  // a single base cycle at one end of v takes the one-end case
  if (at_end(u1) && (!at_end(up) || u.length == 1)) return b - 1;
  if (at_end(up) && !at_end(u1)) return b - 1;
  return b - 2;
}

// Overlap runs are maximal stretches of u's cycles that also lie in v; a
// single run is the plain case, several runs are summed run by run.
int predict_intersection_partial(CycleWord u, CycleWord v, int m) {
  validate_word(u, m);
  validate_word(v, m);
  const std::uint64_t um = u.index_mask(m), vm = v.index_mask(m);
  if ((um & vm) == 0 || (um & ~vm) == 0 || (vm & ~um) == 0) {
    throw PreconditionError("partial intersection needs overlapping, non-nested words " + u.str(m) + ", " +
                            v.str(m));
  }
  const int u1 = u.first(), up = u.last(m), v1 = v.first(), vq = v.last(m);
  const auto idx = u.indices(m);
  int total = 0;
  for (std::size_t j = 0; j < idx.size();) {
    if (!((vm >> (idx[j] - 1)) & 1u)) {
      ++j;
      continue;
    }
    std::size_t end = j;
    while (end + 1 < idx.size() && ((vm >> (idx[end + 1] - 1)) & 1u)) ++end;
    const int run_first = idx[j], run_last = idx[end];
    const int run_beta = beta({run_first, static_cast<int>(end - j + 1)}, m);
    if (run_first == v1) {
      total += follows(vq, u1, m) ? run_beta - 1 : run_beta - 2;
    } else if (run_last == vq) {
      total += follows(up, v1, m) ? run_beta - 1 : run_beta - 2;
    } else {
      throw PreconditionError("overlap run of " + u.str(m) + " and " + v.str(m) + " touches neither end of v");
    }
    j = end + 1;
  }
  return total;
}

int predict_intersection_disjoint(CycleWord u, CycleWord v, int m) {
  validate_word(u, m);
  validate_word(v, m);
  if ((u.index_mask(m) & v.index_mask(m)) != 0) {
    throw PreconditionError("disjoint intersection needs disjoint words " + u.str(m) + ", " + v.str(m));
  }
  return int{follows(u.last(m), v.first(), m)} + int{follows(v.last(m), u.first(), m)};
}

WordRelation relation_of(CycleWord u, CycleWord v, int m) {
  validate_word(u, m);
  validate_word(v, m);
  const std::uint64_t um = u.index_mask(m), vm = v.index_mask(m);
  if ((um & ~vm) == 0) return WordRelation::Nested;
  if ((vm & ~um) == 0) return WordRelation::NestedReversed;
  if (um & vm) return WordRelation::Partial;
  return WordRelation::Disjoint;
}

const char* to_string(WordRelation r) {
  switch (r) {
    case WordRelation::Nested: return "nested";
    case WordRelation::NestedReversed: return "nested-reversed";
    case WordRelation::Partial: return "partial";
    case WordRelation::Disjoint: return "disjoint";
  }
  return "?";
}

int predict_intersection(CycleWord u, CycleWord v, int m) {
  switch (relation_of(u, v, m)) {
    case WordRelation::Nested: return predict_intersection_nested(u, v, m);
    case WordRelation::NestedReversed: return predict_intersection_nested(v, u, m);
    case WordRelation::Partial: return predict_intersection_partial(u, v, m);
    case WordRelation::Disjoint: return predict_intersection_disjoint(u, v, m);
  }
  return 0;
}

IntersectionReport intersection_sweep(int m) {
  const CycleCatalog cat = paper_cycle_catalog(m);
  IntersectionReport report;
  report.m = m;
  for (const auto& a : cat.entries) {
    for (const auto& b : cat.entries) {
      const int predicted = predict_intersection(*a.word, *b.word, m);
      const int direct = direct_intersection(a.edges, b.edges);
      ++report.checked;
      if (predicted == direct) {
        ++report.matched;
      } else {
        report.divergences.push_back({*a.word, *b.word, relation_of(*a.word, *b.word, m), predicted, direct});
      }
    }
  }
  return report;
}

}  // namespace ssc

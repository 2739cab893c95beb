#include "ssc/face_ring.hpp"

#include "ssc/error.hpp"
#include "ssc/spanning.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace ssc {

MonomialIdeal::MonomialIdeal(std::vector<SquarefreeMonomial> generators) : generators_(std::move(generators)) {
  const bool equal_degrees = std::all_of(generators_.begin(), generators_.end(), [&](const SquarefreeMonomial& g) {
    return g.degree() == generators_.front().degree();
  });
  if (equal_degrees) {
    std::vector<std::uint64_t> bits;
    for (const auto& g : generators_) bits.push_back(g.support.bits());
    std::sort(bits.begin(), bits.end());
    if (std::adjacent_find(bits.begin(), bits.end()) != bits.end()) {
      throw InvalidParameter("generating system is not minimal (repeated generator)");
    }
    return;
  }
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = 0; b < generators_.size(); ++b)
      if (a != b && generators_[a].divides(generators_[b])) {
        throw InvalidParameter("generating system is not minimal");
      }
}

MonomialIdeal facet_ideal(const SimplicialComplex& c) {
  if (c.facets().empty() || !is_pure(c)) throw InvalidParameter("facet ideal needs a pure, non-empty complex");
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(c.facets().size());
  for (EdgeSet f : c.facets()) gens.push_back({f});
  return MonomialIdeal(std::move(gens));
}

int colon_mindeg(std::span<const SquarefreeMonomial> previous, const SquarefreeMonomial& current) {
  if (previous.empty()) throw PreconditionError("colon ideal of an empty prefix");
  int best = std::numeric_limits<int>::max();
  for (const auto& p : previous) best = std::min(best, (p.support - current.support).size());
  return best;
}

namespace {

void require_permutation(std::span<const std::size_t> ordering, std::size_t n) {
  if (ordering.size() != n) throw InvalidParameter("ordering length differs from the generator count");
  std::vector<bool> seen(n, false);
  for (std::size_t i : ordering) {
    if (i >= n || seen[i]) throw InvalidParameter("ordering is not a permutation");
    seen[i] = true;
  }
}

}  // namespace

QlqResult has_quasi_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> ordering) {
  require_permutation(ordering, ideal.size());
  const auto& gens = ideal.generators();
  for (std::size_t i = 1; i < ordering.size(); ++i) {
    const EdgeSet current = gens[ordering[i]].support;
    bool linear = false;
    for (std::size_t j = 0; j < i && !linear; ++j) linear = (gens[ordering[j]].support - current).size() == 1;
    if (!linear) return {false, i};
  }
  return {};
}

int paper_block_of(EdgeSet facet, int m) {
  int run = 0;
  while (run < m && !facet.contains(jahangir_edge_index(run + 1, 1))) ++run;
  return run;
}

std::vector<std::size_t> paper_ordering(const MonomialIdeal& ideal, int m) {
  if (m < 3) throw InvalidParameter("paper ordering needs m >= 3");
  const EdgeSet all = EdgeSet::full(3 * m);
  struct Key {
    int block;
    std::vector<int> removed;
    std::size_t index;
  };
  std::vector<Key> keys;
  keys.reserve(ideal.size());
  for (std::size_t g = 0; g < ideal.size(); ++g) {
    const EdgeSet facet = ideal.generators()[g].support;
    if (!facet.is_subset_of(all) || facet.size() != 2 * m) {
      throw InvalidParameter("generator is not a spanning-tree facet of J(2,m)");
    }
    keys.push_back({paper_block_of(facet, m), (all - facet).members(), g});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.block != b.block) return a.block > b.block;
    return a.removed < b.removed;
  });
  std::vector<std::size_t> order;
  order.reserve(keys.size());
  for (const auto& k : keys) order.push_back(k.index);
  return order;
}

std::vector<std::size_t> paper_ordering(int m) {
  if (m < 3) throw InvalidParameter("paper ordering needs m >= 3");
  return paper_ordering(facet_ideal(spanning_complex(build_jahangir(m))), m);
}

// A generator can follow a prefix iff some prefix member differs from it in a
// single variable, and that stays true as the prefix grows. Greedy growth from
// a start therefore reaches exactly the generators reachable from it; an
// ordering exists iff some start reaches all of them. Starts inside a failed
// closure cannot do better and are skipped.
std::optional<std::vector<std::size_t>> find_qlq_ordering(const MonomialIdeal& ideal, std::uint64_t seed) {
  const std::size_t n = ideal.size();
  if (n > kQlqSearchLimit) {
    throw CapacityError("ordering search is limited to " + std::to_string(kQlqSearchLimit) + " generators");
  }
  if (n == 0) return std::vector<std::size_t>{};
  const auto& gens = ideal.generators();

  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::size_t> by_rank(n);
  for (std::size_t g = 0; g < n; ++g) by_rank[rank[g]] = g;

  std::vector<bool> dead(n, false);
  for (std::size_t start : by_rank) {
    if (dead[start]) continue;
    std::vector<bool> placed(n, false);
    std::set<std::size_t> eligible{rank[start]};  // ranks
    std::vector<std::size_t> order;
    while (!eligible.empty()) {
      const std::size_t g = by_rank[*eligible.begin()];
      eligible.erase(eligible.begin());
      if (placed[g]) continue;
      placed[g] = true;
      order.push_back(g);
      for (std::size_t r = 0; r < n; ++r)
        if (!placed[r] && (gens[g].support - gens[r].support).size() == 1) eligible.insert(rank[r]);
    }
    if (order.size() == n) return order;
    for (std::size_t g : order) dead[g] = true;
  }
  return std::nullopt;
}

bool is_shelling(std::span<const EdgeSet> facets) {
  if (facets.empty()) return true;
  const int size = facets.front().size();
  if (!std::all_of(facets.begin(), facets.end(), [size](EdgeSet f) { return f.size() == size; })) {
    throw InvalidParameter("shelling test needs a pure facet list");
  }
  for (std::size_t i = 1; i < facets.size(); ++i) {
    const EdgeSet fi = facets[i];
    // F_i & F_j lies in some F_i & F_k = F_i \ {x} iff F_j misses such an x.
    EdgeSet codim_one;
    for (std::size_t k = 0; k < i; ++k) {
      const EdgeSet diff = fi - facets[k];
      if (diff.size() == 1) codim_one |= diff;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (((fi - facets[j]) & codim_one).empty()) return false;
  }
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

CmVerdict cohen_macaulay_verdict(const Graph& g, OrderingStrategy strategy, std::uint64_t seed) {
  const SimplicialComplex c = spanning_complex(g);
  const MonomialIdeal ideal = facet_ideal(c);
  CmVerdict out;
  out.facets = c.facets();
  auto flag_non_shelling = [&out] {
    std::vector<EdgeSet> ordered;
    for (std::size_t k : *out.certificate) ordered.push_back(out.facets[k]);
    if (!is_shelling(ordered)) out.note = "certificate has quasi-linear quotients but is not a shelling";
  };

  if (strategy == OrderingStrategy::Paper) {
    if (auto m = jahangir_order_of(g)) {
      auto order = paper_ordering(ideal, *m);
      if (has_quasi_linear_quotients(ideal, order).ok) {
        out.verdict = Verdict::True;
        out.method = "paper";
        out.certificate = std::move(order);
        flag_non_shelling();
        return out;
      }
      out.note = "block ordering failed; searching";
    } else {
      out.note = "graph is not J(2,m); searching";
    }
  }
  try {
    if (auto order = find_qlq_ordering(ideal, seed)) {
      out.verdict = Verdict::True;
      out.method = "search";
      out.certificate = std::move(order);
      flag_non_shelling();
    } else {
      out.verdict = Verdict::False;
    }
  } catch (const CapacityError& e) {
    out.verdict = Verdict::Unknown;
    out.note = e.what();
  }
  return out;
}

}  // namespace ssc

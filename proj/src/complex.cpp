#include "ssc/complex.hpp"

#include "ssc/error.hpp"
#include "ssc/spanning.hpp"

#include <algorithm>
#include <numeric>

namespace ssc {

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<EdgeSet> facets)
    : ground_size_(ground_size), facets_(std::move(facets)) {
  const EdgeSet ground = EdgeSet::full(ground_size_);
  for (EdgeSet f : facets_)
    if (!f.is_subset_of(ground)) throw InvalidParameter("facet outside the ground set");
  const bool equal_sizes = std::all_of(facets_.begin(), facets_.end(),
                                       [&](EdgeSet f) { return f.size() == facets_.front().size(); });
  if (equal_sizes) {
    // Distinct sets of one size never contain each other.
    std::vector<std::uint64_t> bits;
    for (EdgeSet f : facets_) bits.push_back(f.bits());
    std::sort(bits.begin(), bits.end());
    if (std::adjacent_find(bits.begin(), bits.end()) != bits.end()) {
      throw InvalidParameter("facet list is not an antichain");
    }
    return;
  }
  for (std::size_t a = 0; a < facets_.size(); ++a)
    for (std::size_t b = 0; b < facets_.size(); ++b)
      if (a != b && facets_[a].is_subset_of(facets_[b])) throw InvalidParameter("facet list is not an antichain");
}

SimplicialComplex spanning_complex(const Graph& g) {
  if (!g.is_connected()) throw InvalidParameter("spanning simplicial complex needs a connected graph");
  return SimplicialComplex(g.edge_count(), enumerate_spanning_trees_generic(g));
}

int dimension(const SimplicialComplex& c) {
  if (c.facets().empty()) throw PreconditionError("dimension of an empty complex");
  int largest = 0;
  for (EdgeSet f : c.facets()) largest = std::max(largest, f.size());
  return largest - 1;
}

bool is_pure(const SimplicialComplex& c) {
  if (c.facets().empty()) throw PreconditionError("purity of an empty complex");
  const int size = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(), [size](EdgeSet f) { return f.size() == size; });
}

namespace {

class ForestCounter {
 public:
  explicit ForestCounter(const Graph& g) : g_(g), parent_(g.vertex_count()), counts_(g.vertex_count(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::vector<std::uint64_t> run() {
    visit(0, 0);
    return counts_;
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void visit(int next, int size) {
    for (int e = next; e < g_.edge_count(); ++e) {
      int ru = find(g_.edge(e).first), rv = find(g_.edge(e).second);
      if (ru == rv) continue;
      parent_[ru] = rv;
      ++counts_[size];  // the forest of size+1 edges ending in e
      visit(e + 1, size + 1);
      parent_[ru] = ru;
    }
  }

  const Graph& g_;
  std::vector<int> parent_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

FVector f_vector_direct(const Graph& g) {
  if (g.edge_count() > kDirectFVectorEdgeLimit) {
    throw CapacityError("direct f-vector scan is limited to " + std::to_string(kDirectFVectorEdgeLimit) +
                        " edges; use formula mode");
  }
  if (!g.is_connected()) throw InvalidParameter("f-vector of the spanning complex needs a connected graph");
  const auto counts = ForestCounter(g).run();
  // A spanning forest of a connected graph has V-1 edges: f_0..f_{V-2}.
  FVector out;
  for (int i = 0; i + 1 < g.vertex_count(); ++i) out.f.emplace_back(counts[i]);
  return out;
}

std::vector<EdgeSet> minimal_nonfaces(const Graph& g) { return enumerate_simple_cycles(g); }

}  // namespace ssc

#pragma once

#include "ssc/bigint.hpp"
#include "ssc/edge_set.hpp"
#include "ssc/graph.hpp"

#include <vector>

namespace ssc {

// f_0..f_d; f_i counts faces with i+1 elements.
struct FVector {
  std::vector<BigInt> f;

  FVector() = default;
  explicit FVector(std::vector<BigInt> entries) : f(std::move(entries)) {}
  FVector(std::initializer_list<long long> entries) {
    for (long long v : entries) f.emplace_back(v);
  }

  std::size_t size() const { return f.size(); }
  bool empty() const { return f.empty(); }
  int dimension() const { return static_cast<int>(f.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return f[i]; }
  bool operator==(const FVector&) const = default;
};

// Complex on {0..ground_size-1} given by its facets; faces are implicit.
class SimplicialComplex {
 public:
  // Throws InvalidParameter if a facet lies outside the ground set or one
  // facet contains another.
  SimplicialComplex(int ground_size, std::vector<EdgeSet> facets);

  int ground_size() const { return ground_size_; }
  const std::vector<EdgeSet>& facets() const { return facets_; }

 private:
  int ground_size_;
  std::vector<EdgeSet> facets_;
};

// Spanning simplicial complex: facets are the spanning-tree edge sets.
// Throws InvalidParameter for a disconnected graph.
SimplicialComplex spanning_complex(const Graph& g);

// Largest facet size minus one. Throws PreconditionError on an empty complex.
int dimension(const SimplicialComplex& c);
bool is_pure(const SimplicialComplex& c);

inline constexpr int kDirectFVectorEdgeLimit = 30;

// Counts acyclic edge subsets by size (the faces of the spanning complex).
// Throws CapacityError above kDirectFVectorEdgeLimit edges.
FVector f_vector_direct(const Graph& g);

// Inclusion-minimal non-faces, i.e. the simple cycles of g.
std::vector<EdgeSet> minimal_nonfaces(const Graph& g);

}  // namespace ssc

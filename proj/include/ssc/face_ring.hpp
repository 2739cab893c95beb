#pragma once

#include "ssc/complex.hpp"
#include "ssc/edge_set.hpp"
#include "ssc/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssc {

// Product of the variables x_e, e in support.
struct SquarefreeMonomial {
  EdgeSet support;

  int degree() const { return support.size(); }
  bool divides(const SquarefreeMonomial& o) const { return support.is_subset_of(o.support); }
  bool operator==(const SquarefreeMonomial&) const = default;
};

// Monomial ideal given by a minimal generating system, in a fixed order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Throws InvalidParameter if one generator divides another.
  explicit MonomialIdeal(std::vector<SquarefreeMonomial> generators);

  const std::vector<SquarefreeMonomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

 private:
  std::vector<SquarefreeMonomial> generators_;
};

// One generator per facet, in facet order. Throws InvalidParameter for a
// non-pure complex.
MonomialIdeal facet_ideal(const SimplicialComplex& c);

// Minimal generator degree of (previous) : (current) for squarefree
// monomials, min_j |supp(previous_j) \ supp(current)|. Throws
// PreconditionError when previous is empty.
int colon_mindeg(std::span<const SquarefreeMonomial> previous, const SquarefreeMonomial& current);

struct QlqResult {
  bool ok = true;
  // Position (in the ordering) of the first generator whose colon ideal has
  // no linear generator.
  std::optional<std::size_t> first_failure;
};

// Throws InvalidParameter when `ordering` is not a permutation of the generators.
QlqResult has_quasi_linear_quotients(const MonomialIdeal& ideal, std::span<const std::size_t> ordering);

// Block order from the Cohen-Macaulay argument for J(2,m): generators whose
// removed set starts with the longest run of spokes e11, e21, ... come first
// (run length m-1 down to 0); inside a block, removed-edge tuples ascend
// lexicographically. Indices refer to `ideal`'s generators, which must be the
// facet ideal of the spanning complex of J(2,m).
std::vector<std::size_t> paper_ordering(const MonomialIdeal& ideal, int m);
// Same, over facet_ideal(spanning_complex(build_jahangir(m))).
std::vector<std::size_t> paper_ordering(int m);

// Length of the leading removed-spoke run that selects the block of a facet.
int paper_block_of(EdgeSet facet, int m);

inline constexpr std::size_t kQlqSearchLimit = 2000;

// Some ordering with quasi-linear quotients, or nullopt when none exists.
// Ties are broken by a seeded shuffle. Throws CapacityError above
// kQlqSearchLimit generators.
std::optional<std::vector<std::size_t>> find_qlq_ordering(const MonomialIdeal& ideal, std::uint64_t seed = 0);

// Classical test: for i > 1 and every j < i some k < i has |F_i \ F_k| = 1 and
// F_i & F_j within F_i & F_k. Throws InvalidParameter for a non-pure list.
bool is_shelling(std::span<const EdgeSet> facets);

enum class Verdict { True, False, Unknown };
const char* to_string(Verdict v);

enum class OrderingStrategy {
  Paper,   // the block order when g is J(2,m), then search
  Search,  // search only
};

struct CmVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string method;  // "paper", "search", or "" when no certificate
  std::optional<std::vector<std::size_t>> certificate;
  std::vector<EdgeSet> facets;  // generator supports, indexed by the certificate
  std::string note;
};

// Cohen-Macaulay verdict for the face ring of the spanning complex of g,
// certified by quasi-linear quotients of its facet ideal. A search over
// capacity yields Verdict::Unknown.
CmVerdict cohen_macaulay_verdict(const Graph& g, OrderingStrategy strategy = OrderingStrategy::Paper,
                                 std::uint64_t seed = 0);

}  // namespace ssc

#pragma once

#include "ssc/bigint.hpp"
#include "ssc/complex.hpp"
#include "ssc/cycles.hpp"
#include "ssc/graph.hpp"

#include <cstdint>
#include <vector>

namespace ssc {

// How the closed form sizes the union of a subset T of catalog cycles.
enum class UnionRule {
  // sum of betas minus the sum of pairwise intersections, as printed
  Pairwise,
  // exact cardinality of the union
  Exact,
};
const char* to_string(UnionRule r);

// One subset T of the catalog with a nonzero contribution.
struct AuditTerm {
  std::vector<int> members;  // catalog entry indices
  int union_size = 0;        // U_T under the chosen rule
  int sign = 1;              // (-1)^|T|
};

// Number of subsets T with |T| = subset_size sharing the same U_T.
struct AuditGroup {
  int subset_size = 0;
  int union_size = 0;
  std::int64_t count = 0;
};

struct ClosedFormFVector {
  int m = 0;
  UnionRule rule = UnionRule::Pairwise;
  CycleCatalog catalog;
  FVector f;
  std::vector<AuditGroup> groups;  // sorted by (subset_size, union_size)
  std::vector<AuditTerm> terms;    // per-subset trail, recorded for m = 3 only

  // Contribution of one term to f_i: sign * C(3m - U, i + 1 - U).
  BigInt term_value(const AuditTerm& t, int i) const;
};

inline constexpr int kClosedFormMaxM = 5;
inline constexpr int kExactIeMaxCycles = 22;

// f_i = C(3m, i+1) + sum over nonempty subsets T of the m^2-entry word
// catalog of (-1)^|T| C(3m - U_T, i+1 - U_T), i = 0..2m-1. Every subset is
// visited. Throws InvalidParameter for m < 3, CapacityError for m > 5.
ClosedFormFVector f_vector_paper(int m, UnionRule rule = UnionRule::Pairwise);

// Inclusion-exclusion over the true simple cycles of g with exact unions.
// Throws CapacityError above kExactIeMaxCycles cycles.
FVector f_vector_exact_ie(const Graph& g);

// N(t) / (1 - t)^D with integer numerator coefficients in ascending powers.
struct HilbertSeries {
  std::vector<BigInt> numerator;
  int denominator_power = 0;

  BigInt numerator_at_one() const;
  bool operator==(const HilbertSeries&) const = default;
};

// Numerator (1-t)^{d+1} + sum_i f_i t^{i+1} (1-t)^{d-i}, denominator power d+1.
// Throws InvalidParameter for an empty f-vector.
HilbertSeries hilbert_series(const FVector& f);

// Coefficient of t^j in the series expansion. Throws InvalidParameter for j < 0.
BigInt hilbert_function(const HilbertSeries& h, int j);

}  // namespace ssc

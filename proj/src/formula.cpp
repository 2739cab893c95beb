#include "ssc/formula.hpp"

#include "ssc/error.hpp"

#include <algorithm>
#include <map>

namespace ssc {

const char* to_string(UnionRule r) { return r == UnionRule::Pairwise ? "pairwise" : "exact"; }

BigInt ClosedFormFVector::term_value(const AuditTerm& t, int i) const {
  const int n = 3 * m;
  return t.sign * binomial(n - t.union_size, i + 1 - t.union_size);
}

namespace {

class SubsetSweep {
 public:
  SubsetSweep(const CycleCatalog& cat, UnionRule rule, bool record_terms)
      : cat_(cat), rule_(rule), record_terms_(record_terms), n_(static_cast<int>(cat.size())) {
    inter_.assign(n_, std::vector<int>(n_, 0));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) inter_[a][b] = direct_intersection(cat.entries[a].edges, cat.entries[b].edges);
  }

  void run() { visit(0, 0, EdgeSet{}); }

  std::map<std::pair<int, int>, std::int64_t> histogram;
  std::vector<AuditTerm> terms;

 private:
  void visit(int from, int union_size, EdgeSet union_edges) {
    for (int k = from; k < n_; ++k) {
      const auto& entry = cat_.entries[k];
      int next_size;
      EdgeSet next_edges = union_edges | entry.edges;
      if (rule_ == UnionRule::Pairwise) {
        next_size = union_size + entry.beta;
        for (int x : chosen_) next_size -= inter_[k][x];
      } else {
        next_size = next_edges.size();
      }
      chosen_.push_back(k);
      ++histogram[{static_cast<int>(chosen_.size()), next_size}];
      if (record_terms_) {
        terms.push_back({chosen_, next_size, chosen_.size() % 2 ? -1 : 1});
      }
      visit(k + 1, next_size, next_edges);
      chosen_.pop_back();
    }
  }

  const CycleCatalog& cat_;
  UnionRule rule_;
  bool record_terms_;
  int n_;
  std::vector<std::vector<int>> inter_;
  std::vector<int> chosen_;
};

}  // namespace

ClosedFormFVector f_vector_paper(int m, UnionRule rule) {
  if (m < 3) throw InvalidParameter("f-vector formula needs m >= 3, got " + std::to_string(m));
  if (m > kClosedFormMaxM) {
    throw CapacityError("the catalog subset sum visits 2^(m^2) subsets; supported for m <= " +
                        std::to_string(kClosedFormMaxM));
  }
  ClosedFormFVector out;
  out.m = m;
  out.rule = rule;
  out.catalog = paper_cycle_catalog(m);
  const int n = 3 * m;
  const int top = 2 * m - 1;

  SubsetSweep sweep(out.catalog, rule, m == 3);
  sweep.run();

  for (int i = 0; i <= top; ++i) out.f.f.push_back(binomial(n, i + 1));
  for (const auto& [key, count] : sweep.histogram) {
    const auto [t, u] = key;
    out.groups.push_back({t, u, count});
    const int sign = t % 2 ? -1 : 1;
    for (int i = 0; i <= top; ++i) out.f.f[i] += sign * count * binomial(n - u, i + 1 - u);
  }
  for (auto& term : sweep.terms) {
    bool nonzero = false;
    for (int i = 0; i <= top && !nonzero; ++i) nonzero = binomial(n - term.union_size, i + 1 - term.union_size) != 0;
    if (nonzero) out.terms.push_back(std::move(term));
  }
  return out;
}

FVector f_vector_exact_ie(const Graph& g) {
  if (!g.is_connected()) throw InvalidParameter("f-vector of the spanning complex needs a connected graph");
  const auto cycles = enumerate_simple_cycles(g);
  if (cycles.size() > static_cast<std::size_t>(kExactIeMaxCycles)) {
    throw CapacityError("exact inclusion-exclusion needs at most " + std::to_string(kExactIeMaxCycles) +
                        " cycles, graph has " + std::to_string(cycles.size()));
  }
  const int edges = g.edge_count();
  // signed[u] = sum over subsets T with |union T| = u of (-1)^|T|, T = {} included.
  std::vector<std::int64_t> signed_counts(edges + 1, 0);
  auto visit = [&](auto&& self, std::size_t from, EdgeSet uni, int parity) -> void {
    signed_counts[uni.size()] += parity;
    for (std::size_t k = from; k < cycles.size(); ++k) self(self, k + 1, uni | cycles[k], -parity);
  };
  visit(visit, 0, EdgeSet{}, 1);

  FVector out;
  for (int i = 0; i + 1 < g.vertex_count(); ++i) {
    BigInt fi = 0;
    for (int u = 0; u <= edges; ++u)
      if (signed_counts[u] != 0) fi += signed_counts[u] * binomial(edges - u, i + 1 - u);
    out.f.push_back(fi);
  }
  return out;
}

namespace {

// Coefficients of (1 - t)^k.
std::vector<BigInt> one_minus_t_pow(int k) {
  std::vector<BigInt> c(k + 1);
  for (int j = 0; j <= k; ++j) c[j] = (j % 2 ? -1 : 1) * binomial(k, j);
  return c;
}

}  // namespace

BigInt HilbertSeries::numerator_at_one() const {
  BigInt s = 0;
  for (const auto& c : numerator) s += c;
  return s;
}

HilbertSeries hilbert_series(const FVector& f) {
  if (f.empty()) throw InvalidParameter("Hilbert series of an empty f-vector");
  const int d = f.dimension();
  HilbertSeries h;
  h.denominator_power = d + 1;
  h.numerator = one_minus_t_pow(d + 1);
  for (int i = 0; i <= d; ++i) {
    const auto factor = one_minus_t_pow(d - i);
    for (std::size_t j = 0; j < factor.size(); ++j) h.numerator[i + 1 + j] += f[i] * factor[j];
  }
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  return h;
}

BigInt hilbert_function(const HilbertSeries& h, int j) {
  if (j < 0) throw InvalidParameter("Hilbert function at negative degree");
  const int D = h.denominator_power;
  BigInt value = 0;
  for (int k = 0; k <= j && k < static_cast<int>(h.numerator.size()); ++k) {
    // [t^n] (1 - t)^{-D} = C(n + D - 1, D - 1), and 1 at n = 0 when D = 0.
    const int n = j - k;
    const BigInt series = D == 0 ? BigInt(n == 0 ? 1 : 0) : binomial(n + D - 1, D - 1);
    value += h.numerator[k] * series;
  }
  return value;
}

}  // namespace ssc

#include "ssc/report.hpp"

#include "ssc/complex.hpp"
#include "ssc/cycles.hpp"
#include "ssc/error.hpp"
#include "ssc/face_ring.hpp"
#include "ssc/formula.hpp"
#include "ssc/spanning.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace ssc {

const char* to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Match: return "match";
    case ClaimVerdict::Mismatch: return "mismatch";
    case ClaimVerdict::Unchecked: return "unchecked";
  }
  return "?";
}

std::size_t RunReport::count(ClaimVerdict v) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [v](const Claim& c) { return c.verdict == v; }));
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + "]";
}

class ReportBuilder {
 public:
  void compare(std::string id, std::string description, std::string claimed, std::string claimed_source,
               std::string oracle, std::string oracle_source) {
    Claim c{std::move(id), std::move(description), std::move(claimed), std::move(claimed_source),
            std::move(oracle), std::move(oracle_source), ClaimVerdict::Unchecked};
    c.verdict = c.claimed == c.oracle ? ClaimVerdict::Match : ClaimVerdict::Mismatch;
    report.claims.push_back(std::move(c));
  }

  void unchecked(std::string id, std::string description, std::string reason) {
    report.claims.push_back(
        {std::move(id), std::move(description), "", "", "", std::move(reason), ClaimVerdict::Unchecked});
  }

  // Runs `body`, recording its wall time under `group`.
  void timed(const std::string& group, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    report.timings_ms.emplace_back(group, dt.count());
  }

  RunReport report;
};

void compare_f_vectors(ReportBuilder& rb, const std::string& id, const std::string& what, const FVector& claimed,
                       const std::string& claimed_source, const FVector& oracle, const std::string& oracle_source) {
  const std::size_t n = std::max(claimed.size(), oracle.size());
  for (std::size_t i = 0; i < n; ++i) {
    rb.compare(id + "[" + std::to_string(i) + "]", what + ", f_" + std::to_string(i),
               i < claimed.size() ? claimed[i].str() : "absent", claimed_source,
               i < oracle.size() ? oracle[i].str() : "absent", oracle_source);
  }
}

void hilbert_checks(ReportBuilder& rb, const FVector& f) {
  const HilbertSeries h = hilbert_series(f);
  rb.compare("hilbert-numerator-at-one", "numerator of the Hilbert series at t = 1 equals the facet count",
             h.numerator_at_one().str(), "Hilbert series numerator", f.f.back().str(), "f_d of the direct f-vector");
  std::vector<std::string> series, expected;
  for (int j = 1; j <= 2 * h.denominator_power; ++j) {
    series.push_back(hilbert_function(h, j).str());
    BigInt s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * binomial(j - 1, static_cast<long long>(i));
    expected.push_back(s.str());
  }
  rb.compare("hilbert-function", "Hilbert function H(j) = sum_i f_i C(j-1, i) for j = 1..2(d+1)", join(series),
             "series expansion of N(t)/(1-t)^D", join(expected), "binomial sum over the f-vector");
}

}  // namespace

RunReport verify_jahangir(int m) {
  if (m < 3) throw InvalidParameter("J(2,m) needs m >= 3, got " + std::to_string(m));
  ReportBuilder rb;
  const Graph g = build_jahangir(m);
  const BigInt tree_count = matrix_tree_count(g);
  std::vector<EdgeSet> generic;

  rb.timed("spanning-trees", [&] {
    const auto records = enumerate_spanning_trees_jahangir(m);
    generic = enumerate_spanning_trees_generic(g);
    rb.compare("facet-count", "cutting-down rules produce |s(J(2,m))| spanning trees", std::to_string(records.size()),
               "cutting-down rules", tree_count.str(), "Matrix-Tree determinant");
    rb.compare("generic-tree-count", "generic enumeration agrees with the Matrix-Tree count",
               std::to_string(generic.size()), "backtracking enumeration", tree_count.str(),
               "Matrix-Tree determinant");
    const PartitionReport p = verify_partition(m);
    std::string sizes;
    for (std::size_t c = 0; c < p.class_sizes.size(); ++c)
      sizes += (c ? "," : "") + std::string(to_string(kTreeClasses[c])) + "=" + std::to_string(p.class_sizes[c]);
    rb.compare("class-partition", "CJ1..CJ3c are pairwise disjoint and cover s(J(2,m)) (" + sizes + ")",
               p.ok() ? "partition" : "not a partition", "cutting-down classes",
               p.union_matches_generic ? "partition" : "not a partition", "generic enumeration");
  });

  rb.timed("complex", [&] {
    const SimplicialComplex c(g.edge_count(), generic);
    rb.compare("dimension", "dim = 2m - 1", std::to_string(2 * m - 1), "closed form", std::to_string(dimension(c)),
               "largest facet");
    rb.compare("purity", "spanning complex is pure", "true", "closed form", is_pure(c) ? "true" : "false",
               "facet sizes");
  });

  rb.timed("cycles", [&] {
    const auto cycles = enumerate_simple_cycles(g);
    rb.compare("cycle-count", "number of cycles is m^2", std::to_string(m * m), "closed form",
               std::to_string(cycles.size()), "simple-cycle enumeration");
    const CycleCatalog cat = paper_cycle_catalog(m);
    std::size_t words_ok = 0;
    std::vector<std::string> off;
    for (const auto& e : cat.entries) {
      if (e.beta == 2 * (e.word->length + 1) && e.is_simple_cycle) {
        ++words_ok;
      } else {
        off.push_back(e.word->str(m) + ":" + std::to_string(e.beta) + (e.is_simple_cycle ? "" : "(not a cycle)"));
      }
    }
    rb.compare("cycle-order", "every word C_{i1..ik} is a simple cycle of order 2(k+1)",
               std::to_string(cat.size()) + " words", "closed form",
               std::to_string(words_ok) + " words" + (off.empty() ? "" : " (off: " + join(off) + ")"),
               "edge sets of the words");
    std::set<EdgeSet, CanonicalLess> catalog_cycles;
    for (const auto& e : cat.entries)
      if (e.is_simple_cycle) catalog_cycles.insert(e.edges);
    std::size_t missing = 0;
    for (EdgeSet c : cycles) missing += catalog_cycles.count(c) == 0;
    rb.compare("cycle-coverage", "every simple cycle is some word of the catalog", "0 missing", "closed form",
               std::to_string(missing) + " missing", "simple-cycle enumeration");
    const IntersectionReport ir = intersection_sweep(m);
    rb.compare("intersections", "predicted |C_u & C_v| equals the direct count over all word pairs",
               "0 of " + std::to_string(ir.checked) + " pairs diverge", "intersection rules",
               std::to_string(ir.divergences.size()) + " of " + std::to_string(ir.checked) + " pairs diverge",
               "direct edge-set intersection");
  });

  FVector direct;
  if (g.edge_count() <= kDirectFVectorEdgeLimit) {
    rb.timed("f-vector-direct", [&] { direct = f_vector_direct(g); });
  }

  rb.timed("f-vector-formula", [&] {
    if (m <= kClosedFormMaxM && !direct.empty()) {
      const ClosedFormFVector pairwise = f_vector_paper(m, UnionRule::Pairwise);
      compare_f_vectors(rb, "f-vector-paper", "closed-form f-vector (pairwise union)", pairwise.f,
                        "closed form, pairwise union", direct, "acyclic-subset count");
      const ClosedFormFVector exact = f_vector_paper(m, UnionRule::Exact);
      compare_f_vectors(rb, "f-vector-paper-exact-union", "closed-form f-vector over the word catalog, exact unions",
                        exact.f, "word catalog, exact union", direct, "acyclic-subset count");
    } else {
      rb.unchecked("f-vector-paper", "closed-form f-vector", "supported for m <= 5");
    }
    if (!direct.empty() && static_cast<int>(enumerate_simple_cycles(g).size()) <= kExactIeMaxCycles) {
      compare_f_vectors(rb, "f-vector-exact-ie", "inclusion-exclusion over the true cycles", f_vector_exact_ie(g),
                        "exact inclusion-exclusion", direct, "acyclic-subset count");
    } else {
      rb.unchecked("f-vector-exact-ie", "inclusion-exclusion over the true cycles", "cycle count over capacity");
    }
  });

  rb.timed("hilbert", [&] {
    if (!direct.empty()) {
      hilbert_checks(rb, direct);
    } else {
      rb.unchecked("hilbert-numerator-at-one", "Hilbert series checks", "direct f-vector over capacity");
    }
  });

  rb.timed("cohen-macaulay", [&] {
    const SimplicialComplex c(g.edge_count(), generic);
    const MonomialIdeal ideal = facet_ideal(c);
    const auto order = paper_ordering(ideal, m);
    const QlqResult q = has_quasi_linear_quotients(ideal, order);
    rb.compare("cohen-macaulay", "facet ideal has quasi-linear quotients in the block order (face ring is CM)",
               "true", "block-order claim", q.ok ? "true" : "false at position " + std::to_string(*q.first_failure),
               "colon-ideal degree check");
    std::vector<EdgeSet> ordered;
    for (std::size_t i : order) ordered.push_back(c.facets()[i]);
    rb.compare("shelling-agrees", "shelling test agrees with the quasi-linear-quotient test on the block order",
               q.ok ? "true" : "false", "quasi-linear quotients", is_shelling(ordered) ? "true" : "false",
               "classical shelling test");
  });

  return rb.report;
}

RunReport verify_graph(const Graph& g) {
  if (!g.is_connected()) throw InvalidParameter("verification needs a connected graph");
  ReportBuilder rb;
  const BigInt tree_count = matrix_tree_count(g);
  std::vector<EdgeSet> generic;
  rb.timed("spanning-trees", [&] {
    generic = enumerate_spanning_trees_generic(g);
    rb.compare("generic-tree-count", "generic enumeration agrees with the Matrix-Tree count",
               std::to_string(generic.size()), "backtracking enumeration", tree_count.str(),
               "Matrix-Tree determinant");
  });
  FVector direct;
  rb.timed("f-vector", [&] {
    if (g.edge_count() > kDirectFVectorEdgeLimit) {
      rb.unchecked("f-vector-exact-ie", "inclusion-exclusion over the true cycles", "edge count over capacity");
      return;
    }
    direct = f_vector_direct(g);
    if (direct.empty()) return;
    rb.compare("facet-count", "top f-vector entry equals the spanning-tree count", direct.f.back().str(),
               "acyclic-subset count", tree_count.str(), "Matrix-Tree determinant");
    if (static_cast<int>(enumerate_simple_cycles(g).size()) <= kExactIeMaxCycles) {
      compare_f_vectors(rb, "f-vector-exact-ie", "inclusion-exclusion over the true cycles", f_vector_exact_ie(g),
                        "exact inclusion-exclusion", direct, "acyclic-subset count");
    } else {
      rb.unchecked("f-vector-exact-ie", "inclusion-exclusion over the true cycles", "cycle count over capacity");
    }
  });
  rb.timed("hilbert", [&] {
    if (!direct.empty()) hilbert_checks(rb, direct);
  });
  return rb.report;
}

}  // namespace ssc

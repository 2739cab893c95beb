#include "oracles.hpp"
#include "ssc/complex.hpp"
#include "ssc/error.hpp"
#include "ssc/face_ring.hpp"
#include "ssc/graph.hpp"

#include <doctest.h>

#include <set>

using namespace ssc;

namespace {

std::vector<SquarefreeMonomial> monomials(std::initializer_list<EdgeSet> sets) {
  std::vector<SquarefreeMonomial> out;
  for (EdgeSet s : sets) out.push_back({s});
  return out;
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Shelling read as: the faces F_i shares with earlier facets form a pure
// complex of codimension one in F_i.
bool shelling_by_intersections(const std::vector<EdgeSet>& facets) {
  for (std::size_t i = 1; i < facets.size(); ++i) {
    std::vector<EdgeSet> meets;
    for (std::size_t j = 0; j < i; ++j) meets.push_back(facets[i] & facets[j]);
    for (EdgeSet a : meets) {
      bool maximal = true;
      for (EdgeSet b : meets) maximal = maximal && !(a != b && a.is_subset_of(b));
      if (maximal && a.size() != facets[i].size() - 1) return false;
    }
  }
  return true;
}

bool any_qlq_permutation(const MonomialIdeal& ideal) {
  auto order = identity(ideal.size());
  do {
    if (has_quasi_linear_quotients(ideal, order).ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

MonomialIdeal ideal_of(const Graph& g) { return facet_ideal(spanning_complex(g)); }

}  // namespace

TEST_SUITE_BEGIN("face ring");

TEST_CASE("facet ideal") {
  const MonomialIdeal tri = ideal_of(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tri.size() == 3);
  for (const auto& m : tri.generators()) CHECK(m.degree() == 2);
  const MonomialIdeal j3 = ideal_of(build_jahangir(3));
  CHECK(j3.size() == 50);
  for (const auto& m : j3.generators()) CHECK(m.degree() == 6);
  const MonomialIdeal j4 = ideal_of(build_jahangir(4));
  for (const auto& m : j4.generators()) CHECK(m.degree() == 8);
  for (const auto& a : j3.generators())
    for (const auto& b : j3.generators()) CHECK((a == b || !a.divides(b)));
  CHECK_THROWS_AS(facet_ideal(SimplicialComplex(4, {EdgeSet{0, 1}, EdgeSet{2}})), InvalidParameter);
  CHECK_THROWS_AS(MonomialIdeal(monomials({EdgeSet{0}, EdgeSet{0, 1}})), InvalidParameter);
  CHECK_THROWS_AS(MonomialIdeal(monomials({EdgeSet{0, 1}, EdgeSet{0, 1}})), InvalidParameter);
}

TEST_CASE("colon_mindeg") {
  const auto xy = monomials({EdgeSet{0, 1}});
  CHECK(colon_mindeg(xy, {EdgeSet{0, 2}}) == 1);
  CHECK(colon_mindeg(xy, {EdgeSet{2, 3}}) == 2);
  CHECK_THROWS_AS(colon_mindeg({}, {EdgeSet{0}}), PreconditionError);

  // adding generators to the prefix never raises the minimal degree
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SquarefreeMonomial> prefix;
    const SquarefreeMonomial current{EdgeSet(rng() & 0xfff)};
    int last = 1 << 20;
    for (int k = 0; k < 8; ++k) {
      prefix.push_back({EdgeSet(rng() & 0xfff)});
      const int d = colon_mindeg(prefix, current);
      CHECK(d <= last);
      last = d;
    }
  }
}

TEST_CASE("has_quasi_linear_quotients") {
  const MonomialIdeal single(monomials({EdgeSet{0, 1}}));
  CHECK(has_quasi_linear_quotients(single, identity(1)).ok);

  const MonomialIdeal tri = ideal_of(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto order = identity(3);
  do {
    CHECK(has_quasi_linear_quotients(tri, order).ok);
  } while (std::next_permutation(order.begin(), order.end()));

  const MonomialIdeal far(monomials({EdgeSet{0, 1}, EdgeSet{2, 3}}));
  const QlqResult r = has_quasi_linear_quotients(far, identity(2));
  CHECK_FALSE(r.ok);
  CHECK(r.first_failure == 1);

  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(has_quasi_linear_quotients(tri, bad), InvalidParameter);
  CHECK_THROWS_AS(has_quasi_linear_quotients(tri, identity(2)), InvalidParameter);
}

TEST_CASE("block ordering") {
  for (int m = 3; m <= 5; ++m) {
    const MonomialIdeal ideal = ideal_of(build_jahangir(m));
    const auto order = paper_ordering(ideal, m);
    REQUIRE(order.size() == ideal.size());
    CHECK(std::set<std::size_t>(order.begin(), order.end()).size() == ideal.size());
    CHECK(order == paper_ordering(m));
    int previous_block = m;
    for (std::size_t k : order) {
      const int block = paper_block_of(ideal.generators()[k].support, m);
      CHECK(block <= previous_block);
      previous_block = block;
    }
    CHECK(has_quasi_linear_quotients(ideal, order).ok);
  }
  const Graph g = build_jahangir(3);
  const MonomialIdeal ideal = ideal_of(g);
  const EdgeSet first = ideal.generators()[paper_ordering(ideal, 3).front()].support;
  CHECK_FALSE(first.contains(g.index_of({1, 1})));
  CHECK_FALSE(first.contains(g.index_of({2, 1})));
  CHECK_THROWS_AS(paper_ordering(2), InvalidParameter);
}

TEST_CASE("find_qlq_ordering") {
  const MonomialIdeal tri = ideal_of(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(find_qlq_ordering(tri).has_value());
  const MonomialIdeal far(monomials({EdgeSet{0, 1}, EdgeSet{2, 3}}));
  CHECK_FALSE(find_qlq_ordering(far).has_value());
  const MonomialIdeal j3 = ideal_of(build_jahangir(3));
  for (std::uint64_t seed : {0, 1, 2}) {
    const auto found = find_qlq_ordering(j3, seed);
    REQUIRE(found.has_value());
    CHECK(has_quasi_linear_quotients(j3, *found).ok);
  }
  CHECK(find_qlq_ordering(j3, 4) == find_qlq_ordering(j3, 4));
}

TEST_CASE("find_qlq_ordering agrees with exhaustive permutation search") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<SquarefreeMonomial> gens;
    std::set<std::uint64_t> seen;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    while (static_cast<int>(gens.size()) < n) {
      std::uint64_t bits = 0;
      while (std::popcount(bits) < 3) bits |= std::uint64_t{1} << (rng() % 6);
      if (seen.insert(bits).second) gens.push_back({EdgeSet(bits)});
    }
    const MonomialIdeal ideal(gens);
    const auto found = find_qlq_ordering(ideal, trial);
    CHECK(found.has_value() == any_qlq_permutation(ideal));
    if (found) CHECK(has_quasi_linear_quotients(ideal, *found).ok);
  }
}

TEST_CASE("find_qlq_ordering capacity") {
  std::vector<SquarefreeMonomial> gens;
  for (int a = 0; a < 64 && gens.size() <= kQlqSearchLimit; ++a)
    for (int b = a + 1; b < 64 && gens.size() <= kQlqSearchLimit; ++b) gens.push_back({EdgeSet{a, b}});
  CHECK_THROWS_AS(find_qlq_ordering(MonomialIdeal(gens)), CapacityError);
}

TEST_CASE("is_shelling") {
  const std::vector<EdgeSet> tri{EdgeSet{0, 1}, EdgeSet{1, 2}, EdgeSet{0, 2}};
  CHECK(is_shelling(tri));
  CHECK_FALSE(is_shelling(std::vector<EdgeSet>{EdgeSet{0, 1}, EdgeSet{2, 3}}));
  CHECK_THROWS_AS(is_shelling(std::vector<EdgeSet>{EdgeSet{0, 1}, EdgeSet{2}}), InvalidParameter);
  for (int m = 3; m <= 5; ++m) {
    const MonomialIdeal ideal = ideal_of(build_jahangir(m));
    std::vector<EdgeSet> ordered;
    for (std::size_t k : paper_ordering(ideal, m)) ordered.push_back(ideal.generators()[k].support);
    CHECK(is_shelling(ordered));
    if (m == 3) CHECK(shelling_by_intersections(ordered));
  }
}

TEST_CASE("quasi-linear quotients do not imply shelling") {
  // diamond: 4-cycle 0-1-2-3 with chord 0-2
  const Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const std::vector<EdgeSet> order{EdgeSet{0, 1, 2}, EdgeSet{0, 1, 3}, EdgeSet{0, 2, 3},
                                   EdgeSet{0, 2, 4}, EdgeSet{1, 2, 3}, EdgeSet{1, 3, 4}};
  for (EdgeSet f : order) REQUIRE(is_spanning_tree(diamond, f));
  const MonomialIdeal ideal(std::vector<SquarefreeMonomial>(
      {{order[0]}, {order[1]}, {order[2]}, {order[3]}, {order[4]}, {order[5]}}));
  CHECK(has_quasi_linear_quotients(ideal, identity(6)).ok);
  // {1,3,4} meets {0,2,4} in {4}, and no earlier neighbour of {1,3,4} keeps edge 4
  CHECK_FALSE(is_shelling(order));
  CHECK_FALSE(shelling_by_intersections(order));
}

TEST_CASE("shelling implies quasi-linear quotients on random orderings") {
  std::mt19937_64 rng(41);
  int graphs = 0, orderings = 0, qlq_only = 0;
  while (graphs < 40) {
    const auto r = oracle::random_connected_graph(rng, 7, 10);
    const Graph g(r.vertices, std::vector<Edge>(r.edges.begin(), r.edges.end()));
    const MonomialIdeal ideal = ideal_of(g);
    if (ideal.size() > 40) continue;
    ++graphs;
    auto order = identity(ideal.size());
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<EdgeSet> facets;
      for (std::size_t k : order) facets.push_back(ideal.generators()[k].support);
      const bool qlq = has_quasi_linear_quotients(ideal, order).ok;
      const bool shelling = is_shelling(facets);
      CHECK(shelling == shelling_by_intersections(facets));
      if (shelling) CHECK(qlq);
      qlq_only += qlq && !shelling;
      ++orderings;
    }
    // the search result, when it exists, is checked the same way
    if (auto found = find_qlq_ordering(ideal, graphs)) {
      std::vector<EdgeSet> facets;
      for (std::size_t k : *found) facets.push_back(ideal.generators()[k].support);
      qlq_only += !is_shelling(facets);
      ++orderings;
    }
  }
  MESSAGE(qlq_only << " of " << orderings << " orderings have quasi-linear quotients without being shellings");
}

TEST_CASE("cohen_macaulay_verdict") {
  for (int m = 3; m <= 5; ++m) {
    const CmVerdict v = cohen_macaulay_verdict(build_jahangir(m));
    CHECK(v.verdict == Verdict::True);
    CHECK(v.method == "paper");
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->size() == v.facets.size());
  }
  const CmVerdict searched = cohen_macaulay_verdict(build_jahangir(3), OrderingStrategy::Search);
  CHECK(searched.verdict == Verdict::True);
  CHECK(searched.method == "search");
  CHECK(cohen_macaulay_verdict(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).verdict == Verdict::True);
  CHECK(cohen_macaulay_verdict(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).verdict == Verdict::True);
  CHECK_THROWS_AS(cohen_macaulay_verdict(Graph(4, {{0, 1}, {2, 3}})), InvalidParameter);

  std::vector<Edge> k7;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) k7.push_back({a, b});
  const CmVerdict big = cohen_macaulay_verdict(Graph(7, k7), OrderingStrategy::Search);
  CHECK(big.verdict == Verdict::Unknown);
  CHECK_FALSE(big.certificate.has_value());
}

TEST_SUITE_END();

#pragma once

#include "ssc/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ssc {

enum class ClaimVerdict { Match, Mismatch, Unchecked };
const char* to_string(ClaimVerdict v);

// A value asserted by a formula or rule set, and the value an independent
// oracle computes for the same quantity.
struct Claim {
  std::string id;
  std::string description;
  std::string claimed;
  std::string claimed_source;
  std::string oracle;
  std::string oracle_source;
  ClaimVerdict verdict = ClaimVerdict::Unchecked;
};

struct RunReport {
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, double>> timings_ms;  // per check group

  std::size_t count(ClaimVerdict v) const;
  bool has_mismatch() const { return count(ClaimVerdict::Mismatch) > 0; }
};

// Cross-checks every computable claim about J(2,m) against its oracle.
// Checks whose oracle is out of capacity for this m are reported unchecked.
RunReport verify_jahangir(int m);

// Oracle-against-oracle checks that apply to any connected graph.
RunReport verify_graph(const Graph& g);

}  // namespace ssc

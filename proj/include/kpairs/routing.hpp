#ifndef KPAIRS_ROUTING_HPP
#define KPAIRS_ROUTING_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kpairs/lp.hpp"
#include "kpairs/network.hpp"

namespace kpairs {

// Per-commodity arc flows. Undirected edges appear as both orientations.
struct RoutingScheme {
  Rational rate;
  std::map<std::pair<std::string, Arc>, Rational> flow;  // zero flows omitted
};

// Edge-based maximum concurrent flow encoding:
//   f[i,a] >= 0 for every commodity i and arc a, plus the common rate r;
//   conservation at every node other than s(i), t(i); net outflow r at s(i)
//   and net inflow r at t(i); per-edge capacity on the summed arc loads.
struct ConcurrentFlowLp {
  LinearProgram lp;
  std::vector<Arc> arcs;
  std::size_t rate_var = 0;
  std::map<std::pair<std::string, Arc>, std::size_t> flow_var;
  std::vector<std::size_t> capacity_rows;  // one per network edge
};

ConcurrentFlowLp build_concurrent_flow_lp(const Network& network);

struct RoutingResult {
  Rational rate;
  RoutingScheme scheme;
  SimplexResult solution;
};

// Maximum concurrent fractional routing rate. Throws NetworkError when the
// network has no commodities.
RoutingResult routing_rate(const Network& network);

// Independent re-check of conservation, rate and capacity for a scheme.
bool verify_scheme(const Network& network, const RoutingScheme& scheme,
                   std::string* why = nullptr);

}  // namespace kpairs

#endif  // KPAIRS_ROUTING_HPP

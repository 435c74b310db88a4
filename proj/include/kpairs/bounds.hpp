#ifndef KPAIRS_BOUNDS_HPP
#define KPAIRS_BOUNDS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpairs/network.hpp"
#include "kpairs/rational.hpp"

namespace kpairs {

// Indices into Network::edges().
using EdgeSet = std::set<std::size_t>;

class EnumerationCapExceeded : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

struct CutReport {
  Rational value;
  EdgeSet witness_edges;
  CommodityIds witness_commodities;
};

struct EnumerationOptions {
  std::size_t max_edges = 20;
  std::size_t max_commodities = 10;
  unsigned jobs = 1;
};

inline constexpr std::size_t kDefaultSparsityEdgeCap = 20;
inline constexpr std::size_t kDefaultMeagernessEdgeCap = 16;

// No path from s(i) to t(i) once `removed` is deleted. Paths follow edge
// direction only in directed networks.
bool separates(const Network& network, const EdgeSet& removed,
               std::string_view commodity);

// Directed networks only: no s(i) -> t(j) path for any i, j in `group`.
bool isolates(const Network& network, const EdgeSet& removed,
              const CommodityIds& group);

// Minimum over edge sets A of cap(A) / |J(A)|, J(A) being every commodity A
// separates. Ties go to the smaller |A|, then the lexicographically smaller
// index list. Throws EnumerationCapExceeded above options.max_edges.
CutReport sparsity(const Network& network, EnumerationOptions options = {});

// Minimum over A of cap(A) / max{|J| : A isolates J}. Directed only.
CutReport meagerness(const Network& network,
                     EnumerationOptions options = {kDefaultMeagernessEdgeCap,
                                                   10, 1});

// Hop counts; nullopt marks an unreachable pair.
class DistanceTable {
 public:
  explicit DistanceTable(const Network& network);

  std::optional<int> distance(std::string_view from, std::string_view to) const;
  const std::vector<NodeId>& nodes() const { return nodes_; }

 private:
  std::vector<NodeId> nodes_;
  std::map<NodeId, std::size_t> index_;
  std::vector<std::vector<std::optional<int>>> d_;
};

DistanceTable distance_table(const Network& network);

// Total capacity over the sum of commodity hop distances. Undirected only.
Rational wiener_bound(const Network& network);

}  // namespace kpairs

#endif  // KPAIRS_BOUNDS_HPP

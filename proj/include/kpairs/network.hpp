#ifndef KPAIRS_NETWORK_HPP
#define KPAIRS_NETWORK_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpairs/rational.hpp"

namespace kpairs {

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure; line() is 1-based, 0 when no line applies.
class ParseError : public NetworkError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : NetworkError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using NodeId = std::string;
using NodeSet = std::set<NodeId>;
using CommodityIds = std::set<std::string>;

// True for nonempty tokens of letters, digits and underscores.
bool is_valid_name(std::string_view name);

struct Arc {
  NodeId tail;
  NodeId head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcSet = std::set<Arc>;

std::string to_string(const Arc& arc);  // "tail>head"

struct Edge {
  NodeId u;
  NodeId v;
  Rational capacity{1};
};

struct Commodity {
  std::string id;
  NodeId source;
  NodeId sink;
};

// Pairs the two arcs of an undirected edge; their loads share `capacity`.
struct Coupling {
  std::size_t forward;   // index into DirectedExpansion::arcs, (u,v)
  std::size_t backward;  // (v,u)
  std::size_t edge;      // index into Network::edges()
  Rational capacity;
};

struct DirectedExpansion {
  std::vector<Arc> arcs;
  std::vector<Coupling> couplings;
};

// A k-pairs network: a simple graph plus a list of source/sink commodities.
// Immutable once constructed; the constructor validates every invariant.
class Network {
 public:
  Network(bool directed, std::vector<NodeId> nodes, std::vector<Edge> edges,
          std::vector<Commodity> commodities);

  bool directed() const { return directed_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Commodity>& commodities() const { return commodities_; }

  bool has_node(std::string_view name) const;
  std::size_t node_index(std::string_view name) const;
  const Commodity& commodity(std::string_view id) const;
  bool has_commodity(std::string_view id) const;

  // Index of the edge joining u and v (either orientation when undirected).
  std::optional<std::size_t> find_edge(std::string_view u,
                                       std::string_view v) const;

  // Arcs carrying information: the edges themselves when directed, both
  // orientations of every edge when undirected. Sorted.
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(const Arc& arc) const;

  // Capacity bounding the entropy of a single arc (directed) or the shared
  // capacity of its undirected edge.
  Rational arc_capacity(const Arc& arc) const;

  ArcSet in_set(const NodeSet& nodes) const;
  ArcSet out_set(const NodeSet& nodes) const;
  CommodityIds sources_in(const NodeSet& nodes) const;
  CommodityIds sinks_in(const NodeSet& nodes) const;

  // Only defined for undirected networks.
  DirectedExpansion directed_expansion() const;

  // Neighbours in the underlying graph ignoring direction.
  std::vector<NodeId> neighbours(std::string_view node) const;

  friend bool operator==(const Network& a, const Network& b);

 private:
  void check_nodes(const NodeSet& nodes) const;

  bool directed_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<Commodity> commodities_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::unordered_map<std::string, std::size_t> commodity_index_;
  std::vector<Arc> arcs_;
};

Network parse_network(std::string_view text);
std::string serialize_network(const Network& network);

// Generators. Node names: s1..sk, u, v, t1..tk for the directed bottleneck
// family; a, b, c, g, h, f for the three-commodity network; v1..vm, w1..wn
// for complete bipartite networks.
Network gen_n1(int k);
Network gen_hu();

enum class BipartiteType { kTypeI, kTypeII };
Network gen_bipartite(BipartiteType type, int m, int n);

// Two-colouring of the underlying graph. The lexicographically smallest node
// of each connected component is placed on the first side. Returns nullopt
// when the graph has an odd cycle.
struct Bipartition {
  NodeSet first;
  NodeSet second;
};
std::optional<Bipartition> bipartition(const Network& network);

}  // namespace kpairs

#endif  // KPAIRS_NETWORK_HPP

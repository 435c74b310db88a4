#include "kpairs/network.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <utility>

namespace kpairs {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string to_string(const Arc& arc) { return arc.tail + ">" + arc.head; }

namespace {

std::pair<std::string, std::string> edge_key(const Edge& e, bool directed) {
  if (directed || e.u < e.v) return {e.u, e.v};
  return {e.v, e.u};
}

}  // namespace

Network::Network(bool directed, std::vector<NodeId> nodes,
                 std::vector<Edge> edges, std::vector<Commodity> commodities)
    : directed_(directed),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      commodities_(std::move(commodities)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!is_valid_name(nodes_[i])) {
      throw NetworkError("invalid node name '" + nodes_[i] + "'");
    }
    if (!node_index_.emplace(nodes_[i], i).second) {
      throw NetworkError("duplicate node '" + nodes_[i] + "'");
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& e : edges_) {
    for (const auto& end : {e.u, e.v}) {
      if (!has_node(end)) throw NetworkError("unknown node '" + end + "'");
    }
    if (e.u == e.v) throw NetworkError("self-loop at '" + e.u + "'");
    if (e.capacity.sign() <= 0) {
      throw NetworkError("non-positive capacity on edge " + e.u + " " + e.v);
    }
    if (!seen.insert(edge_key(e, directed_)).second) {
      throw NetworkError("duplicate edge " + e.u + " " + e.v);
    }
  }
  for (std::size_t i = 0; i < commodities_.size(); ++i) {
    const Commodity& c = commodities_[i];
    if (!is_valid_name(c.id)) {
      throw NetworkError("invalid commodity id '" + c.id + "'");
    }
    if (!commodity_index_.emplace(c.id, i).second) {
      throw NetworkError("duplicate commodity '" + c.id + "'");
    }
    for (const auto& end : {c.source, c.sink}) {
      if (!has_node(end)) throw NetworkError("unknown node '" + end + "'");
    }
    if (c.source == c.sink) {
      throw NetworkError("commodity '" + c.id + "' has equal source and sink");
    }
  }
  for (const Edge& e : edges_) {
    arcs_.push_back({e.u, e.v});
    if (!directed_) arcs_.push_back({e.v, e.u});
  }
  std::sort(arcs_.begin(), arcs_.end());
}

bool Network::has_node(std::string_view name) const {
  return node_index_.count(std::string(name)) != 0;
}

std::size_t Network::node_index(std::string_view name) const {
  auto it = node_index_.find(std::string(name));
  if (it == node_index_.end()) {
    throw NetworkError("unknown node '" + std::string(name) + "'");
  }
  return it->second;
}

bool Network::has_commodity(std::string_view id) const {
  return commodity_index_.count(std::string(id)) != 0;
}

const Commodity& Network::commodity(std::string_view id) const {
  auto it = commodity_index_.find(std::string(id));
  if (it == commodity_index_.end()) {
    throw NetworkError("unknown commodity '" + std::string(id) + "'");
  }
  return commodities_[it->second];
}

std::optional<std::size_t> Network::find_edge(std::string_view u,
                                              std::string_view v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == u && e.v == v) return i;
    if (!directed_ && e.u == v && e.v == u) return i;
  }
  return std::nullopt;
}

bool Network::has_arc(const Arc& arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

Rational Network::arc_capacity(const Arc& arc) const {
  const auto idx = find_edge(arc.tail, arc.head);
  if (!idx) {
    throw NetworkError("unknown arc " + to_string(arc));
  }
  return edges_[*idx].capacity;
}

void Network::check_nodes(const NodeSet& nodes) const {
  for (const auto& n : nodes) {
    if (!has_node(n)) throw NetworkError("unknown node '" + n + "'");
  }
}

ArcSet Network::in_set(const NodeSet& nodes) const {
  check_nodes(nodes);
  ArcSet result;
  for (const Arc& a : arcs_) {
    if (nodes.count(a.head) && !nodes.count(a.tail)) result.insert(a);
  }
  return result;
}

ArcSet Network::out_set(const NodeSet& nodes) const {
  check_nodes(nodes);
  ArcSet result;
  for (const Arc& a : arcs_) {
    if (nodes.count(a.tail) && !nodes.count(a.head)) result.insert(a);
  }
  return result;
}

CommodityIds Network::sources_in(const NodeSet& nodes) const {
  check_nodes(nodes);
  CommodityIds result;
  for (const Commodity& c : commodities_) {
    if (nodes.count(c.source)) result.insert(c.id);
  }
  return result;
}

CommodityIds Network::sinks_in(const NodeSet& nodes) const {
  check_nodes(nodes);
  CommodityIds result;
  for (const Commodity& c : commodities_) {
    if (nodes.count(c.sink)) result.insert(c.id);
  }
  return result;
}

DirectedExpansion Network::directed_expansion() const {
  if (directed_) {
    throw NetworkError("directed expansion requested for a directed network");
  }
  DirectedExpansion out;
  out.arcs.reserve(2 * edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::size_t f = out.arcs.size();
    out.arcs.push_back({e.u, e.v});
    out.arcs.push_back({e.v, e.u});
    out.couplings.push_back({f, f + 1, i, e.capacity});
  }
  return out;
}

std::vector<NodeId> Network::neighbours(std::string_view node) const {
  node_index(node);
  std::set<NodeId> result;
  for (const Edge& e : edges_) {
    if (e.u == node) result.insert(e.v);
    if (e.v == node) result.insert(e.u);
  }
  return {result.begin(), result.end()};
}

bool operator==(const Network& a, const Network& b) {
  if (a.directed_ != b.directed_) return false;
  if (NodeSet(a.nodes_.begin(), a.nodes_.end()) !=
      NodeSet(b.nodes_.begin(), b.nodes_.end())) {
    return false;
  }
  auto edge_map = [](const Network& n) {
    std::map<std::pair<std::string, std::string>, Rational> m;
    for (const Edge& e : n.edges_) m[edge_key(e, n.directed_)] = e.capacity;
    return m;
  };
  if (edge_map(a) != edge_map(b)) return false;
  auto commodity_map = [](const Network& n) {
    std::map<std::string, std::pair<std::string, std::string>> m;
    for (const Commodity& c : n.commodities_) m[c.id] = {c.source, c.sink};
    return m;
  };
  return commodity_map(a) == commodity_map(b);
}

std::optional<Bipartition> bipartition(const Network& network) {
  std::vector<NodeId> order(network.nodes().begin(), network.nodes().end());
  std::sort(order.begin(), order.end());
  std::map<NodeId, int> colour;
  for (const NodeId& start : order) {
    if (colour.count(start)) continue;
    colour[start] = 0;
    std::deque<NodeId> queue{start};
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (const NodeId& y : network.neighbours(x)) {
        auto it = colour.find(y);
        if (it == colour.end()) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (it->second == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (const auto& [node, c] : colour) {
    (c == 0 ? parts.first : parts.second).insert(node);
  }
  return parts;
}

}  // namespace kpairs

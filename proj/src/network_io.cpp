// Line-oriented network file format:
//
//   directed 0|1
//   node <name>               (or: nodes <n1> <n2> ...)
//   edge <u> <v> [<p>/<q>]
//   commodity <id> <src> <dst>
//
// '#' starts a comment. The directed line must come first.

#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "kpairs/network.hpp"

namespace kpairs {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

class NetworkReader {
 public:
  void line(std::size_t no, const std::vector<std::string>& tok) {
    const std::string& kw = tok[0];
    if (!directed_) {
      if (kw != "directed") {
        throw ParseError(no, "expected 'directed 0|1' before '" + kw + "'");
      }
      if (tok.size() != 2 || (tok[1] != "0" && tok[1] != "1")) {
        throw ParseError(no, "usage: directed 0|1");
      }
      directed_ = tok[1] == "1";
      return;
    }
    if (kw == "directed") throw ParseError(no, "repeated 'directed' line");
    if (kw == "node" || kw == "nodes") {
      if (kw == "node" && tok.size() != 2) {
        throw ParseError(no, "usage: node <name>");
      }
      for (std::size_t i = 1; i < tok.size(); ++i) add_node(no, tok[i]);
    } else if (kw == "edge") {
      if (tok.size() != 3 && tok.size() != 4) {
        throw ParseError(no, "usage: edge <u> <v> [<p>/<q>]");
      }
      add_edge(no, tok);
    } else if (kw == "commodity") {
      if (tok.size() != 4) {
        throw ParseError(no, "usage: commodity <id> <src> <dst>");
      }
      add_commodity(no, tok);
    } else {
      throw ParseError(no, "unknown keyword '" + kw + "'");
    }
  }

  Network finish() {
    if (!directed_) throw ParseError(0, "missing 'directed' line");
    return Network(*directed_, std::move(nodes_), std::move(edges_),
                   std::move(commodities_));
  }

 private:
  void add_node(std::size_t no, const std::string& name) {
    if (!is_valid_name(name)) {
      throw ParseError(no, "invalid node name '" + name + "'");
    }
    if (!node_set_.insert(name).second) {
      throw ParseError(no, "duplicate node '" + name + "'");
    }
    nodes_.push_back(name);
  }

  void require_node(std::size_t no, const std::string& name) const {
    if (!node_set_.count(name)) {
      throw ParseError(no, "unknown node '" + name + "'");
    }
  }

  void add_edge(std::size_t no, const std::vector<std::string>& tok) {
    require_node(no, tok[1]);
    require_node(no, tok[2]);
    if (tok[1] == tok[2]) throw ParseError(no, "self-loop at '" + tok[1] + "'");
    Edge e{tok[1], tok[2], Rational(1)};
    if (tok.size() == 4) {
      try {
        e.capacity = Rational::parse(tok[3]);
      } catch (const std::exception& ex) {
        throw ParseError(no, ex.what());
      }
      if (e.capacity.sign() <= 0) {
        throw ParseError(no, "capacity must be positive");
      }
    }
    auto key = (*directed_ || e.u < e.v) ? std::pair(e.u, e.v)
                                          : std::pair(e.v, e.u);
    if (!edge_set_.insert(key).second) {
      throw ParseError(no, "duplicate edge " + e.u + " " + e.v);
    }
    edges_.push_back(std::move(e));
  }

  void add_commodity(std::size_t no, const std::vector<std::string>& tok) {
    if (!is_valid_name(tok[1])) {
      throw ParseError(no, "invalid commodity id '" + tok[1] + "'");
    }
    if (!commodity_set_.insert(tok[1]).second) {
      throw ParseError(no, "duplicate commodity '" + tok[1] + "'");
    }
    require_node(no, tok[2]);
    require_node(no, tok[3]);
    if (tok[2] == tok[3]) {
      throw ParseError(no, "commodity '" + tok[1] + "' has equal source and sink");
    }
    commodities_.push_back({tok[1], tok[2], tok[3]});
  }

  std::optional<bool> directed_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<Commodity> commodities_;
  std::set<std::string> node_set_;
  std::set<std::pair<std::string, std::string>> edge_set_;
  std::set<std::string> commodity_set_;
};

}  // namespace

Network parse_network(std::string_view text) {
  NetworkReader reader;
  std::size_t no = 0;
  while (!text.empty()) {
    ++no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto tok = tokenize(line);
    if (!tok.empty()) reader.line(no, tok);
  }
  return reader.finish();
}

std::string serialize_network(const Network& network) {
  std::ostringstream out;
  out << "directed " << (network.directed() ? 1 : 0) << "\n";
  if (!network.nodes().empty()) {
    out << "nodes";
    for (const auto& n : network.nodes()) out << ' ' << n;
    out << "\n";
  }
  for (const Edge& e : network.edges()) {
    out << "edge " << e.u << ' ' << e.v;
    if (e.capacity != Rational(1)) out << ' ' << e.capacity;
    out << "\n";
  }
  for (const Commodity& c : network.commodities()) {
    out << "commodity " << c.id << ' ' << c.source << ' ' << c.sink << "\n";
  }
  return out.str();
}

}  // namespace kpairs

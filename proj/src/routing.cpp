#include "kpairs/routing.hpp"

#include <stdexcept>

namespace kpairs {

ConcurrentFlowLp build_concurrent_flow_lp(const Network& network) {
  ConcurrentFlowLp out;
  if (network.directed()) {
    for (const Edge& e : network.edges()) out.arcs.push_back({e.u, e.v});
  } else {
    out.arcs = network.directed_expansion().arcs;
  }

  LinearProgram& lp = out.lp;
  for (const Commodity& c : network.commodities()) {
    for (const Arc& a : out.arcs) {
      out.flow_var[{c.id, a}] =
          lp.add_variable("f_" + c.id + "_" + a.tail + "_" + a.head);
    }
  }
  out.rate_var = lp.add_variable("r");

  for (const Commodity& c : network.commodities()) {
    for (const NodeId& node : network.nodes()) {
      LinearForm net_out;
      for (const Arc& a : out.arcs) {
        const std::size_t var = out.flow_var.at({c.id, a});
        if (a.tail == node) net_out[var] += Rational(1);
        if (a.head == node) net_out[var] -= Rational(1);
      }
      const std::string name = "flow_" + c.id + "_" + node;
      if (node == c.source) {
        net_out[out.rate_var] = Rational(-1);
        lp.add_constraint(name, std::move(net_out), Relation::kEqual, 0);
      } else if (node == c.sink) {
        LinearForm net_in;
        for (auto& [var, coeff] : net_out) net_in[var] = -coeff;
        net_in[out.rate_var] = Rational(-1);
        lp.add_constraint(name, std::move(net_in), Relation::kEqual, 0);
      } else {
        lp.add_constraint(name, std::move(net_out), Relation::kEqual, 0);
      }
    }
  }

  for (const Edge& e : network.edges()) {
    LinearForm load;
    for (const Commodity& c : network.commodities()) {
      load[out.flow_var.at({c.id, Arc{e.u, e.v}})] = Rational(1);
      if (!network.directed()) {
        load[out.flow_var.at({c.id, Arc{e.v, e.u}})] = Rational(1);
      }
    }
    out.capacity_rows.push_back(lp.add_constraint(
        "cap_" + e.u + "_" + e.v, std::move(load), Relation::kLessEqual,
        e.capacity));
  }

  lp.set_objective({{out.rate_var, Rational(1)}});
  return out;
}

RoutingResult routing_rate(const Network& network) {
  if (network.commodities().empty()) {
    throw NetworkError("routing rate is undefined without commodities");
  }
  ConcurrentFlowLp model = build_concurrent_flow_lp(network);
  RoutingResult result;
  result.solution = simplex_solve(model.lp);
  if (result.solution.status != SimplexStatus::kOptimal) {
    throw std::runtime_error("concurrent flow LP is " +
                             to_string(result.solution.status));
  }
  result.rate = result.solution.value;
  result.scheme.rate = result.rate;
  for (const auto& [key, var] : model.flow_var) {
    const Rational& f = result.solution.primal[var];
    if (!f.is_zero()) result.scheme.flow[key] = f;
  }
  return result;
}

bool verify_scheme(const Network& network, const RoutingScheme& scheme,
                   std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::map<std::pair<std::string, NodeId>, Rational> net_out;
  std::map<std::size_t, Rational> load;
  for (const auto& [key, f] : scheme.flow) {
    const auto& [id, arc] = key;
    if (!network.has_commodity(id)) return fail("unknown commodity " + id);
    if (f.sign() < 0) return fail("negative flow on " + to_string(arc));
    const auto edge = network.find_edge(arc.tail, arc.head);
    if (!edge) return fail("flow on missing arc " + to_string(arc));
    net_out[{id, arc.tail}] += f;
    net_out[{id, arc.head}] -= f;
    load[*edge] += f;
  }
  for (const auto& [edge, total] : load) {
    if (total > network.edges()[edge].capacity) {
      const Edge& e = network.edges()[edge];
      return fail("edge " + e.u + " " + e.v + " carries " + total.str());
    }
  }
  for (const Commodity& c : network.commodities()) {
    for (const NodeId& node : network.nodes()) {
      auto it = net_out.find({c.id, node});
      const Rational value = it == net_out.end() ? Rational() : it->second;
      const Rational expected = node == c.source ? scheme.rate
                                : node == c.sink ? -scheme.rate
                                                 : Rational();
      if (value != expected) {
        return fail("commodity " + c.id + " is not conserved at " + node);
      }
    }
  }
  return true;
}

}  // namespace kpairs

#include "kpairs/entropy.hpp"

#include <algorithm>
#include <sstream>

namespace kpairs {

std::string to_string(const InfoVar& v) {
  if (v.kind == InfoVar::Kind::kMessage) return "msg:" + v.commodity;
  return "arc:" + to_string(v.arc);
}

InfoVar parse_info_var(std::string_view token) {
  auto bad = [&] {
    return CertificateError("malformed variable '" + std::string(token) + "'");
  };
  if (token.starts_with("msg:")) {
    const auto id = token.substr(4);
    if (!is_valid_name(id)) throw bad();
    return InfoVar::message(std::string(id));
  }
  if (token.starts_with("arc:")) {
    const auto body = token.substr(4);
    const auto gt = body.find('>');
    if (gt == std::string_view::npos) throw bad();
    const auto tail = body.substr(0, gt);
    const auto head = body.substr(gt + 1);
    if (!is_valid_name(tail) || !is_valid_name(head)) throw bad();
    return InfoVar::of_arc({std::string(tail), std::string(head)});
  }
  throw bad();
}

std::string to_string(const VarSet& set) {
  if (set.empty()) return "{}";
  std::string out;
  for (const InfoVar& v : set) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

VarSet parse_var_set(std::string_view token) {
  VarSet out;
  if (token == "{}") return out;
  while (true) {
    const auto comma = token.find(',');
    const auto piece = token.substr(0, comma);
    if (!out.insert(parse_info_var(piece)).second) {
      throw CertificateError("repeated variable '" + std::string(piece) + "'");
    }
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  return out;
}

VarSet messages(const CommodityIds& ids) {
  VarSet out;
  for (const auto& id : ids) out.insert(InfoVar::message(id));
  return out;
}

VarSet arcs(const ArcSet& arcs) {
  VarSet out;
  for (const auto& a : arcs) out.insert(InfoVar::of_arc(a));
  return out;
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VarSet set_intersection(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

void EntropyExpr::add_entropy(const VarSet& vars, const Rational& coeff) {
  if (vars.empty() || coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(vars, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EntropyExpr::add_rate(const std::string& commodity, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = rates_.emplace(commodity, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) rates_.erase(it);
  }
}

void EntropyExpr::add_constant(const Rational& c) { constant_ += c; }

EntropyExpr& EntropyExpr::operator+=(const EntropyExpr& other) {
  for (const auto& [vars, c] : other.terms_) add_entropy(vars, c);
  for (const auto& [id, c] : other.rates_) add_rate(id, c);
  constant_ += other.constant_;
  return *this;
}

EntropyExpr& EntropyExpr::operator-=(const EntropyExpr& other) {
  EntropyExpr negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

EntropyExpr& EntropyExpr::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    *this = EntropyExpr{};
    return *this;
  }
  for (auto& [vars, c] : terms_) c *= factor;
  for (auto& [id, c] : rates_) c *= factor;
  constant_ *= factor;
  return *this;
}

bool EntropyExpr::is_zero() const {
  return terms_.empty() && rates_.empty() && constant_.is_zero();
}

Rational EntropyExpr::entropy_coefficient(const VarSet& vars) const {
  auto it = terms_.find(vars);
  return it == terms_.end() ? Rational() : it->second;
}

std::string to_string(const EntropyExpr& expr) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& what) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational mag = abs(c);
    if (what.empty()) {
      out << mag;
    } else {
      if (mag != Rational(1)) out << mag << " ";
      out << what;
    }
    first = false;
  };
  for (const auto& [vars, c] : expr.terms()) {
    std::string h = "H(";
    bool sep = false;
    for (const InfoVar& v : vars) {
      if (sep) h += ", ";
      h += to_string(v);
      sep = true;
    }
    emit(c, h + ")");
  }
  for (const auto& [id, c] : expr.rates()) emit(c, "r_" + id);
  if (!expr.constant().is_zero()) emit(expr.constant(), "");
  if (first) out << "0";
  return out.str();
}

std::string_view axiom_name(const Axiom& axiom) {
  struct Name {
    std::string_view operator()(const Monotonicity&) const { return "monotonicity"; }
    std::string_view operator()(const Submodularity&) const { return "submodularity"; }
    std::string_view operator()(const Subadditivity&) const { return "subadditivity"; }
    std::string_view operator()(const GeneralizedSubmodularity&) const {
      return "generalized_submodularity";
    }
    std::string_view operator()(const InputOutput&) const { return "input_output"; }
    std::string_view operator()(const Functional&) const { return "functional"; }
    std::string_view operator()(const Independence&) const { return "independence"; }
    std::string_view operator()(const CapacityAxiom&) const { return "capacity"; }
    std::string_view operator()(const RateAxiom&) const { return "rate"; }
  };
  return std::visit(Name{}, axiom);
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::kEdgeLocal: return "edge_local";
    case Justification::kSinkDecoding: return "sink_decoding";
    case Justification::kSourceOut: return "source_out";
  }
  return "?";
}

namespace {

void require_vars(const Network& n, const VarSet& vars) {
  for (const InfoVar& v : vars) {
    if (v.kind == InfoVar::Kind::kMessage) {
      if (!n.has_commodity(v.commodity)) {
        throw CertificateError("unknown message variable " + to_string(v));
      }
    } else if (!n.has_arc(v.arc)) {
      throw CertificateError("unknown arc variable " + to_string(v));
    }
  }
}

void require_subset(const VarSet& needed, const VarSet& given,
                    const std::string& what) {
  for (const InfoVar& v : needed) {
    if (!given.count(v)) {
      throw CertificateError(what + ": conditioning set lacks " + to_string(v));
    }
  }
}

struct Expander {
  const Network& n;

  EntropyExpr operator()(const Monotonicity& a) const {
    require_vars(n, a.subset);
    require_vars(n, a.superset);
    require_subset(a.subset, a.superset, "monotonicity");
    EntropyExpr e;
    e.add_entropy(a.subset, 1);
    e.add_entropy(a.superset, -1);
    return e;
  }

  EntropyExpr operator()(const Submodularity& a) const {
    require_vars(n, a.a);
    require_vars(n, a.b);
    EntropyExpr e;
    e.add_entropy(set_union(a.a, a.b), 1);
    e.add_entropy(set_intersection(a.a, a.b), 1);
    e.add_entropy(a.a, -1);
    e.add_entropy(a.b, -1);
    return e;
  }

  EntropyExpr operator()(const Subadditivity& a) const {
    require_vars(n, a.a);
    require_vars(n, a.b);
    EntropyExpr e;
    e.add_entropy(set_union(a.a, a.b), 1);
    e.add_entropy(a.a, -1);
    e.add_entropy(a.b, -1);
    return e;
  }

  EntropyExpr operator()(const GeneralizedSubmodularity& a) const {
    if (a.sets.empty()) {
      throw CertificateError("generalized_submodularity needs at least one set");
    }
    VarSet all, shared;
    EntropyExpr e;
    for (std::size_t i = 0; i < a.sets.size(); ++i) {
      require_vars(n, a.sets[i]);
      all = set_union(all, a.sets[i]);
      for (std::size_t j = i + 1; j < a.sets.size(); ++j) {
        shared = set_union(shared, set_intersection(a.sets[i], a.sets[j]));
      }
      e.add_entropy(a.sets[i], -1);
    }
    e.add_entropy(all, 1);
    e.add_entropy(shared, 1);
    return e;
  }

  EntropyExpr operator()(const InputOutput& a) const {
    if (a.nodes.empty()) throw CertificateError("input_output needs nodes");
    for (const auto& node : a.nodes) {
      if (!n.has_node(node)) {
        throw CertificateError("input_output: unknown node '" + node + "'");
      }
    }
    const VarSet inputs =
        set_union(arcs(n.in_set(a.nodes)), messages(n.sources_in(a.nodes)));
    const VarSet outputs =
        set_union(arcs(n.out_set(a.nodes)), messages(n.sinks_in(a.nodes)));
    EntropyExpr e;
    e.add_entropy(set_union(inputs, outputs), 1);
    e.add_entropy(inputs, -1);
    return e;
  }

  EntropyExpr operator()(const Functional& a) const {
    require_vars(n, {a.target});
    require_vars(n, a.given);
    const std::string what =
        "functional " + to_string(a.target) + " (" +
        std::string(to_string(a.justification)) + ")";
    switch (a.justification) {
      case Justification::kEdgeLocal: {
        if (a.target.kind != InfoVar::Kind::kArc) {
          throw CertificateError(what + ": target must be an arc");
        }
        const NodeSet tail{a.target.arc.tail};
        require_subset(set_union(arcs(n.in_set(tail)),
                                 messages(n.sources_in(tail))),
                       a.given, what);
        break;
      }
      case Justification::kSinkDecoding: {
        if (a.target.kind != InfoVar::Kind::kMessage) {
          throw CertificateError(what + ": target must be a message");
        }
        const NodeSet sink{n.commodity(a.target.commodity).sink};
        require_subset(set_union(arcs(n.in_set(sink)),
                                 messages(n.sources_in(sink))),
                       a.given, what);
        break;
      }
      case Justification::kSourceOut: {
        if (a.target.kind != InfoVar::Kind::kMessage) {
          throw CertificateError(what + ": target must be a message");
        }
        const NodeSet source{n.commodity(a.target.commodity).source};
        require_subset(arcs(n.out_set(source)), a.given, what);
        break;
      }
    }
    VarSet with_target = a.given;
    with_target.insert(a.target);
    EntropyExpr e;
    e.add_entropy(with_target, 1);
    e.add_entropy(a.given, -1);
    return e;
  }

  EntropyExpr operator()(const Independence& a) const {
    require_vars(n, a.messages);
    for (const InfoVar& v : a.messages) {
      if (v.kind != InfoVar::Kind::kMessage) {
        throw CertificateError("independence applies to messages only, got " +
                               to_string(v));
      }
    }
    const Rational s = a.direction == Direction::kLessEqual ? 1 : -1;
    EntropyExpr e;
    e.add_entropy(a.messages, s);
    for (const InfoVar& v : a.messages) e.add_entropy({v}, -s);
    return e;
  }

  EntropyExpr operator()(const CapacityAxiom& a) const {
    const auto idx = n.find_edge(a.u, a.v);
    if (!idx) {
      throw CertificateError("capacity: no edge " + a.u + " " + a.v);
    }
    const Edge& edge = n.edges()[*idx];
    EntropyExpr e;
    e.add_entropy({InfoVar::of_arc({edge.u, edge.v})}, 1);
    if (!n.directed()) e.add_entropy({InfoVar::of_arc({edge.v, edge.u})}, 1);
    e.add_constant(-edge.capacity);
    return e;
  }

  EntropyExpr operator()(const RateAxiom& a) const {
    if (!n.has_commodity(a.commodity)) {
      throw CertificateError("rate: unknown commodity '" + a.commodity + "'");
    }
    EntropyExpr e;
    e.add_rate(a.commodity, 1);
    e.add_entropy({InfoVar::message(a.commodity)}, -1);
    return e;
  }
};

}  // namespace

EntropyExpr expand_axiom(const Network& network, const Axiom& axiom) {
  return std::visit(Expander{network}, axiom);
}

}  // namespace kpairs

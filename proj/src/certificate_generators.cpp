// Certificate generators. Each one replays a hand-structured proof chain as a
// list of axiom steps whose weighted sum telescopes to the target bound.

#include <algorithm>
#include <string>

#include "kpairs/certificate.hpp"

namespace kpairs {

namespace {

InfoVar msg(const std::string& id) { return InfoVar::message(id); }
InfoVar arc(const std::string& tail, const std::string& head) {
  return InfoVar::of_arc({tail, head});
}

class ChainBuilder {
 public:
  explicit ChainBuilder(Certificate& cert) : cert_(cert) {}

  void add(Axiom axiom, const Rational& coefficient = 1) {
    cert_.steps.push_back({coefficient, std::move(axiom)});
  }

  // H(S) <= sum_{x in S} H(x), as a cascade of two-set subadditivity steps.
  void union_bound(const VarSet& set) {
    VarSet rest = set;
    while (rest.size() > 1) {
      const InfoVar first = *rest.begin();
      rest.erase(rest.begin());
      add(Subadditivity{{first}, rest});
    }
  }

 private:
  Certificate& cert_;
};

// Input side and full side of the input-output inequality at one node.
struct NodeSides {
  VarSet inputs;
  VarSet all;
};

NodeSides sides(const Network& n, const NodeId& node) {
  const NodeSet u{node};
  NodeSides s;
  s.inputs = set_union(arcs(n.in_set(u)), messages(n.sources_in(u)));
  s.all = set_union(s.inputs, set_union(arcs(n.out_set(u)),
                                         messages(n.sinks_in(u))));
  return s;
}

}  // namespace

Certificate gen_certificate_n1(int k) {
  if (k < 2) throw CertificateError("gen_certificate_n1 requires k >= 2");
  Certificate cert;
  cert.network = "n1_k" + std::to_string(k);
  ChainBuilder chain(cert);
  const InfoVar bottleneck = arc("u", "v");
  auto id = [](int i) { return std::to_string(i); };

  // Sinks decode in the order t(k), t(k-1), ..., t(1); each step adds one
  // message to the set known from the bottleneck arc and later messages.
  VarSet known{bottleneck};
  for (int i = k; i >= 1; --i) {
    const std::string sink = "t" + std::to_string(i);
    VarSet given = known;
    chain.add(Functional{arc("v", sink), given, Justification::kEdgeLocal});
    given.insert(arc("v", sink));
    for (int j = i + 1; j <= k; ++j) {
      const InfoVar cross = arc("s" + std::to_string(j), sink);
      chain.add(Functional{cross, given, Justification::kEdgeLocal});
      given.insert(cross);
    }
    chain.add(Functional{msg(id(i)), given, Justification::kSinkDecoding});
    given.insert(msg(id(i)));
    VarSet next = known;
    next.insert(msg(id(i)));
    chain.add(Monotonicity{next, given});
    known = next;
  }

  VarSet all_messages;
  for (int i = 1; i <= k; ++i) all_messages.insert(msg(id(i)));
  chain.add(Monotonicity{all_messages, known});
  chain.add(Independence{all_messages, Direction::kGreaterEqual});
  for (int i = 1; i <= k; ++i) chain.add(RateAxiom{id(i)});
  chain.add(CapacityAxiom{"u", "v"});

  for (int i = 1; i <= k; ++i) cert.target.alpha[id(i)] = 1;
  cert.target.bound = 1;
  return cert;
}

Certificate gen_certificate_hu() {
  const Network n = gen_hu();
  Certificate cert;
  cert.network = "hu";
  ChainBuilder chain(cert);

  const VarSet all_arcs = arcs(ArcSet(n.arcs().begin(), n.arcs().end()));
  auto without = [&](std::initializer_list<InfoVar> drop) {
    VarSet out = all_arcs;
    for (const InfoVar& v : drop) out.erase(v);
    return out;
  };
  auto in_arcs = [&](const NodeId& node) { return arcs(n.in_set({node})); };
  auto with = [](VarSet base, std::initializer_list<InfoVar> extra) {
    base.insert(extra.begin(), extra.end());
    return base;
  };
  const VarSet sources{msg("a"), msg("b"), msg("g")};

  // First half: nodes g, h, then b's outgoing arcs, f, and decoding at c.
  // Ends at H(a) + 2H(b) + H(g) <= sum of the arcs into g, h and f.
  const VarSet e1 = without({arc("a", "f"), arc("f", "a"), arc("c", "f"),
                             arc("f", "c")});
  chain.add(InputOutput{{"g"}});
  chain.add(InputOutput{{"h"}});
  chain.add(Submodularity{sides(n, "g").all, sides(n, "h").all});
  chain.add(Subadditivity{{msg("g")}, in_arcs("g")});
  chain.add(Functional{msg("b"), with(e1, {msg("g")}),
                       Justification::kSourceOut});
  chain.add(InputOutput{{"f"}});
  chain.add(Submodularity{with(e1, {msg("b"), msg("g")}), sides(n, "f").all});
  chain.add(Functional{msg("a"), with(all_arcs, {msg("b"), msg("g")}),
                       Justification::kSinkDecoding});
  chain.add(Monotonicity{sources, set_union(sources, all_arcs)});
  chain.add(Independence{sources, Direction::kGreaterEqual});
  for (const char* node : {"g", "h", "f"}) chain.union_bound(in_arcs(node));

  // Second half: nodes a, c, decoding at f, node b, decoding at h.
  // Ends at H(a) + H(b) + H(g) <= sum of the arcs into a, c and b.
  const VarSet e2 = without({arc("g", "b"), arc("b", "g"), arc("b", "h"),
                             arc("h", "b")});
  chain.add(InputOutput{{"a"}});
  chain.add(InputOutput{{"c"}});
  chain.add(Submodularity{sides(n, "a").all, sides(n, "c").all});
  chain.add(Subadditivity{{msg("a")}, in_arcs("a")});
  chain.add(Functional{msg("b"), with(e2, {msg("a")}),
                       Justification::kSinkDecoding});
  chain.add(InputOutput{{"b"}});
  chain.add(Submodularity{with(e2, {msg("a"), msg("b")}), sides(n, "b").all});
  chain.add(Subadditivity{{msg("b")}, in_arcs("b")});
  chain.add(Functional{msg("g"), with(all_arcs, {msg("a"), msg("b")}),
                       Justification::kSinkDecoding});
  chain.add(Monotonicity{sources, set_union(sources, all_arcs)});
  chain.add(Independence{sources, Direction::kGreaterEqual});
  for (const char* node : {"a", "c", "b"}) chain.union_bound(in_arcs(node));

  // Close with the coupled capacities and the rates.
  for (const Edge& e : n.edges()) chain.add(CapacityAxiom{e.u, e.v});
  chain.add(RateAxiom{"a"}, 2);
  chain.add(RateAxiom{"b"}, 3);
  chain.add(RateAxiom{"g"}, 2);

  cert.target.alpha = {{"a", 2}, {"b", 3}, {"g", 2}};
  cert.target.bound = 8;
  return cert;
}

Certificate gen_certificate_bipartite(const Network& n) {
  if (n.directed()) {
    throw CertificateError("bipartite certificate needs an undirected network");
  }
  if (n.commodities().empty()) {
    throw CertificateError("bipartite certificate needs commodities");
  }
  const auto parts = bipartition(n);
  if (!parts) throw CertificateError("network is not bipartite");

  Certificate cert;
  cert.network = "bipartite";
  ChainBuilder chain(cert);

  CommodityIds everything;
  for (const Commodity& c : n.commodities()) everything.insert(c.id);
  const VarSet all_messages = messages(everything);

  // For one side P this yields
  //   H(I) + H(I_PP) <= sum_{v in P} H(S(v)) + sum_{arcs into P} H(arc).
  auto side = [&](const NodeSet& part) {
    std::vector<VarSet> node_sets;
    for (const NodeId& v : part) {
      chain.add(InputOutput{{v}});
      const VarSet src = messages(n.sources_in({v}));
      const VarSet in = arcs(n.in_set({v}));
      if (!src.empty() && !in.empty()) chain.add(Subadditivity{src, in});
      node_sets.push_back(sides(n, v).all);
    }
    VarSet known, shared;
    for (std::size_t i = 0; i < node_sets.size(); ++i) {
      known = set_union(known, node_sets[i]);
      for (std::size_t j = i + 1; j < node_sets.size(); ++j) {
        shared = set_union(shared, set_intersection(node_sets[i], node_sets[j]));
      }
    }
    if (node_sets.size() >= 2) chain.add(GeneralizedSubmodularity{node_sets});

    // Every message outside the side's own sets is recovered at its sink,
    // or, failing that, from its source's outgoing arcs.
    std::vector<std::string> pending;
    for (const auto& id : everything) {
      if (!known.count(msg(id))) pending.push_back(id);
    }
    while (!pending.empty()) {
      auto ready = std::find_if(pending.begin(), pending.end(), [&](auto& id) {
        const NodeSet sink{n.commodity(id).sink};
        const VarSet need = set_union(arcs(n.in_set(sink)),
                                      messages(n.sources_in(sink)));
        return std::includes(known.begin(), known.end(), need.begin(),
                             need.end());
      });
      const bool decodable = ready != pending.end();
      if (!decodable) ready = pending.begin();
      chain.add(Functional{msg(*ready), known,
                           decodable ? Justification::kSinkDecoding
                                     : Justification::kSourceOut});
      known.insert(msg(*ready));
      pending.erase(ready);
    }
    if (known != all_messages) chain.add(Monotonicity{all_messages, known});
    if (shared.size() >= 2) {
      chain.add(Independence{shared, Direction::kGreaterEqual});
    }
    for (const NodeId& v : part) chain.union_bound(arcs(n.in_set({v})));
    return shared;
  };

  const VarSet shared_first = side(parts->first);
  const VarSet shared_second = side(parts->second);

  if (all_messages.size() >= 2) {
    chain.add(Independence{all_messages, Direction::kGreaterEqual}, 2);
  }
  for (const NodeId& v : n.nodes()) {
    const VarSet src = messages(n.sources_in({v}));
    if (src.size() >= 2) chain.add(Independence{src, Direction::kLessEqual});
  }
  Rational capacity;
  for (const Edge& e : n.edges()) {
    chain.add(CapacityAxiom{e.u, e.v});
    capacity += e.capacity;
  }
  for (const Commodity& c : n.commodities()) {
    Rational alpha = 1;
    if (shared_first.count(msg(c.id))) alpha += 1;
    if (shared_second.count(msg(c.id))) alpha += 1;
    chain.add(RateAxiom{c.id}, alpha);
    cert.target.alpha[c.id] = alpha;
  }
  cert.target.bound = capacity;
  return cert;
}

}  // namespace kpairs

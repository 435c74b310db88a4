#include "kpairs/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <thread>

namespace kpairs {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskBits = 62;

// Node/edge indices of a network, with adjacency listing the edge carrying
// each hop so removed edges can be skipped by bitmask.
struct IndexedGraph {
  explicit IndexedGraph(const Network& network)
      : node_count(network.nodes().size()), adj(node_count) {
    const auto& edges = network.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::size_t u = network.node_index(edges[e].u);
      const std::size_t v = network.node_index(edges[e].v);
      adj[u].push_back({v, e});
      if (!network.directed()) adj[v].push_back({u, e});
    }
    for (const Commodity& c : network.commodities()) {
      source.push_back(network.node_index(c.source));
      sink.push_back(network.node_index(c.sink));
    }
  }

  struct Hop {
    std::size_t to;
    std::size_t edge;
  };

  // Fills `seen` with the nodes reachable from `from` avoiding removed edges.
  void reach(std::size_t from, Mask removed, std::vector<char>& seen,
             std::vector<std::size_t>& stack) const {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    stack.push_back(from);
    seen[from] = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const Hop& h : adj[x]) {
        if ((removed >> h.edge) & 1U) continue;
        if (!seen[h.to]) {
          seen[h.to] = 1;
          stack.push_back(h.to);
        }
      }
    }
  }

  std::size_t node_count;
  std::vector<std::vector<Hop>> adj;
  std::vector<std::size_t> source;
  std::vector<std::size_t> sink;
};

Mask to_mask(const Network& network, const EdgeSet& edges) {
  if (network.edges().size() > kMaxMaskBits) {
    throw EnumerationCapExceeded("more than " + std::to_string(kMaxMaskBits) +
                                 " edges");
  }
  Mask m = 0;
  for (std::size_t e : edges) {
    if (e >= network.edges().size()) {
      throw NetworkError("edge index " + std::to_string(e) + " out of range");
    }
    m |= Mask{1} << e;
  }
  return m;
}

EdgeSet from_mask(Mask m) {
  EdgeSet out;
  for (std::size_t e = 0; m; ++e, m >>= 1) {
    if (m & 1U) out.insert(e);
  }
  return out;
}

// Capacities rescaled to integers by their common denominator.
struct IntegerWeights {
  explicit IntegerWeights(const Network& network) {
    mpz_class den = 1;
    for (const Edge& e : network.edges()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              e.capacity.denominator().get_mpz_t());
    }
    mpz_class total = 0;
    for (const Edge& e : network.edges()) {
      mpz_class w = e.capacity.numerator() * (den / e.capacity.denominator());
      total += w;
      weight.push_back(w.get_si());
    }
    if (!total.fits_slong_p()) {
      throw EnumerationCapExceeded("edge capacities too large to enumerate");
    }
    scale = Rational(mpq_class(den));
  }

  std::int64_t of(Mask m) const {
    std::int64_t sum = 0;
    for (std::size_t e = 0; m; ++e, m >>= 1) {
      if (m & 1U) sum += weight[e];
    }
    return sum;
  }

  std::vector<std::int64_t> weight;
  Rational scale;
};

struct Candidate {
  bool valid = false;
  std::int64_t weight = 0;
  int group = 0;  // |J|
  Mask edges = 0;
  Mask commodities = 0;
};

// Lexicographic comparison of the ascending index lists of two edge masks.
bool lex_less(Mask a, Mask b) {
  while (a && b) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const __int128 lhs = static_cast<__int128>(a.weight) * b.group;
  const __int128 rhs = static_cast<__int128>(b.weight) * a.group;
  if (lhs != rhs) return lhs < rhs;
  const int pa = std::popcount(a.edges), pb = std::popcount(b.edges);
  if (pa != pb) return pa < pb;
  return lex_less(a.edges, b.edges);
}

// Next mask with the same popcount (Gosper's hack); 0 once past `limit`.
Mask next_combination(Mask m, Mask limit) {
  if (m == 0) return 0;
  const Mask low = m & -m;
  const Mask ripple = m + low;
  const Mask next = (((ripple ^ m) >> 2) / low) | ripple;
  return next < limit ? next : 0;
}

// Exact branch and bound over edge subsets, level by level in |A|. A level
// is skipped entirely once even its lightest subset, divided by the largest
// possible group, cannot beat the incumbent; ties at larger |A| lose anyway.
template <typename Evaluate>
Candidate search(const IntegerWeights& w, std::size_t edge_count,
                 std::size_t max_group, unsigned jobs, Evaluate evaluate) {
  const Mask limit = Mask{1} << edge_count;
  std::vector<std::int64_t> sorted = w.weight;
  std::sort(sorted.begin(), sorted.end());
  jobs = std::max(1U, jobs);

  Candidate best;
  std::int64_t lightest = 0;
  for (std::size_t size = 0; size <= edge_count; ++size) {
    if (size > 0) lightest += sorted[size - 1];
    if (best.valid && static_cast<__int128>(lightest) * best.group >=
                          static_cast<__int128>(best.weight) *
                              static_cast<std::int64_t>(max_group)) {
      break;
    }
    std::vector<Candidate> local(jobs, best);
    auto worker = [&](unsigned id) {
      auto state = evaluate.make_state();
      std::uint64_t counter = 0;
      const Mask first = size == 0 ? 0 : (Mask{1} << size) - 1;
      for (Mask m = first;; m = next_combination(m, limit), ++counter) {
        if (counter % jobs == id) {
          const Candidate& inc = local[id];
          const bool hopeless =
              inc.valid && static_cast<__int128>(w.of(m)) * inc.group >
                               static_cast<__int128>(inc.weight) *
                                   static_cast<std::int64_t>(max_group);
          if (!hopeless) {
            Candidate c = evaluate(m, state, inc);
            if (better(c, local[id])) local[id] = c;
          }
        }
        if (m == 0 || next_combination(m, limit) == 0) break;
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
      for (auto& t : threads) t.join();
    }
    for (const Candidate& c : local) {
      if (better(c, best)) best = c;
    }
  }
  return best;
}

CommodityIds commodity_ids(const Network& network, Mask m) {
  CommodityIds out;
  for (std::size_t i = 0; i < network.commodities().size(); ++i) {
    if ((m >> i) & 1U) out.insert(network.commodities()[i].id);
  }
  return out;
}

CutReport to_report(const Network& network, const IntegerWeights& w,
                    const Candidate& c) {
  CutReport r;
  r.value = Rational(c.weight) / (w.scale * Rational(c.group));
  r.witness_edges = from_mask(c.edges);
  r.witness_commodities = commodity_ids(network, c.commodities);
  return r;
}

struct Scratch {
  std::vector<char> seen;
  std::vector<std::size_t> stack;
};

}  // namespace

bool separates(const Network& network, const EdgeSet& removed,
               std::string_view commodity) {
  const Commodity& c = network.commodity(commodity);
  IndexedGraph g(network);
  std::vector<char> seen(g.node_count);
  std::vector<std::size_t> stack;
  g.reach(network.node_index(c.source), to_mask(network, removed), seen, stack);
  return !seen[network.node_index(c.sink)];
}

bool isolates(const Network& network, const EdgeSet& removed,
              const CommodityIds& group) {
  if (!network.directed()) {
    throw NetworkError("isolation is defined for directed networks only");
  }
  const Mask m = to_mask(network, removed);
  IndexedGraph g(network);
  std::vector<char> seen(g.node_count);
  std::vector<std::size_t> stack;
  for (const auto& i : group) {
    g.reach(network.node_index(network.commodity(i).source), m, seen, stack);
    for (const auto& j : group) {
      if (seen[network.node_index(network.commodity(j).sink)]) return false;
    }
  }
  return true;
}

CutReport sparsity(const Network& network, EnumerationOptions options) {
  const std::size_t edge_count = network.edges().size();
  const std::size_t k = network.commodities().size();
  if (k == 0) throw NetworkError("sparsity needs at least one commodity");
  if (edge_count > options.max_edges || edge_count > kMaxMaskBits) {
    throw EnumerationCapExceeded(
        "sparsity enumeration cap exceeded: " + std::to_string(edge_count) +
        " edges > cap " + std::to_string(options.max_edges));
  }
  if (k > options.max_commodities || k > 64) {
    throw EnumerationCapExceeded(
        "sparsity enumeration cap exceeded: " + std::to_string(k) +
        " commodities > cap " + std::to_string(options.max_commodities));
  }
  const IndexedGraph g(network);
  const IntegerWeights w(network);

  struct Eval {
    const IndexedGraph& g;
    const IntegerWeights& w;
    Scratch make_state() const {
      return {std::vector<char>(g.node_count), {}};
    }
    Candidate operator()(Mask m, Scratch& s, const Candidate&) const {
      Mask separated = 0;
      int count = 0;
      for (std::size_t i = 0; i < g.source.size(); ++i) {
        g.reach(g.source[i], m, s.seen, s.stack);
        if (!s.seen[g.sink[i]]) {
          separated |= Mask{1} << i;
          ++count;
        }
      }
      if (count == 0) return {};
      return {true, w.of(m), count, m, separated};
    }
  };
  const Candidate best = search(w, edge_count, k, options.jobs, Eval{g, w});
  return to_report(network, w, best);
}

CutReport meagerness(const Network& network, EnumerationOptions options) {
  if (!network.directed()) {
    throw NetworkError("meagerness is defined for directed networks only");
  }
  const std::size_t edge_count = network.edges().size();
  const std::size_t k = network.commodities().size();
  if (k == 0) throw NetworkError("meagerness needs at least one commodity");
  if (edge_count > options.max_edges || edge_count > kMaxMaskBits) {
    throw EnumerationCapExceeded(
        "meagerness enumeration cap exceeded: " + std::to_string(edge_count) +
        " edges > cap " + std::to_string(options.max_edges));
  }
  if (k > options.max_commodities || k > 20) {
    throw EnumerationCapExceeded(
        "meagerness enumeration cap exceeded: " + std::to_string(k) +
        " commodities > cap " + std::to_string(options.max_commodities));
  }
  const IndexedGraph g(network);
  const IntegerWeights w(network);

  // Commodity subsets, largest first; ties in ascending mask order.
  std::vector<Mask> groups((Mask{1} << k) - 1);
  std::iota(groups.begin(), groups.end(), Mask{1});
  std::stable_sort(groups.begin(), groups.end(), [](Mask a, Mask b) {
    return std::popcount(a) > std::popcount(b);
  });

  struct State {
    Scratch scratch;
    std::vector<Mask> reaches;  // reaches[i]: sinks t(j) reachable from s(i)
  };
  struct Eval {
    const IndexedGraph& g;
    const IntegerWeights& w;
    const std::vector<Mask>& groups;
    State make_state() const {
      return {{std::vector<char>(g.node_count), {}},
              std::vector<Mask>(g.source.size())};
    }
    Candidate operator()(Mask m, State& s, const Candidate& incumbent) const {
      const std::size_t k = g.source.size();
      Mask eligible = 0;
      for (std::size_t i = 0; i < k; ++i) {
        g.reach(g.source[i], m, s.scratch.seen, s.scratch.stack);
        Mask r = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (s.scratch.seen[g.sink[j]]) r |= Mask{1} << j;
        }
        s.reaches[i] = r;
        if (!((r >> i) & 1U)) eligible |= Mask{1} << i;
      }
      if (!eligible) return {};
      const std::int64_t weight = w.of(m);
      // Even the largest conceivable group cannot beat the incumbent.
      if (incumbent.valid &&
          static_cast<__int128>(weight) * incumbent.group >
              static_cast<__int128>(incumbent.weight) *
                  std::popcount(eligible)) {
        return {};
      }
      for (Mask group : groups) {
        if (group & ~eligible) continue;
        bool ok = true;
        for (Mask rest = group; rest && ok; rest &= rest - 1) {
          ok = (s.reaches[std::countr_zero(rest)] & group) == 0;
        }
        if (ok) return {true, weight, std::popcount(group), m, group};
      }
      return {};
    }
  };
  const Candidate best =
      search(w, edge_count, k, options.jobs, Eval{g, w, groups});
  return to_report(network, w, best);
}

DistanceTable::DistanceTable(const Network& network)
    : nodes_(network.nodes()) {
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) index_[nodes_[i]] = i;
  const IndexedGraph g(network);
  d_.assign(n, std::vector<std::optional<int>>(n));
  for (std::size_t from = 0; from < n; ++from) {
    std::deque<std::size_t> queue{from};
    d_[from][from] = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& hop : g.adj[x]) {
        if (!d_[from][hop.to]) {
          d_[from][hop.to] = *d_[from][x] + 1;
          queue.push_back(hop.to);
        }
      }
    }
  }
}

std::optional<int> DistanceTable::distance(std::string_view from,
                                           std::string_view to) const {
  auto a = index_.find(std::string(from));
  auto b = index_.find(std::string(to));
  if (a == index_.end() || b == index_.end()) {
    throw NetworkError("unknown node in distance query");
  }
  return d_[a->second][b->second];
}

DistanceTable distance_table(const Network& network) {
  return DistanceTable(network);
}

Rational wiener_bound(const Network& network) {
  if (network.directed()) {
    throw NetworkError("the Wiener bound is defined for undirected networks");
  }
  if (network.commodities().empty()) {
    throw NetworkError("the Wiener bound needs at least one commodity");
  }
  const DistanceTable table(network);
  long total_distance = 0;
  for (const Commodity& c : network.commodities()) {
    const auto d = table.distance(c.source, c.sink);
    if (!d) {
      throw NetworkError("commodity '" + c.id + "' endpoints are disconnected");
    }
    total_distance += *d;
  }
  Rational capacity;
  for (const Edge& e : network.edges()) capacity += e.capacity;
  return capacity / Rational(total_distance);
}

}  // namespace kpairs

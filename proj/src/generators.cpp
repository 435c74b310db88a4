#include <algorithm>
#include <string>
#include <vector>

#include "kpairs/network.hpp"

namespace kpairs {

Network gen_n1(int k) {
  if (k < 2) throw NetworkError("gen_n1 requires k >= 2");
  auto s = [](int i) { return "s" + std::to_string(i); };
  auto t = [](int i) { return "t" + std::to_string(i); };

  std::vector<NodeId> nodes;
  for (int i = 1; i <= k; ++i) nodes.push_back(s(i));
  nodes.push_back("u");
  nodes.push_back("v");
  for (int i = 1; i <= k; ++i) nodes.push_back(t(i));

  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({s(i), "u"});
  edges.push_back({"u", "v"});
  for (int i = 1; i <= k; ++i) edges.push_back({"v", t(i)});
  // Every sink t(i) also hears every later source s(j), j > i.
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.push_back({s(j), t(i)});
  }

  std::vector<Commodity> commodities;
  for (int i = 1; i <= k; ++i) {
    commodities.push_back({std::to_string(i), s(i), t(i)});
  }
  return Network(true, std::move(nodes), std::move(edges),
                 std::move(commodities));
}

Network gen_hu() {
  std::vector<NodeId> nodes{"a", "b", "c", "g", "h", "f"};
  std::vector<Edge> edges{{"a", "g"}, {"b", "g"}, {"c", "g"}, {"a", "h"},
                          {"b", "h"}, {"c", "h"}, {"a", "f"}, {"c", "f"}};
  std::vector<Commodity> commodities{
      {"a", "a", "c"}, {"b", "b", "f"}, {"g", "g", "h"}};
  return Network(false, std::move(nodes), std::move(edges),
                 std::move(commodities));
}

Network gen_bipartite(BipartiteType type, int m, int n) {
  if (m < 2 || n < 2) throw NetworkError("gen_bipartite requires m, n >= 2");
  std::vector<NodeId> left, right;
  for (int i = 1; i <= m; ++i) left.push_back("v" + std::to_string(i));
  for (int j = 1; j <= n; ++j) right.push_back("w" + std::to_string(j));

  std::vector<NodeId> nodes = left;
  nodes.insert(nodes.end(), right.begin(), right.end());

  std::vector<Edge> edges;
  for (const auto& x : left) {
    for (const auto& y : right) edges.push_back({x, y});
  }

  std::vector<Commodity> commodities;
  auto add_pairs = [&](std::vector<NodeId> part) {
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        commodities.push_back({part[i] + "_" + part[j], part[i], part[j]});
      }
    }
  };
  if (type == BipartiteType::kTypeI) {
    add_pairs(left);
    add_pairs(right);
  } else {
    add_pairs(nodes);
  }
  return Network(false, std::move(nodes), std::move(edges),
                 std::move(commodities));
}

}  // namespace kpairs

#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "rng.hpp"

namespace submax {

GraphInstance graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphInstance g;
  g.n = n;
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adjacency[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  g.edge_count = 0;
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count += static_cast<std::int64_t>(nbrs.size());
  }
  g.edge_count /= 2;
  g.original_ids.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.original_ids[static_cast<std::size_t>(i)] = i;
  return g;
}

GraphInstance load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);

  std::unordered_map<std::int64_t, int> remap;
  std::vector<std::int64_t> original;
  std::vector<std::pair<int, int>> edges;

  auto intern = [&](std::int64_t id) {
    auto [it, inserted] = remap.emplace(id, static_cast<int>(original.size()));
    if (inserted) original.push_back(id);
    return it->second;
  };

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream fields(line);
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
      throw IoError(path + ":" + std::to_string(line_no) + ": expected two non-negative node ids, got '" +
                    line + "'");
    }
    // Sequenced separately: dense ids follow first appearance in reading
    // order, which unsequenced argument evaluation would not guarantee.
    const int iu = intern(u);
    const int iv = intern(v);
    edges.emplace_back(iu, iv);
  }
  if (in.bad()) throw IoError("read failure on " + path);
  if (original.empty()) throw IoError(path + ": empty graph (no nodes)");

  GraphInstance g = graph_from_edges(static_cast<int>(original.size()), edges);
  g.original_ids = std::move(original);
  return g;
}

GraphInstance random_graph(int n, std::int64_t edges, std::uint64_t seed) {
  SplitMix rng(seed);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(edges));
  for (std::int64_t i = 0; i < edges; ++i) {
    int u = rng.index(n);
    int v = rng.index(n);
    pairs.emplace_back(u, v);
  }
  return graph_from_edges(n, pairs);
}

GraphInstance preferential_attachment_graph(int n, int links_per_node, std::uint64_t seed) {
  SplitMix rng(seed);
  std::vector<std::pair<int, int>> pairs;
  // endpoint multiset: picking uniformly from it is degree-biased
  std::vector<int> endpoints;
  const int seed_nodes = std::max(2, links_per_node + 1);
  for (int u = 1; u < seed_nodes && u < n; ++u) {
    pairs.emplace_back(u, u - 1);
    endpoints.push_back(u);
    endpoints.push_back(u - 1);
  }
  std::vector<int> chosen;
  for (int u = seed_nodes; u < n; ++u) {
    chosen.clear();
    int attempts = 0;
    while (static_cast<int>(chosen.size()) < links_per_node && attempts < 8 * links_per_node) {
      ++attempts;
      int v = endpoints[rng.below(endpoints.size())];
      if (v != u && std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    for (int v : chosen) {
      pairs.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return graph_from_edges(n, pairs);
}

}  // namespace submax

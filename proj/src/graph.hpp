#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace submax {

// Undirected simple graph over dense node indices 0..n-1. Adjacency is
// symmetrized with self-loops and duplicate edges dropped; neighbor
// lists are sorted. original_ids maps dense indices back to the source
// file's node ids, for reporting only.
struct GraphInstance {
  int n = 0;
  std::vector<std::vector<int>> adjacency;
  std::int64_t edge_count = 0;
  std::vector<std::int64_t> original_ids;

  int degree(int u) const { return static_cast<int>(adjacency[static_cast<std::size_t>(u)].size()); }
};

// Builds a graph from raw endpoint pairs over nodes 0..n-1.
GraphInstance graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Parses a whitespace-separated edge list: one "u v" pair per line,
// '#'-prefixed comment lines ignored, arbitrary node ids remapped to
// dense indices in order of first appearance. Throws IoError with the
// line number on malformed input and on files describing no nodes.
GraphInstance load_edge_list(const std::string& path);

// Erdős–Rényi-style G(n, m): m edge slots sampled uniformly; self-loops
// and duplicates dropped, so the realized edge count can be lower.
GraphInstance random_graph(int n, std::int64_t edges, std::uint64_t seed);

// Preferential-attachment graph: each new node attaches to
// links_per_node existing nodes with degree-biased choice. Produces the
// heavy-tailed degree profile of social graphs.
GraphInstance preferential_attachment_graph(int n, int links_per_node, std::uint64_t seed);

}  // namespace submax

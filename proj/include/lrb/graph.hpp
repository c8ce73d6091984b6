#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrb/errors.hpp"

namespace lrb {

// Simple undirected graph on at most 64 vertices, adjacency kept as bitsets.
struct Graph {
  int n = 0;
  std::vector<std::string> labels;       // optional, size n when present
  std::vector<std::uint64_t> adj;        // adj[v] bit u set iff {u,v} edge

  Graph() = default;
  explicit Graph(int vertices, std::vector<std::string> vertex_labels = {});

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (adj[u] >> v) & 1ULL;
  }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  Graph induced(std::uint64_t vertex_mask) const;  // relabels to 0..k-1

  std::string label(int v) const;

  static Graph complete(int n);
  static Graph empty_graph(int n);
  static Graph cycle(int n);
  static Graph path(int n);
};

}  // namespace lrb

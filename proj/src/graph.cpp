#include "lrb/graph.hpp"

namespace lrb {

Graph::Graph(int vertices, std::vector<std::string> vertex_labels)
    : n(vertices), labels(std::move(vertex_labels)), adj(vertices, 0) {
  if (vertices < 0 || vertices > 64) {
    throw ResourceLimit("TooLarge", "graphs are limited to 64 vertices");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != vertices) {
    throw InvalidInput("BadGraph", "label count does not match vertex count");
  }
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidInput("BadGraph", "edge endpoint out of range");
  }
  if (u == v) throw InvalidInput("BadGraph", "loops are not allowed");
  adj[u] |= 1ULL << v;
  adj[v] |= 1ULL << u;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += __builtin_popcountll(adj[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n, labels);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has_edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
  std::vector<int> verts;
  for (int v = 0; v < n; ++v) {
    if ((vertex_mask >> v) & 1ULL) verts.push_back(v);
  }
  std::vector<std::string> sub_labels;
  if (!labels.empty()) {
    for (int v : verts) sub_labels.push_back(labels[v]);
  }
  Graph g(static_cast<int>(verts.size()), std::move(sub_labels));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

std::string Graph::label(int v) const {
  if (v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
  return "v" + std::to_string(v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidInput("BadGraph", "cycles need at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace lrb

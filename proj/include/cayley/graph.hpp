#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cayley/bfs.hpp"

namespace cayley::sl {

// d-regular undirected graph with adjacency stored flat, row-major.
struct Graph {
  std::uint32_t n = 0;
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> adj;  // n * degree neighbor indices

  std::uint32_t neighbor(std::uint32_t u, std::uint32_t j) const {
    return adj[static_cast<std::size_t>(u) * degree + j];
  }
};

// Cayley graph over the BFS vertex index: u ~ index(u * t).
Graph build_cayley_graph(const GenSet& gens, const BfsResult& bfs,
                         Exec exec = Exec::parallel);

bool is_connected(const Graph& g);

// header `# cayley sl l=<l> q=<q> n=<order> d=<degree>`, then one
// `u v` line per undirected edge with u < v, ascending
void write_edge_list(std::ostream& os, int l, std::uint64_t q,
                     const Graph& g);

// regular test-harness graphs
Graph cycle_graph(std::uint32_t n);
Graph complete_graph(std::uint32_t n);

}  // namespace cayley::sl

#include "cayley/graph.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>

#include "codemat.hpp"

namespace cayley::sl {

Graph build_cayley_graph(const GenSet& gens, const BfsResult& bfs, Exec exec) {
  if (!bfs.complete)
    throw std::invalid_argument("cannot build a graph from a partial walk");
  Graph g;
  g.n = static_cast<std::uint32_t>(bfs.elements.size());
  g.degree = static_cast<std::uint32_t>(gens.connection.size());
  g.adj.resize(static_cast<std::size_t>(g.n) * g.degree);
  const gf::Field& F = *bfs.field;
  const int dim = bfs.dim;
  std::vector<detail::CodeMat> conn(gens.connection.size());
  for (std::size_t t = 0; t < conn.size(); ++t) {
    const std::string bytes = gens.connection[t].serialized();
    detail::decode_into(F, dim, bytes.data(), conn[t]);
  }
  [[maybe_unused]] const bool par = exec == Exec::parallel;
  std::atomic<bool> escaped{false};
#pragma omp parallel if (par)
  {
    detail::CodeMat m, prod;
    std::string key;
#pragma omp for schedule(static)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(g.n); ++u) {
      detail::decode_into(F, dim, bfs.elements[static_cast<std::size_t>(u)].data(),
                          m);
      for (std::uint32_t j = 0; j < g.degree; ++j) {
        detail::mul_into(F, m, conn[j], prod);
        detail::serialize_into(F, prod, key);
        const auto it = bfs.index.find(key);
        if (it == bfs.index.end())
          escaped.store(true, std::memory_order_relaxed);
        else
          g.adj[static_cast<std::size_t>(u) * g.degree + j] = it->second;
      }
    }
  }
  if (escaped.load())
    throw std::runtime_error("product escaped the enumerated group");
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t j = 0; j < g.degree; ++j) {
      const std::uint32_t v = g.neighbor(u, j);
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.n;
}

void write_edge_list(std::ostream& os, int l, std::uint64_t q,
                     const Graph& g) {
  os << "# cayley sl l=" << l << " q=" << q << " n=" << g.n
     << " d=" << g.degree << "\n";
  for (std::uint32_t u = 0; u < g.n; ++u) {
    // neighbors of u are already distinct; emit each edge once
    std::vector<std::uint32_t> vs;
    for (std::uint32_t j = 0; j < g.degree; ++j) {
      const std::uint32_t v = g.neighbor(u, j);
      if (v > u) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    for (std::uint32_t v : vs) os << u << " " << v << "\n";
  }
}

Graph cycle_graph(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g;
  g.n = n;
  g.degree = 2;
  g.adj.resize(static_cast<std::size_t>(n) * 2);
  for (std::uint32_t u = 0; u < n; ++u) {
    g.adj[u * 2] = (u + 1) % n;
    g.adj[u * 2 + 1] = (u + n - 1) % n;
  }
  return g;
}

Graph complete_graph(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  Graph g;
  g.n = n;
  g.degree = n - 1;
  g.adj.resize(static_cast<std::size_t>(n) * (n - 1));
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t j = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (v != u) g.adj[static_cast<std::size_t>(u) * (n - 1) + j++] = v;
  }
  return g;
}

}  // namespace cayley::sl

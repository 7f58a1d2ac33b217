// Serial vs parallel timing for the three hot kernels: group enumeration,
// boundary computation with the sweep oracle, and matrix-free adjacency
// application. Each row also checks that the two paths produce identical
// results, which is the contract the kernels promise.

#include <chrono>
#include <cstdio>
#include <memory>

#include "cayley/bfs.hpp"
#include "cayley/exec.hpp"
#include "cayley/graph.hpp"
#include "cayley/spectral.hpp"
#include "cayley/subset.hpp"

using namespace cayley;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-26s %9.3fs %9.3fs %7.2fx   %s\n", name, serial_s, parallel_s,
              serial_s / parallel_s, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", max_threads());
  std::printf("%-26s %10s %10s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  // group enumeration: SL(3,5), 372000 elements
  auto f5 = std::make_shared<const gf::Field>(5, 1);
  const sl::GenSet gens5 = sl::generating_set(f5, 2);
  auto t0 = std::chrono::steady_clock::now();
  const auto bfs_s = sl::bfs_enumerate(gens5, 1u << 22, Exec::serial);
  const double enum_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto bfs_p = sl::bfs_enumerate(gens5, 1u << 22, Exec::parallel);
  const double enum_parallel = seconds_since(t0);
  row("bfs SL(3,5) n=372000", enum_serial, enum_parallel,
      bfs_s.elements == bfs_p.elements);

  // boundary with sweep oracle: l=4, q=2 (|S| = 80640)
  auto f2 = std::make_shared<const gf::Field>(2, 1);
  t0 = std::chrono::steady_clock::now();
  const auto bd_s = sl::boundary_exact(f2, 4, true, Exec::serial);
  const double bd_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto bd_p = sl::boundary_exact(f2, 4, true, Exec::parallel);
  const double bd_parallel = seconds_since(t0);
  row("boundary+sweep (4,2)", bd_serial, bd_parallel,
      bd_s.boundary_size == bd_p.boundary_size && bd_s.ratio == bd_p.ratio);

  // adjacency application on the big graph
  const sl::Graph g = sl::build_cayley_graph(gens5, bfs_p);
  std::vector<double> v(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i)
    v[i] = static_cast<double>(i % 97) / 97.0;
  constexpr int reps = 50;
  std::vector<double> out_s, out_p;
  t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    out_s = spectral::adjacency_apply(g, v, Exec::serial);
  const double ap_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    out_p = spectral::adjacency_apply(g, v, Exec::parallel);
  const double ap_parallel = seconds_since(t0);
  row("adjacency x50 n=372000", ap_serial, ap_parallel, out_s == out_p);

  // power iteration, fixed 200 steps on each path
  t0 = std::chrono::steady_clock::now();
  const auto sp_s = spectral::lambda2_iterative(g, 12345, 0.0, 200, Exec::serial);
  const double it_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto sp_p = spectral::lambda2_iterative(g, 12345, 0.0, 200, Exec::parallel);
  const double it_parallel = seconds_since(t0);
  row("power iter x200 n=372000", it_serial, it_parallel,
      sp_s.lambda2 == sp_p.lambda2 && sp_s.residual == sp_p.residual);

  return 0;
}

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/exec.hpp"
#include "cayley/graph.hpp"
#include "cayley/rational.hpp"
#include "cayley/subset.hpp"

namespace cayley::spectral {

struct SpectralReport {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  double lambda2 = 0.0;  // second-largest adjacency eigenvalue
  double gap = 0.0;      // d - lambda2
  double cheeger_lower = 0.0;  // gap / 2
  std::optional<Rational> h_upper;  // measured cut ratio, when available
  std::string method;    // "dense" | "iterative"
  double residual = 0.0;
  bool converged = false;
  std::uint64_t iterations = 0;
};

// matrix-free application of the adjacency operator
std::vector<double> adjacency_apply(const sl::Graph& g,
                                    std::span<const double> v,
                                    Exec exec = Exec::parallel);

// full symmetric eigensolve (cyclic Jacobi); n is capped at 5000
SpectralReport lambda2_dense(const sl::Graph& g);

// shifted power iteration with the constant vector deflated every step;
// results are identical across thread counts (fixed-tree reductions)
SpectralReport lambda2_iterative(const sl::Graph& g, std::uint64_t seed,
                                 double tol = 1e-6,
                                 std::uint64_t max_iter = 100000,
                                 Exec exec = Exec::parallel);

// (d - lambda2)/2 <= |dS|/|S| + slack; the cut ratio upper-bounds the
// isoperimetric number because |S| < |V|/2
bool cheeger_consistent(const SpectralReport& sr, const sl::BoundaryReport& br,
                        double slack = 1e-9);

}  // namespace cayley::spectral

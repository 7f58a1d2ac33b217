// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Integer claims are exact; floating-point claims carry the stated
// slack and nothing looser.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>

#include "cayley/bfs.hpp"
#include "cayley/graph.hpp"
#include "cayley/rootsys.hpp"
#include "cayley/spectral.hpp"
#include "cayley/subset.hpp"
#include "cayley/twistsys.hpp"

using namespace cayley;

namespace {

void criterion(int k, const std::string& name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, name.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", k, ": ", name);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::shared_ptr<const gf::Field> field_of(std::uint64_t q) {
  const auto [p, k] = gf::split_prime_power(q);
  return std::make_shared<const gf::Field>(p, k);
}

bool report_clean(const roots::OrbitReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.pass) {
      MESSAGE(rep.series, " rank ", rep.rank, " failed ", c.id, ": ", c.lhs,
              " vs ", c.rhs);
      return false;
    }
  return true;
}

}  // namespace

TEST_CASE("criterion 1: orbit identity suite, exact, under 10 s") {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int l = 5; l <= 30; ++l) {
    for (roots::Family f : {roots::Family::A, roots::Family::B,
                            roots::Family::C, roots::Family::D}) {
      const roots::Series s{f, l};
      ok = ok && report_clean(roots::verify_series_orbit(s));
      for (const auto& e : roots::absorption_certificate(s)) ok = ok && e.ok;
      for (const auto& e : roots::disjointness_certificate(s)) ok = ok && e.ok;
    }
  }
  for (int n = 3; n <= 15; ++n) {
    for (twisted::Kind k :
         {twisted::Kind::A_odd, twisted::Kind::A_even, twisted::Kind::D}) {
      if (n < twisted::min_n(k)) continue;  // folded D needs n >= 4
      const twisted::Twisted t{k, n};
      ok = ok && report_clean(twisted::verify_twisted_orbit(t));
      for (const auto& e : twisted::twisted_absorption_certificate(t))
        ok = ok && e.ok;
    }
  }
  const double dt = seconds_since(t0);
  CHECK(dt < 10.0);
  criterion(1,
            "orbit identities exact for A,B,C,D ranks 5..30 and twisted "
            "series n<=15 (" +
                std::to_string(dt).substr(0, 4) + " s)",
            ok && dt < 10.0);
}

TEST_CASE("criterion 2: enumeration matches the classical order formula") {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<int, std::uint64_t> cases[] = {
      {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
  const std::uint64_t expected[] = {6, 24, 168, 5616, 20160};
  bool ok = true;
  int at = 0;
  for (const auto& [l, q] : cases) {
    auto f = field_of(q);
    const auto gens = sl::generating_set(f, l);
    const auto bfs = sl::bfs_enumerate(gens, 1u << 22);
    const bool match = bfs.complete && bfs.count == expected[at] &&
                       bfs.count == sl::sl_order(l + 1, q);
    if (!match)
      MESSAGE("l=", l, " q=", q, " got ", bfs.count, " want ", expected[at]);
    ok = ok && match;
    ++at;
  }
  const double dt = seconds_since(t0);
  CHECK(dt < 60.0);
  criterion(2, "BFS orders equal the classical formula for the five cases",
            ok && dt < 60.0);
}

TEST_CASE("criterion 3: exact boundary, coset containment, disjointness, half bound") {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<int, std::uint64_t> cases[] = {
      {2, 2}, {3, 2}, {2, 3}, {4, 2}};
  bool ok = true;
  for (const auto& [l, q] : cases) {
    auto f = field_of(q);
    // the sweep oracle runs on every case; the criterion requires it for
    // (2,2) and (3,2), and it is cheap enough everywhere
    const auto rep = sl::boundary_exact(f, l, true);
    bool case_ok = rep.ratio_within_bound;        // (a) exact ratio <= 6/l
    case_ok = case_ok && rep.sweep_agrees;        // (b) boundary inside the six cosets
    case_ok = case_ok && rep.cosets_disjoint &&   // (c)
              rep.size_consistent &&
              rep.s_size == rep.s0_size * static_cast<std::uint64_t>(l);
    case_ok = case_ok && rep.half_check;          // (d)
    case_ok = case_ok && rep.boundary_disjoint_from_s;
    if (!case_ok)
      MESSAGE("boundary case l=", l, " q=", q, " ratio ", rep.ratio.str());
    ok = ok && case_ok;
  }
  const double dt = seconds_since(t0);
  CHECK(dt < 300.0);
  criterion(3,
            "boundary exact for (2,2),(3,2),(2,3),(4,2); sweep oracle agrees "
            "on all four (" + std::to_string(dt).substr(0, 4) + " s)",
            ok && dt < 300.0);
}

TEST_CASE("criterion 4: the exact ratios decrease with rank at q = 2") {
  auto f = field_of(2);
  const auto r2 = sl::boundary_exact(f, 2, false).ratio;
  const auto r3 = sl::boundary_exact(f, 3, false).ratio;
  const auto r4 = sl::boundary_exact(f, 4, false).ratio;
  bool ok = r3.leq(r2) && r4.leq(r3);
  ok = ok && r2.leq(Rational(6, 2)) && r3.leq(Rational(6, 3)) &&
       r4.leq(Rational(6, 4));
  criterion(4,
            "ratios " + r2.str() + " >= " + r3.str() + " >= " + r4.str() +
                " inside the 6/l envelope",
            ok);
}

TEST_CASE("criterion 5: spectral gap consistency") {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  {  // (2,2): both modes run, must agree within 1e-6 * d
    auto f = field_of(2);
    const auto gens = sl::generating_set(f, 2);
    const auto graph =
        sl::build_cayley_graph(gens, sl::bfs_enumerate(gens, 1u << 20));
    const auto dense = spectral::lambda2_dense(graph);
    const auto iter = spectral::lambda2_iterative(graph, 12345);
    const auto boundary = sl::boundary_exact(f, 2, false);
    ok = ok && iter.converged;
    ok = ok && std::fabs(dense.lambda2 - iter.lambda2) <= 1e-6 * graph.degree;
    ok = ok && spectral::cheeger_consistent(dense, boundary, 1e-9);
    ok = ok && spectral::cheeger_consistent(iter, boundary, 1e-9);
  }
  {  // (3,2): 20160 vertices, iterative only (dense is capped at 5000)
    auto f = field_of(2);
    const auto gens = sl::generating_set(f, 3);
    const auto graph =
        sl::build_cayley_graph(gens, sl::bfs_enumerate(gens, 1u << 22));
    const auto iter = spectral::lambda2_iterative(graph, 12345);
    const auto boundary = sl::boundary_exact(f, 3, false);
    ok = ok && iter.converged;
    ok = ok && spectral::cheeger_consistent(iter, boundary, 1e-9);
  }
  const double dt = seconds_since(t0);
  CHECK(dt < 60.0);
  criterion(5,
            "(d-lambda2)/2 <= exact ratio + 1e-9 for (2,2),(3,2); modes agree "
            "within 1e-6*d (" + std::to_string(dt).substr(0, 4) + " s)",
            ok && dt < 60.0);
}

TEST_CASE("criterion 6: connection sets never exceed ten elements") {
  bool ok = true;
  std::string sizes;
  for (const auto& [l, q] : std::vector<std::pair<int, std::uint64_t>>{
           {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}, {2, 5}}) {
    auto f = field_of(q);
    const auto gens = sl::generating_set(f, l);
    ok = ok && gens.degree() <= 10;
    sizes += " (" + std::to_string(l) + "," + std::to_string(q) +
             "):" + std::to_string(gens.degree());
  }
  criterion(6, "measured connection sizes" + sizes + " all <= 10", ok);
}

TEST_CASE("criterion 7: transvection algebra, exhaustive") {
  bool ok = true;
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    auto f = field_of(q);
    for (int l = 1; l <= 4; ++l) {
      const int dim = l + 1;
      // additivity
      for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim && ok; ++j) {
          if (i == j) continue;
          for (std::uint32_t a = 0; a < q && ok; ++a)
            for (std::uint32_t b = 0; b < q && ok; ++b)
              ok = sl::transvection(f, dim, i, j, a)
                       .mul(sl::transvection(f, dim, i, j, b)) ==
                   sl::transvection(f, dim, i, j, f->addc(a, b));
        }
      // commutator identity on distinct index triples
      for (int i = 0; i < dim && ok; ++i)
        for (int j = 0; j < dim && ok; ++j)
          for (int k = 0; k < dim && ok; ++k) {
            if (i == j || j == k || i == k) continue;
            for (std::uint32_t a = 0; a < q && ok; ++a)
              for (std::uint32_t b = 0; b < q && ok; ++b) {
                const auto tij = sl::transvection(f, dim, i, j, a);
                const auto tjk = sl::transvection(f, dim, j, k, b);
                ok = tij.inverse().mul(tjk.inverse()).mul(tij).mul(tjk) ==
                     sl::transvection(f, dim, i, k, f->mulc(a, b));
              }
          }
      // conjugation shift with sign
      const auto B = sl::gen_B(f, l);
      for (int k = 1; k <= dim && ok; ++k) {
        const auto bk = B.pow(k);
        const auto bki = B.pow(-k);
        for (int i = 0; i < dim && ok; ++i)
          for (int j = 0; j < dim && ok; ++j) {
            if (i == j) continue;
            for (std::uint32_t d = 0; d < q && ok; ++d) {
              const auto m =
                  bk.mul(sl::transvection(f, dim, i, j, d)).mul(bki);
              const int ii = (i + k) % dim, jj = (j + k) % dim;
              const std::uint32_t entry = m.at(ii, jj);
              ok = (entry == d || entry == f->negc(d)) &&
                   m == sl::transvection(f, dim, ii, jj, entry);
            }
          }
      }
    }
  }
  criterion(7,
            "transvection additivity, commutator identity and B-conjugation "
            "shift hold exhaustively for q in {2,3,4,5}, l <= 4",
            ok);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <random>
#include <sstream>

#include "cayley/bfs.hpp"
#include "cayley/graph.hpp"
#include "cayley/subset.hpp"

using namespace cayley;
using sl::Mat;

namespace {

std::shared_ptr<const gf::Field> field_of(std::uint64_t q) {
  const auto [p, k] = gf::split_prime_power(q);
  return std::make_shared<const gf::Field>(p, k);
}

// independent order oracle: prod_{i=0}^{n-1} (q^n - q^i) / (q - 1)
unsigned long long order_oracle(int n, unsigned long long q) {
  unsigned __int128 qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  unsigned __int128 ord = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= qn - qi;
    qi *= q;
  }
  return static_cast<unsigned long long>(ord / (q - 1));
}

// commutator [g, h] = g^-1 h^-1 g h
Mat commutator(const Mat& g, const Mat& h) {
  return g.inverse().mul(h.inverse()).mul(g).mul(h);
}

}  // namespace

TEST_CASE("generator matrices") {
  SUBCASE("A is the (0,1) unit transvection") {
    auto f = field_of(2);
    const Mat a = sl::gen_A(f, 2);
    Mat want = Mat::identity(f, 3);
    want.set(0, 1, 1);
    CHECK(a == want);
  }
  SUBCASE("B at even l is the plain cyclic shift") {
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
      auto f = field_of(q);
      const Mat b = sl::gen_B(f, 2);
      Mat want(f, 3);
      want.set(0, 2, 1);
      want.set(1, 0, 1);
      want.set(2, 1, 1);
      CHECK(b == want);
    }
  }
  SUBCASE("B at odd l carries -1 in the corner") {
    auto f = field_of(3);
    const Mat b = sl::gen_B(f, 3);
    CHECK(b.at(0, 3) == 2);  // -1 mod 3
  }
  SUBCASE("C = diag(1/lambda, lambda, 1...) with lambda primitive") {
    auto f = field_of(7);
    CHECK(f->primitive().code == 3);
    CHECK(f->mulc(3, 5) == 1);  // 3 * 5 = 15 = 1 (mod 7)
    const Mat c = sl::gen_C(f, 2);
    CHECK(c.at(0, 0) == 5);
    CHECK(c.at(1, 1) == 3);
    CHECK(c.at(2, 2) == 1);
  }
  SUBCASE("every generator has determinant 1") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull})
      for (int l = 1; l <= 4; ++l) {
        auto f = field_of(q);
        const std::uint32_t one = 1 % f->q();
        CHECK(sl::gen_A(f, l).det() == one);
        CHECK(sl::gen_B(f, l).det() == one);
        CHECK(sl::gen_C(f, l).det() == one);
      }
  }
  SUBCASE("C degenerates to the identity exactly at q = 2") {
    CHECK(sl::gen_C(field_of(2), 3).is_identity());
    CHECK_FALSE(sl::gen_C(field_of(3), 3).is_identity());
    CHECK_FALSE(sl::gen_C(field_of(4), 3).is_identity());
  }
}

TEST_CASE("connection sets are inverse-closed, identity-free, small") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    for (int l = 1; l <= 4; ++l) {
      auto f = field_of(q);
      const auto gens = sl::generating_set(f, l);
      for (const Mat& t : gens.connection) {
        CHECK_FALSE(t.is_identity());
        const Mat ti = t.inverse();
        bool found = false;
        for (const Mat& u : gens.connection) found = found || u == ti;
        CHECK(found);
      }
      CHECK(gens.degree() <= 6);
    }
  }
  CHECK(sl::generating_set(field_of(2), 2).degree() == 3);
  CHECK(sl::generating_set(field_of(3), 2).degree() == 5);
  CHECK(sl::generating_set(field_of(5), 2).degree() == 6);
}

TEST_CASE("transvections") {
  auto f = field_of(5);
  SUBCASE("zero shear is the identity; i = j rejected") {
    CHECK(sl::transvection(f, 4, 0, 1, 0) == Mat::identity(f, 4));
    CHECK_THROWS_AS(sl::transvection(f, 4, 2, 2, 1), std::invalid_argument);
  }
  SUBCASE("additivity, exhaustively through q = 9") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
      auto fq = field_of(q);
      const int max_dim = q <= 5 ? 5 : 3;
      for (int dim = 2; dim <= max_dim; ++dim)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            for (std::uint32_t a = 0; a < q; ++a)
              for (std::uint32_t b = 0; b < q; ++b)
                CHECK(sl::transvection(fq, dim, i, j, a)
                          .mul(sl::transvection(fq, dim, i, j, b)) ==
                      sl::transvection(fq, dim, i, j, fq->addc(a, b)));
          }
    }
  }
  SUBCASE("commutator collapse onto the corner transvection") {
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 8ull, 9ull}) {
      auto fq = field_of(q);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          CHECK(commutator(sl::transvection(fq, 3, 0, 1, a),
                           sl::transvection(fq, 3, 1, 2, b)) ==
                sl::transvection(fq, 3, 0, 2, fq->mulc(a, b)));
    }
  }
  SUBCASE("conjugation by B shifts the position cyclically, up to sign") {
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
      for (int l = 2; l <= 4; ++l) {
        auto fq = field_of(q);
        const int dim = l + 1;
        const Mat B = sl::gen_B(fq, l);
        for (int k = 1; k <= dim; ++k) {
          const Mat bk = B.pow(k);
          const Mat bki = B.pow(-k);
          for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
              if (i == j) continue;
              const std::uint32_t delta = 1 % fq->q();
              const Mat m = bk.mul(sl::transvection(fq, dim, i, j, delta))
                                .mul(bki);
              const int ii = (i + k) % dim, jj = (j + k) % dim;
              const std::uint32_t entry = m.at(ii, jj);
              CHECK((entry == delta || entry == fq->negc(delta)));
              CHECK(m == sl::transvection(fq, dim, ii, jj, entry));
            }
        }
      }
    }
  }
}

TEST_CASE("B^(l+1) is the identity up to the parity sign") {
  for (std::uint64_t q : {2ull, 3ull, 5ull, 9ull}) {
    auto f = field_of(q);
    for (int l = 1; l <= 5; ++l) {
      const Mat b = sl::gen_B(f, l);
      Mat want = Mat::identity(f, l + 1);
      if (l % 2 == 1) {
        for (int i = 0; i <= l; ++i) want.set(i, i, f->negc(want.at(i, i)));
      }
      CHECK(b.pow(l + 1) == want);
    }
  }
}

TEST_CASE("matrix inverse and serialization round trip") {
  auto f = field_of(9);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, 8);
  int invertible = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Mat m(f, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.set(i, j, pick(rng));
    if (m.det() == 0) continue;
    ++invertible;
    CHECK(m.mul(m.inverse()) == Mat::identity(f, 3));
    CHECK(Mat::deserialize(f, 3, m.serialized().data()) == m);
  }
  CHECK(invertible > 10);
}

TEST_CASE("group enumeration matches the classical orders") {
  const std::pair<int, std::uint64_t> cases[] = {
      {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
  const unsigned long long frozen[] = {6, 24, 168, 5616, 20160};
  int at = 0;
  for (const auto& [l, q] : cases) {
    auto f = field_of(q);
    const auto gens = sl::generating_set(f, l);
    const auto bfs = sl::bfs_enumerate(gens, 1u << 22);
    CHECK(bfs.complete);
    CHECK(bfs.count == frozen[at]);
    CHECK(bfs.count == order_oracle(l + 1, q));
    CHECK(bfs.count == sl::sl_order(l + 1, q));
    ++at;
  }
  CHECK(sl::sl_order(5, 2) == 9999360ull);
}

TEST_CASE("enumeration is deterministic and thread-count independent") {
  auto f = field_of(3);
  const auto gens = sl::generating_set(f, 2);
  const auto serial = sl::bfs_enumerate(gens, 1u << 20, Exec::serial);
  const auto parallel = sl::bfs_enumerate(gens, 1u << 20, Exec::parallel);
  const auto again = sl::bfs_enumerate(gens, 1u << 20, Exec::parallel);
  CHECK(serial.elements == parallel.elements);
  CHECK(parallel.elements == again.elements);
  // identity sits at index 0
  CHECK(parallel.index.at(Mat::identity(f, 3).serialized()) == 0);
  // sampled elements have determinant 1
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(parallel.elements.size() - 1));
  for (int i = 0; i < 64; ++i)
    CHECK(parallel.element_at(pick(rng)).det() == 1);
}

TEST_CASE("cap overrun is flagged, not silently truncated") {
  auto f = field_of(2);
  const auto gens = sl::generating_set(f, 2);
  const auto partial = sl::bfs_enumerate(gens, 100);
  CHECK_FALSE(partial.complete);
  CHECK(partial.count > 100);
}

TEST_CASE("structural subset membership") {
  auto f = field_of(2);
  const sl::SubsetS S(f, 3);
  const Mat id = Mat::identity(f, 4);
  CHECK(S.in_S0(id));
  CHECK(S.in_S(id));
  CHECK(S.coset_index(id) == 0);

  // an embedded block matrix with a nontrivial top-left block
  Mat m = id;
  m.set(0, 1, 1);
  CHECK(S.in_S0(m));
  const Mat shifted = m.mul(S.b_power(2));
  CHECK(S.coset_index(shifted) == 2);
  CHECK(S.in_S(shifted));
  const Mat outside = m.mul(S.b_power(3));  // S_3 = S_l, not part of S
  CHECK(S.coset_index(outside) == 3);
  CHECK_FALSE(S.in_S(outside));

  // breaking the block shape leaves S entirely
  Mat broken = id;
  broken.set(3, 0, 1);
  CHECK_FALSE(S.in_S(broken));
  CHECK(S.coset_index(broken) == std::nullopt);
}

TEST_CASE("exact boundary reports") {
  struct Fixture {
    int l;
    std::uint64_t q;
    unsigned long long s0, s, boundary;
    Rational ratio;
  };
  // boundary sizes come from the in-run sweep oracle (checked below) and
  // are frozen as regressions
  const Fixture fixtures[] = {
      {2, 2, 6, 12, 12, {1, 1}},
      {3, 2, 168, 504, 336, {2, 3}},
      {2, 3, 24, 48, 96, {2, 1}},
  };
  for (const auto& fx : fixtures) {
    CAPTURE(fx.l);
    CAPTURE(fx.q);
    auto f = field_of(fx.q);
    const auto rep = sl::boundary_exact(f, fx.l, true);
    CHECK(rep.s0_size == fx.s0);
    CHECK(rep.s_size == fx.s);
    CHECK(rep.boundary_size == fx.boundary);
    CHECK(rep.ratio == fx.ratio);
    CHECK(rep.ratio_within_bound);
    CHECK(rep.cosets_disjoint);
    CHECK(rep.size_consistent);
    CHECK(rep.boundary_disjoint_from_s);
    CHECK(rep.half_check);
    CHECK(rep.sweep_checked);
    CHECK(rep.sweep_agrees);
  }
}

TEST_CASE("q = 2 degeneracy: the C cosets contribute nothing") {
  auto f = field_of(2);
  const auto rep = sl::boundary_exact(f, 2, true);
  CHECK(rep.degree == 3);
  int c_cosets = 0;
  for (const auto& c : rep.cosets) {
    if (c.name.find('C') != std::string::npos) {
      ++c_cosets;
      CHECK(c.boundary_count == 0);
    }
  }
  CHECK(c_cosets == 2);
}

TEST_CASE("boundary is identical under serial and parallel execution") {
  auto f = field_of(3);
  const auto a = sl::boundary_exact(f, 2, true, Exec::serial);
  const auto b = sl::boundary_exact(f, 2, true, Exec::parallel);
  CHECK(a.boundary_size == b.boundary_size);
  CHECK(a.ratio == b.ratio);
  CHECK(a.s_size == b.s_size);
}

TEST_CASE("half check: l |SL(l,q)| < |SL(l+1,q)| / 2") {
  CHECK(sl::half_check(2, 2));  // 2*6 = 12 < 84
  CHECK(sl::half_check(3, 2));  // 3*168 = 504 < 10080
  CHECK(sl::half_check(4, 2));  // 4*20160 < 9999360/2
  CHECK(sl::half_check(2, 3));
  CHECK(sl::half_check(5, 3));
}

TEST_CASE("edge list export") {
  auto f = field_of(2);
  const auto gens = sl::generating_set(f, 2);
  const auto bfs = sl::bfs_enumerate(gens, 1u << 20);
  const auto graph = sl::build_cayley_graph(gens, bfs);
  CHECK(graph.n == 168);
  CHECK(graph.degree == 3);

  std::ostringstream os;
  sl::write_edge_list(os, 2, 2, graph);
  const std::string text = os.str();
  CHECK(text.rfind("# cayley sl l=2 q=2 n=168 d=3\n", 0) == 0);

  // one line per undirected edge, no self loops, u < v ascending
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  std::size_t edges = 0;
  long prev_u = -1, prev_v = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    long u, v;
    ls >> u >> v;
    CHECK(u < v);
    CHECK((u > prev_u || (u == prev_u && v > prev_v)));
    prev_u = u;
    prev_v = v;
    ++edges;
  }
  CHECK(edges == 168 * 3 / 2);

  // byte-identical on re-export
  std::ostringstream os2;
  sl::write_edge_list(os2, 2, 2, graph);
  CHECK(os2.str() == text);

  // and independent of the execution policy used to build the graph
  const auto graph_serial = sl::build_cayley_graph(
      gens, sl::bfs_enumerate(gens, 1u << 20, Exec::serial), Exec::serial);
  std::ostringstream os3;
  sl::write_edge_list(os3, 2, 2, graph_serial);
  CHECK(os3.str() == text);
}

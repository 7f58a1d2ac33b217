#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cayley/twistsys.hpp"

using namespace cayley::twisted;
using cayley::roots::RootSystem;
using cayley::roots::RootVec;
using cayley::roots::WeylWord;
using cayley::roots::simple_root;

TEST_CASE("diagram automorphisms are involutions preserving the diagram") {
  for (const Twisted t : {Twisted{Kind::A_odd, 4}, Twisted{Kind::A_even, 4},
                          Twisted{Kind::D, 6}}) {
    const auto rho = diagram_automorphism(t);
    const int l = underlying(t).rank;
    for (int i = 1; i <= l; ++i) CHECK(rho[rho[i]] == i);
  }
  CHECK(diagram_automorphism({Kind::A_odd, 4})[1] == 7);
  CHECK(diagram_automorphism({Kind::D, 6})[1] == 2);
  CHECK(diagram_automorphism({Kind::D, 6})[3] == 3);
}

TEST_CASE("fundamental set shapes") {
  SUBCASE("folded A_7 (n = 4): center singleton, outer pairs") {
    const auto sets = fundamental_sets({Kind::A_odd, 4});
    REQUIRE(sets.size() == 4);
    const auto& z1 = sets[0];
    CHECK(z1.index == 1);
    CHECK(z1.kind == FundamentalSet::Kind::pair);
    CHECK(z1.members[0] == simple_root(7, 1));
    CHECK(z1.members[1] == simple_root(7, 7));
    const auto& z4 = sets[3];
    CHECK(z4.kind == FundamentalSet::Kind::single);
    CHECK(z4.members[0] == simple_root(7, 4));
  }
  SUBCASE("folded D_6: fork pair, then singletons") {
    const auto sets = fundamental_sets({Kind::D, 6});
    REQUIRE(sets.size() == 5);
    CHECK(sets[0].kind == FundamentalSet::Kind::pair);
    CHECK(sets[0].members[0] == simple_root(6, 1));
    CHECK(sets[0].members[1] == simple_root(6, 2));
    CHECK(sets[2].index == 3);
    CHECK(sets[2].members[0] == simple_root(6, 4));
  }
  SUBCASE("folded A_8 (n = 4): central triple") {
    const auto sets = fundamental_sets({Kind::A_even, 4});
    REQUIRE(sets.size() == 4);
    const auto& z1 = sets[0];
    CHECK(z1.kind == FundamentalSet::Kind::triple);
    CHECK(z1.members[0] == simple_root(8, 4));
    CHECK(z1.members[1] == simple_root(8, 5));
    CHECK(z1.members[2] ==
          cayley::roots::add(simple_root(8, 4), simple_root(8, 5)));
  }
  SUBCASE("classes partition the fundamental roots") {
    for (const Twisted t : {Twisted{Kind::A_odd, 5}, Twisted{Kind::A_even, 5},
                            Twisted{Kind::D, 7}}) {
      const int l = underlying(t).rank;
      std::set<RootVec> seen;
      int count = 0;
      for (const auto& z : fundamental_sets(t))
        for (const auto& r : z.members) {
          CHECK(seen.insert(r).second);
          int nz = 0;
          for (int c : r) nz += c != 0;
          if (nz == 1) ++count;
        }
      CHECK(count == l);
    }
  }
}

TEST_CASE("twisted words") {
  SUBCASE("folded A_7: interleaved pairs then the center") {
    CHECK(twisted_coxeter({Kind::A_odd, 4}) ==
          WeylWord{1, 7, 2, 6, 3, 5, 4});
  }
  SUBCASE("folded A_6: triple word first") {
    CHECK(twisted_coxeter({Kind::A_even, 3}) ==
          WeylWord{3, 4, 3, 2, 5, 1, 6});
  }
  SUBCASE("folded D_n uses the plain Coxeter word") {
    const Twisted t{Kind::D, 5};
    const RootSystem rs(underlying(t));
    const auto w = twisted_coxeter(t);
    CHECK(w == rs.coxeter_word());
    CHECK(rs.apply_word(w, simple_root(5, 4)) == simple_root(5, 5));
  }
}

TEST_CASE("twisted words centralize tau on the whole root set") {
  for (int n = 3; n <= 10; ++n) {
    for (Kind k : {Kind::A_odd, Kind::A_even, Kind::D}) {
      if (n < min_n(k)) continue;
      const Twisted t{k, n};
      const RootSystem rs(underlying(t));
      const auto rho = diagram_automorphism(t);
      const auto w = twisted_coxeter(t);
      for (const auto& v : rs.all_roots()) {
        const RootVec conj =
            tau_apply(rho, rs.apply_word(w, tau_apply(rho, v)));
        CHECK(conj == rs.apply_word(w, v));
      }
    }
  }
}

TEST_CASE("tau maps the root set onto itself") {
  for (const Twisted t : {Twisted{Kind::A_odd, 4}, Twisted{Kind::A_even, 4},
                          Twisted{Kind::D, 6}}) {
    const RootSystem rs(underlying(t));
    const auto rho = diagram_automorphism(t);
    std::set<RootVec> image;
    for (const auto& v : rs.all_roots()) image.insert(tau_apply(rho, v));
    CHECK(image == std::set<RootVec>(rs.all_roots().begin(),
                                     rs.all_roots().end()));
  }
}

TEST_CASE("orbit spot values") {
  {
    // n = 5 folded A_9: w^2(r_1) = r_3
    const Twisted t{Kind::A_odd, 5};
    const RootSystem rs(underlying(t));
    CHECK(rs.apply_power(twisted_coxeter(t), 2, simple_root(9, 1)) ==
          simple_root(9, 3));
  }
  {
    // n = 5 folded A_10: w^3(r_5) = r_5 + r_4 + r_3 + r_2
    const Twisted t{Kind::A_even, 5};
    const RootSystem rs(underlying(t));
    CHECK(rs.apply_power(twisted_coxeter(t), 3, simple_root(10, 5)) ==
          cayley::roots::root_sum(10, 2, 5));
  }
}

TEST_CASE("every twisted orbit identity holds for n up to 15") {
  for (int n = 3; n <= 15; ++n) {
    for (Kind k : {Kind::A_odd, Kind::A_even, Kind::D}) {
      if (n < min_n(k)) continue;
      const auto rep = verify_twisted_orbit({k, n});
      if (!rep.all_pass) {
        for (const auto& c : rep.checks)
          if (!c.pass)
            MESSAGE(rep.series, " ", c.id, ": ", c.lhs, " != ", c.rhs);
      }
      CHECK(rep.all_pass);
    }
  }
}

TEST_CASE("absorption certificates") {
  SUBCASE("folded A_9 (n = 5): w^3(Z_1) inside the inner subsystem") {
    const auto cert = twisted_absorption_certificate({Kind::A_odd, 5});
    for (const auto& e : cert) {
      CHECK(e.ok);
      if (e.power == 3) CHECK(e.detail == "contained");
      if (e.power == 0) CHECK(e.detail == "outside");
    }
  }
  SUBCASE("folded D_6: w^2 images of the fork inside the inner subsystem") {
    const auto cert = twisted_absorption_certificate({Kind::D, 6});
    for (const auto& e : cert) {
      CHECK(e.ok);
      if (e.power == 2) CHECK(e.detail == "contained");
    }
  }
  SUBCASE("folded A_10 (n = 5): truncated word agrees on the triple") {
    const auto cert = twisted_absorption_certificate({Kind::A_even, 5});
    int max_power = -1;
    for (const auto& e : cert) {
      CHECK(e.ok);
      max_power = std::max(max_power, e.power);
    }
    // agreement is certified exactly through power n-2; one power later the
    // outer pair stops commuting past the image and the words diverge
    CHECK(max_power == 3);
    const Twisted t{Kind::A_even, 5};
    const RootSystem rs(underlying(t));
    auto w = twisted_coxeter(t);
    auto wt = w;
    wt.resize(wt.size() - 2);
    CHECK(rs.apply_power(w, 4, simple_root(10, 5)) !=
          rs.apply_power(wt, 4, simple_root(10, 5)));
  }
  SUBCASE("all entries pass for n up to 12") {
    for (int n = 3; n <= 12; ++n)
      for (Kind k : {Kind::A_odd, Kind::A_even, Kind::D}) {
        if (n < min_n(k)) continue;
        for (const auto& e : twisted_absorption_certificate({k, n}))
          CHECK(e.ok);
      }
  }
}

TEST_CASE("invalid twisted parameters are rejected") {
  CHECK_THROWS_AS(underlying(Twisted{Kind::D, 3}), std::invalid_argument);
  CHECK_THROWS_AS(underlying(Twisted{Kind::A_odd, 2}), std::invalid_argument);
}

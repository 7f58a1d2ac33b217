#pragma once

#include <string>
#include <vector>

#include "cayley/rootsys.hpp"

namespace cayley::twisted {

// Twisted series built from an order-2 diagram symmetry: A-odd is A_{2n-1}
// folded through i <-> l+1-i, A-even is A_{2n} folded the same way, and D
// folds D_n by swapping the fork nodes r_1, r_2.
enum class Kind { A_odd, A_even, D };

struct Twisted {
  Kind kind;
  int n;
};

std::string twisted_name(const Twisted& t);
int min_n(Kind k);
roots::Series underlying(const Twisted& t);

// involutive diagram permutation rho of [1, l]; preserves the Cartan matrix
std::vector<int> diagram_automorphism(const Twisted& t);

// linear extension tau of rho acting on root coordinates
roots::RootVec tau_apply(const std::vector<int>& rho, const roots::RootVec& v);

struct FundamentalSet {
  enum class Kind { single, pair, triple } kind;
  int index = 0;                        // class label; Z_1 carries the generators
  std::vector<roots::RootVec> members;  // order: r, rbar[, r+rbar]
};

// the partition classes of the fundamental roots under rho
std::vector<FundamentalSet> fundamental_sets(const Twisted& t);

// flattened product of the per-class words w_Z, in class order; lands in
// the tau-centralizer of the Weyl group
roots::WeylWord twisted_coxeter(const Twisted& t);

// per-class word: w_r for singles, w_r w_rbar for pairs, w_r w_rbar w_r for
// triples
roots::WeylWord class_word(const FundamentalSet& z);

roots::OrbitReport verify_twisted_orbit(const Twisted& t);

struct TwistedAbsorptionEntry {
  std::string what;
  int power = 0;
  bool ok = false;
  std::string detail;
};

// (a) images of the generator-bearing classes stay inside the fixed
// subsystem for every power the coset argument uses, and (b) for A-even the
// truncated word agrees with the full one on the central triple.
std::vector<TwistedAbsorptionEntry> twisted_absorption_certificate(
    const Twisted& t);

}  // namespace cayley::twisted

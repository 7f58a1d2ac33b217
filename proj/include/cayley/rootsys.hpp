#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cayley::roots {

enum class Family { A, B, C, D };

struct Series {
  Family family;
  int rank;
};

std::string series_name(const Series& s);
int min_rank(Family f);

// Root coordinates in the simple-root basis; simple root r_i is the i-th
// unit vector (indices are 1-based throughout, matching the usual labels).
using RootVec = std::vector<int>;

// Word in the fundamental reflections; letters in [1, rank]. A word acts as
// a composition read left to right, i.e. the rightmost letter applies first,
// which is pinned by the fixture w_1..w_l(r_1) = r_2 in series A.
using WeylWord = std::vector<int>;

RootVec simple_root(int rank, int i);
RootVec zero_root(int rank);
std::string root_str(const RootVec& v);  // e.g. "r1+2r2-r4"

// m(i, j) = 2(r_j, r_i)/(r_i, r_i): the coefficient of r_i removed when
// reflecting r_j in the hyperplane of r_i.
class CartanMatrix {
 public:
  CartanMatrix(int rank, std::vector<int> entries);
  int rank() const { return rank_; }
  int at(int i, int j) const { return m_[(i - 1) * rank_ + (j - 1)]; }

 private:
  int rank_;
  std::vector<int> m_;
};

CartanMatrix cartan_matrix(const Series& s);

class RootSystem {
 public:
  explicit RootSystem(Series s);

  const Series& series() const { return series_; }
  int rank() const { return series_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }

  RootVec reflect(int i, RootVec v) const;
  RootVec apply_word(const WeylWord& w, RootVec v) const;
  RootVec apply_power(const WeylWord& w, int times, RootVec v) const;
  WeylWord coxeter_word() const;  // w_1 w_2 ... w_l

  // closure of the fundamental roots under all simple reflections
  const std::vector<RootVec>& all_roots() const;
  std::vector<RootVec> positive_roots() const;
  bool is_root(const RootVec& v) const;

  // roots of the subsystem generated by {r_i : i in support}
  std::vector<RootVec> subsystem_roots(const std::vector<int>& support) const;
  bool in_subsystem(const RootVec& v, const std::vector<int>& support) const;

 private:
  Series series_;
  CartanMatrix cartan_;
  mutable std::vector<RootVec> all_;  // sorted; filled on first use
};

inline RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline RootVec negate(const RootVec& a) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
// sum of r_lo..r_hi, optionally scaled coefficients elsewhere
RootVec root_sum(int rank, int lo, int hi);

// The single-step rule: when r_i is orthogonal to everything past r_{i+1},
// r_{i+1} is orthogonal to everything before r_i, and the two have equal
// length, the Coxeter element moves r_i to r_{i+1}. Returns not_applicable
// when the orthogonality pattern fails for (series, i).
enum class StepRuleStatus { holds, fails, not_applicable };
StepRuleStatus verify_step_rule(const Series& s, int i);

struct EquationCheck {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct OrbitReport {
  std::string series;
  int rank = 0;
  std::vector<EquationCheck> checks;
  bool all_pass = true;

  void record(const std::string& id, const RootVec& got, const RootVec& want);
  void record_bool(const std::string& id, const std::string& what, bool ok);
};

// Verifies every orbit identity the series' boundary argument relies on,
// exactly, as integer vector identities.
OrbitReport verify_series_orbit(const Series& s);

struct AbsorptionEntry {
  std::string generator;  // which connection-set element the root carries
  RootVec root;
  int power = 0;
  RootVec image;
  std::vector<int> subsystem;  // fundamental indices of the rank-(l-1) subsystem
  bool contained = false;      // image lies in that subsystem
  bool expected = false;       // containment the coset argument requires
  bool ok = false;             // contained == expected
};

// For each generator-bearing root g and each power i in the series' range,
// certifies whether w^i(g) lands inside the designated rank-(l-1)
// subsystem; the powers where it escapes are exactly the boundary cosets.
std::vector<AbsorptionEntry> absorption_certificate(const Series& s);

struct DisjointnessEntry {
  int power = 0;
  RootVec witness;
  RootVec image;
  RootVec target;  // root outside the subsystem, e.g. r_l
  bool ok = false;
};

// Witnesses w^i(witness) = target proving n_w^i does not normalize the
// rank-(l-1) subgroup, hence the cosets K n_w^i are pairwise distinct.
std::vector<DisjointnessEntry> disjointness_certificate(const Series& s);

}  // namespace cayley::roots

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/bfs.hpp"
#include "cayley/rational.hpp"

namespace cayley::sl {

// Structural membership tests for S = union of S_0 B^i, i = 0..l-1, inside
// SL(l+1, q), where S_0 is the block-embedded copy of SL(l, q). Membership
// never consults an enumeration of the ambient group: M is in S_0 iff its
// last row and last column are the last unit vector, and M is in S_i iff
// M B^{-i} is in S_0.
class SubsetS {
 public:
  SubsetS(std::shared_ptr<const gf::Field> field, int l);

  int l() const { return l_; }
  const Mat& b_power(int i) const;      // B^i, 0 <= i <= l+1
  const Mat& b_neg_power(int i) const;  // B^{-i}

  bool in_S0(const Mat& m) const;
  bool in_Si(const Mat& m, int i) const;
  // coset index over i = 0..l, when the matrix lies in one of them
  std::optional<int> coset_index(const Mat& m) const;
  bool in_S(const Mat& m) const;

 private:
  int l_;
  std::shared_ptr<const gf::Field> field_;
  std::vector<Mat> bpow_, bneg_;
};

struct CosetCount {
  std::string name;
  std::uint64_t size = 0;            // elements in the named coset
  std::uint64_t boundary_count = 0;  // of which lie in the boundary
};

struct BoundaryReport {
  int l = 0;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> group_order;  // |SL(l+1,q)| when it fits
  std::uint64_t s0_size = 0;
  std::uint64_t s_size = 0;
  std::uint64_t boundary_size = 0;
  Rational ratio;           // |dS| / |S|, exact
  Rational bound;           // 6 / l
  bool ratio_within_bound = false;
  bool cosets_disjoint = false;  // S_i pairwise disjoint
  bool size_consistent = false;  // |S| = l |S_0|
  bool boundary_disjoint_from_s = false;
  bool half_check = false;  // |S| < |G| / 2
  int degree = 0;
  std::vector<CosetCount> cosets;
  bool sweep_checked = false;
  bool sweep_agrees = false;
  double runtime_seconds = 0.0;
};

// Exact boundary of S in Cay(SL(l+1,q), {A,B,C}^{+-1}). The boundary is
// collected from the six candidate cosets; with run_sweep_oracle the full
// product sweep over S recomputes it from the definition and the two sets
// must coincide.
BoundaryReport boundary_exact(std::shared_ptr<const gf::Field> field, int l,
                              bool run_sweep_oracle,
                              Exec exec = Exec::parallel,
                              std::uint64_t cap = 1u << 24);

// l * |SL(l,q)| < |SL(l+1,q)| / 2
bool half_check(int l, std::uint64_t q);

}  // namespace cayley::sl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/matgf.hpp"

namespace cayley::sl {

// T_{i,j}(delta) = I + delta e_{i,j}; indices 0-based, i != j
Mat transvection(std::shared_ptr<const gf::Field> field, int dim, int i,
                 int j, std::uint32_t delta);

// the three (l+1)x(l+1) generators of SL(l+1, q):
//   A: elementary transvection T_{0,1}(1)
//   B: signed cyclic shift, (-1)^l in the top-right corner
//   C: torus element diag(1/lambda, lambda, 1, ..., 1)
Mat gen_A(std::shared_ptr<const gf::Field> field, int l);
Mat gen_B(std::shared_ptr<const gf::Field> field, int l);
Mat gen_C(std::shared_ptr<const gf::Field> field, int l);

struct GenSet {
  int l = 0;
  std::shared_ptr<const gf::Field> field;
  std::vector<std::pair<std::string, Mat>> named;  // A, B, C and inverses
  std::vector<Mat> connection;  // deduplicated, identity removed
  int degree() const { return static_cast<int>(connection.size()); }
};

GenSet generating_set(std::shared_ptr<const gf::Field> field, int l);

// |SL(n, q)| = prod_{i=0}^{n-1} (q^n - q^i) / (q - 1); throws on overflow
unsigned __int128 sl_order_wide(int n, std::uint64_t q);
std::uint64_t sl_order(int n, std::uint64_t q);  // throws if beyond 2^64
std::string u128_str(unsigned __int128 v);

}  // namespace cayley::sl

#include "cayley/slgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley::sl {

Mat transvection(std::shared_ptr<const gf::Field> field, int dim, int i,
                 int j, std::uint32_t delta) {
  if (i == j) throw std::invalid_argument("transvection needs i != j");
  if (i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::invalid_argument("transvection index out of range");
  Mat m = Mat::identity(field, dim);
  m.set(i, j, field->addc(m.at(i, j), delta));
  return m;
}

Mat gen_A(std::shared_ptr<const gf::Field> field, int l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  return transvection(field, l + 1, 0, 1, 1 % field->q());
}

Mat gen_B(std::shared_ptr<const gf::Field> field, int l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  Mat m(field, l + 1);
  const gf::Field& F = *field;
  const std::uint32_t one = 1 % F.q();
  const std::uint32_t corner = (l % 2 == 0) ? one : F.negc(one);
  m.set(0, l, corner);
  for (int i = 1; i <= l; ++i) m.set(i, i - 1, one);
  return m;
}

Mat gen_C(std::shared_ptr<const gf::Field> field, int l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  Mat m = Mat::identity(field, l + 1);
  const std::uint32_t lambda = field->primitive().code;
  m.set(0, 0, field->invc(lambda));
  m.set(1, 1, lambda);
  return m;
}

GenSet generating_set(std::shared_ptr<const gf::Field> field, int l) {
  GenSet g;
  g.l = l;
  g.field = field;
  const Mat A = gen_A(field, l);
  const Mat B = gen_B(field, l);
  const Mat C = gen_C(field, l);
  g.named.emplace_back("A", A);
  g.named.emplace_back("A^-1", A.inverse());
  g.named.emplace_back("B", B);
  g.named.emplace_back("B^-1", B.inverse());
  g.named.emplace_back("C", C);
  g.named.emplace_back("C^-1", C.inverse());
  for (const auto& [name, m] : g.named) {
    if (m.is_identity()) continue;
    if (std::find(g.connection.begin(), g.connection.end(), m) ==
        g.connection.end())
      g.connection.push_back(m);
  }
  return g;
}

unsigned __int128 sl_order_wide(int n, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  using u128 = unsigned __int128;
  const u128 limit = ~static_cast<u128>(0);
  u128 qn = 1;
  for (int i = 0; i < n; ++i) {
    if (qn > limit / q) throw std::overflow_error("group order overflow");
    qn *= q;
  }
  u128 order = 1;
  u128 qi = 1;
  for (int i = 0; i < n; ++i) {
    const u128 factor = qn - qi;
    if (factor != 0 && order > limit / factor)
      throw std::overflow_error("group order overflow");
    order *= factor;
    qi *= q;
  }
  return order / (q - 1);
}

std::uint64_t sl_order(int n, std::uint64_t q) {
  const unsigned __int128 wide = sl_order_wide(n, q);
  if (wide > ~static_cast<std::uint64_t>(0))
    throw std::overflow_error("group order beyond 64 bits");
  return static_cast<std::uint64_t>(wide);
}

std::string u128_str(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace cayley::sl

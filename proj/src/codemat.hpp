// Internal flat-code matrices for the hot kernels. No shared state, no
// per-product allocations once scratch buffers exist, so worker threads do
// not contend on anything.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/gf.hpp"

namespace cayley::sl::detail {

struct CodeMat {
  int dim = 0;
  std::vector<std::uint32_t> e;

  void resize(int d) {
    dim = d;
    e.assign(static_cast<std::size_t>(d) * d, 0);
  }
  std::uint32_t at(int i, int j) const { return e[i * dim + j]; }
};

inline void decode_into(const gf::Field& F, int dim, const char* bytes,
                        CodeMat& out) {
  out.resize(dim);
  const std::uint32_t p = F.p();
  const std::uint32_t k = F.k();
  std::size_t pos = 0;
  for (auto& code : out.e) {
    std::uint32_t c = 0, pw = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t digit;
      if (p <= 256) {
        digit = static_cast<unsigned char>(bytes[pos++]);
      } else {
        digit = 0;
        for (int b = 0; b < 4; ++b)
          digit |= static_cast<std::uint32_t>(
                       static_cast<unsigned char>(bytes[pos++]))
                   << (8 * b);
      }
      c += digit * pw;
      pw *= p;
    }
    code = c;
  }
}

// out = a * b; out must not alias a or b
inline void mul_into(const gf::Field& F, const CodeMat& a, const CodeMat& b,
                     CodeMat& out) {
  const int d = a.dim;
  out.resize(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const std::uint32_t av = a.e[i * d + k];
      if (av == 0) continue;
      for (int j = 0; j < d; ++j) {
        const std::uint32_t bv = b.e[k * d + j];
        if (bv == 0) continue;
        out.e[i * d + j] = F.addc(out.e[i * d + j], F.mulc(av, bv));
      }
    }
  }
}

inline void serialize_into(const gf::Field& F, const CodeMat& m,
                           std::string& out) {
  out.clear();
  for (std::uint32_t code : m.e) F.append_digits(code, out);
}

}  // namespace cayley::sl::detail

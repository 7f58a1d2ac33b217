#include "cayley/matgf.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley::sl {

Mat::Mat(std::shared_ptr<const gf::Field> field, int dim)
    : field_(std::move(field)), dim_(dim),
      e_(static_cast<std::size_t>(dim) * dim, 0) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

Mat Mat::identity(std::shared_ptr<const gf::Field> field, int dim) {
  Mat m(std::move(field), dim);
  const std::uint32_t one = 1 % m.field().q();
  for (int i = 0; i < dim; ++i) m.set(i, i, one);
  return m;
}

void Mat::set(int i, int j, const gf::Elem& v) {
  if (v.field_key != field_->key())
    throw std::invalid_argument("matrix entry from a different field");
  set(i, j, v.code);
}

Mat Mat::mul(const Mat& o) const {
  if (o.dim_ != dim_ || o.field_->key() != field_->key())
    throw std::invalid_argument("matrix shape/field mismatch in mul");
  const gf::Field& F = *field_;
  Mat r(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const std::uint32_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        const std::uint32_t b = o.at(k, j);
        if (b == 0) continue;
        r.e_[i * dim_ + j] = F.addc(r.e_[i * dim_ + j], F.mulc(a, b));
      }
    }
  }
  return r;
}

Mat Mat::inverse() const {
  const gf::Field& F = *field_;
  Mat a(*this);
  Mat inv = identity(field_, dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) {
        std::swap(a.e_[pivot * dim_ + j], a.e_[col * dim_ + j]);
        std::swap(inv.e_[pivot * dim_ + j], inv.e_[col * dim_ + j]);
      }
    }
    const std::uint32_t s = F.invc(a.at(col, col));
    for (int j = 0; j < dim_; ++j) {
      a.e_[col * dim_ + j] = F.mulc(a.e_[col * dim_ + j], s);
      inv.e_[col * dim_ + j] = F.mulc(inv.e_[col * dim_ + j], s);
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col) continue;
      const std::uint32_t f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        a.e_[r * dim_ + j] =
            F.subc(a.e_[r * dim_ + j], F.mulc(f, a.e_[col * dim_ + j]));
        inv.e_[r * dim_ + j] =
            F.subc(inv.e_[r * dim_ + j], F.mulc(f, inv.e_[col * dim_ + j]));
      }
    }
  }
  return inv;
}

Mat Mat::pow(int e) const {
  Mat base = e >= 0 ? *this : inverse();
  int n = e >= 0 ? e : -e;
  Mat r = identity(field_, dim_);
  while (n) {
    if (n & 1) r = r.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return r;
}

std::uint32_t Mat::det() const {
  const gf::Field& F = *field_;
  Mat a(*this);
  std::uint32_t d = 1 % F.q();
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j)
        std::swap(a.e_[pivot * dim_ + j], a.e_[col * dim_ + j]);
      d = F.negc(d);
    }
    d = F.mulc(d, a.at(col, col));
    const std::uint32_t s = F.invc(a.at(col, col));
    for (int r = col + 1; r < dim_; ++r) {
      const std::uint32_t f = F.mulc(a.at(r, col), s);
      if (f == 0) continue;
      for (int j = col; j < dim_; ++j)
        a.e_[r * dim_ + j] =
            F.subc(a.e_[r * dim_ + j], F.mulc(f, a.e_[col * dim_ + j]));
    }
  }
  return d;
}

bool Mat::is_identity() const { return *this == identity(field_, dim_); }

void Mat::serialize(std::string& out) const {
  for (std::uint32_t code : e_) field_->append_digits(code, out);
}

std::string Mat::serialized() const {
  std::string s;
  s.reserve(e_.size() * field_->digit_bytes());
  serialize(s);
  return s;
}

Mat Mat::deserialize(std::shared_ptr<const gf::Field> field, int dim,
                     const char* bytes) {
  Mat m(field, dim);
  const gf::Field& F = m.field();
  const std::uint32_t p = F.p();
  const std::uint32_t k = F.k();
  std::size_t pos = 0;
  for (auto& code : m.e_) {
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
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < dim_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace cayley::sl

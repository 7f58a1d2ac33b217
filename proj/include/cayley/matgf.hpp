#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cayley/gf.hpp"

namespace cayley::sl {

// Square matrix over GF(q). Entries are canonical element codes, row-major;
// equality of matrices is equality of the code vectors.
class Mat {
 public:
  Mat(std::shared_ptr<const gf::Field> field, int dim);

  static Mat identity(std::shared_ptr<const gf::Field> field, int dim);

  int dim() const { return dim_; }
  const gf::Field& field() const { return *field_; }
  std::shared_ptr<const gf::Field> field_ptr() const { return field_; }

  std::uint32_t at(int i, int j) const { return e_[i * dim_ + j]; }
  void set(int i, int j, std::uint32_t code) { e_[i * dim_ + j] = code; }
  void set(int i, int j, const gf::Elem& v);

  Mat mul(const Mat& o) const;
  Mat inverse() const;     // Gauss-Jordan; throws if singular
  Mat pow(int e) const;    // negative exponents via inverse
  std::uint32_t det() const;
  bool is_identity() const;

  // canonical serialization: row-major entry digit strings
  void serialize(std::string& out) const;
  std::string serialized() const;
  static Mat deserialize(std::shared_ptr<const gf::Field> field, int dim,
                         const char* bytes);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.dim_ == b.dim_ && a.field_->key() == b.field_->key() &&
           a.e_ == b.e_;
  }

  std::string str() const;  // debugging aid

 private:
  std::shared_ptr<const gf::Field> field_;
  int dim_;
  std::vector<std::uint32_t> e_;
};

}  // namespace cayley::sl

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "joindet/digraph.hpp"

namespace joindet {

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<int>& signs);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return mat_mul(a, b);
}
IntMatrix operator*(const mpz_class& scalar, const IntMatrix& a);

// a . b under the sandwich product x • y = x e y.
IntMatrix sandwich_product(const IntMatrix& a, const IntMatrix& e,
                           const IntMatrix& b);

// a (e a)^n, with (e a)^n computed by repeated squaring.
IntMatrix sandwich_power(const IntMatrix& a, const IntMatrix& e,
                         unsigned long long n);

// Exact determinant; the empty 0x0 matrix has determinant 1.
mpz_class det_exact(const IntMatrix& a);

IntMatrix adjacency_matrix(const Digraph& g);
mpz_class graph_det(const Digraph& g);

// Rows of space-separated decimal integers, one row per line.
std::string to_text(const IntMatrix& a);
// {"rows":k,"cols":k,"entries":[[...],...]} with exact integer literals.
std::string to_json(const IntMatrix& a);

namespace detail {

// Fraction-free elimination over mpz; always applicable.
mpz_class det_bareiss_mpz(IntMatrix a);

// True when the Hadamard bound keeps every elimination intermediate
// inside int64 (so products fit __int128 and the fast path is exact).
bool fits_small_det(const IntMatrix& a);

// Same elimination carried out in int64/__int128. Caller must have
// checked fits_small_det.
std::int64_t det_bareiss_small(const IntMatrix& a);

}  // namespace detail

}  // namespace joindet

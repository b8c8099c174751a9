#include "joindet/int_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace joindet {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<int>& signs) {
  IntMatrix m(signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) m.at(i, i) = signs[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const mpz_class& e : entries_)
    if (e != 0) return false;
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  mpz_class term;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        term = aik * b.at(k, j);
        out.at(i, j) += term;
      }
    }
  return out;
}

IntMatrix operator*(const mpz_class& scalar, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = scalar * a.at(i, j);
  return out;
}

IntMatrix sandwich_product(const IntMatrix& a, const IntMatrix& e,
                           const IntMatrix& b) {
  return mat_mul(mat_mul(a, e), b);
}

IntMatrix sandwich_power(const IntMatrix& a, const IntMatrix& e,
                         unsigned long long n) {
  if (a.rows() != a.cols() || e.rows() != e.cols() || a.rows() != e.rows())
    throw std::invalid_argument("sandwich power needs square matrices of one size");
  IntMatrix base = mat_mul(e, a);
  IntMatrix acc = IntMatrix::identity(a.rows());
  while (n > 0) {
    if (n & 1ULL) acc = mat_mul(acc, base);
    n >>= 1;
    if (n > 0) base = mat_mul(base, base);
  }
  return mat_mul(a, acc);
}

namespace detail {

mpz_class det_bareiss_mpz(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  mpz_class num;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      sign = -sign;
      for (std::size_t j = k; j < n; ++j)
        std::swap(a.at(pivot, j), a.at(k, j));
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign < 0 ? mpz_class(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

bool fits_small_det(const IntMatrix& a) {
  // Hadamard: |any minor| <= prod_i max(1, ||row_i||_2). Keeping that
  // below 2^59 keeps every elimination intermediate in int64 and every
  // cross product in __int128.
  double log_bound = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const mpz_class& e = a.at(i, j);
      if (!e.fits_slong_p()) return false;
      const double v = static_cast<double>(e.get_si());
      row += v * v;
    }
    if (!std::isfinite(row)) return false;
    if (row > 1.0) log_bound += 0.5 * std::log2(row);
    if (log_bound > 59.0) return false;
  }
  return true;
}

std::int64_t det_bareiss_small(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::int64_t> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = a.at(i, j).get_si();

  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      sign = -sign;
      for (std::size_t j = k; j < n; ++j)
        std::swap(m[pivot * n + j], m[k * n + j]);
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num =
            static_cast<__int128>(m[k * n + k]) * m[i * n + j] -
            static_cast<__int128>(m[i * n + k]) * m[k * n + j];
        m[i * n + j] = static_cast<std::int64_t>(num / prev);
      }
    prev = m[k * n + k];
  }
  return sign < 0 ? -m[n * n - 1] : m[n * n - 1];
}

}  // namespace detail

mpz_class det_exact(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant needs a square matrix");
  if (a.rows() == 0) return 1;
  if (detail::fits_small_det(a))
    return mpz_class(static_cast<long>(detail::det_bareiss_small(a)));
  return detail::det_bareiss_mpz(a);
}

IntMatrix adjacency_matrix(const Digraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  IntMatrix a(n, n);
  for (const Edge& e : g.edges()) a.at(e.from - 1, e.to - 1) = 1;
  return a;
}

mpz_class graph_det(const Digraph& g) { return det_exact(adjacency_matrix(g)); }

std::string to_text(const IntMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a.at(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const IntMatrix& a) {
  std::string out = "{\"rows\":" + std::to_string(a.rows()) +
                    ",\"cols\":" + std::to_string(a.cols()) + ",\"entries\":[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += a.at(i, j).get_str();
    }
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace joindet

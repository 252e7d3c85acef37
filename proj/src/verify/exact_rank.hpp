#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "framekit/types.hpp"

namespace framekit::exact {

using Rational = boost::multiprecision::cpp_rational;

/// a + b i with rational parts.
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    const Gaussian n = a * b.conj();
    return {n.re / d, n.im / d};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline Gaussian conj(const Gaussian& x) { return x.conj(); }

template <class F>
using Table = std::vector<std::vector<F>>;

/// Rank by fraction-exact Gaussian elimination.
template <class F>
Index rank(Table<F> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      const F factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    ++r;
  }
  return static_cast<Index>(r);
}

template <class F>
Table<F> multiply(const Table<F>& a, const Table<F>& b) {
  Table<F> out(a.size(), std::vector<F>(b.front().size(), F(Rational(0))));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
  return out;
}

template <class F>
Table<F> adjoint(const Table<F>& a) {
  Table<F> out(a.front().size(), std::vector<F>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.front().size(); ++j) out[j][i] = conj(a[i][j]);
  return out;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline cdouble to_double(const Gaussian& x) { return {x.re.convert_to<double>(), x.im.convert_to<double>()}; }

template <class F>
auto to_matrix(const Table<F>& a) {
  using S = decltype(to_double(std::declval<F>()));
  Matrix<S> m(static_cast<Index>(a.size()), static_cast<Index>(a.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.front().size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = to_double(a[i][j]);
  return m;
}

}  // namespace framekit::exact

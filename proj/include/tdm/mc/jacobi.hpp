#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "tdm/errors.hpp"

namespace tdm::mc {

/// Square matrix in row-major order.
template <class T>
struct DenseMatrix {
  int n = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  explicit DenseMatrix(int size) : n(size), data(static_cast<std::size_t>(size) * size) {}
  T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

namespace detail {

inline double conj_of(double x) { return x; }
inline std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

}  // namespace detail

/// Eigenvalues of a real symmetric or complex Hermitian matrix by cyclic Jacobi sweeps.
/// Complex pivots are first made real by a diagonal phase, then rotated as in the real case.
template <class T>
std::vector<double> eigvals_symmetric(DenseMatrix<T> a, int max_sweeps = 100) {
  const int n = a.n;
  if (n < 0 || n > 256) throw Error("matrix dimension out of range");
  double scale = 0;
  double frob = 0;
  for (const T& v : a.data) {
    scale = std::max(scale, std::abs(v));
    frob += std::norm(v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(a(i, j) - detail::conj_of(a(j, i))) > 1e-10 * std::max(scale, 1e-300)) {
        throw Error("matrix is not symmetric");
      }
    }
  }
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return s;
  };
  const double target = 1e-24 * frob;  // squared: off-diagonal norm below 1e-12 relative
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > max_sweeps) throw Error("Jacobi iteration did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double r = std::abs(a(p, q));
        if (r == 0) continue;
        if constexpr (std::is_same_v<T, double>) {
          r = a(p, q);  // the real pivot keeps its sign
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          const T ph = a(p, q) / r;
          for (int k = 0; k < n; ++k) {
            a(k, q) *= std::conj(ph);
            a(q, k) *= ph;
          }
          a(p, q) = r;
          a(q, p) = r;
        }
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1 + theta * theta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const T akp = a(k, p);
          const T akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          a(p, k) = detail::conj_of(a(k, p));
          a(q, k) = detail::conj_of(a(k, q));
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0;
        a(q, p) = 0;
      }
    }
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(std::real(a(i, i)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tdm::mc

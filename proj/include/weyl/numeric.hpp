#ifndef WEYL_NUMERIC_HPP
#define WEYL_NUMERIC_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Thrown by floating-point procedures that fail to converge; carries the
/// best residual reached.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

using DMat = std::vector<std::vector<double>>;

/// Coefficients a_1..a_n of det(xI - A) = x^n + sum (-1)^i a_i x^{n-i},
/// Faddeev-LeVerrier in doubles.
inline std::vector<double> char_poly_d(const DMat& a) {
  std::size_t n = a.size();
  std::vector<double> coeffs;
  coeffs.reserve(n);
  DMat b(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1.0;
  double sign = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    DMat m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][l] * b[l][j];
      }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
    double bk = -tr / static_cast<double>(k);
    sign = -sign;
    coeffs.push_back(sign * bk);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += bk;
    b = std::move(m);
  }
  return coeffs;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(DMat a, int max_sweeps = 64) {
  std::size_t n = a.size();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

/// Simultaneous root refinement (Aberth-Ehrlich) for a monic complex
/// polynomial x^n + coeffs[0] x^{n-1} + ... + coeffs[n-1].
inline std::vector<ComplexFloat> aberth_roots(const std::vector<ComplexFloat>& coeffs,
                                              int max_iter = 200, double tol = 1e-12) {
  int n = static_cast<int>(coeffs.size());
  if (n == 0) return {};
  auto eval = [&](ComplexFloat x, ComplexFloat& p, ComplexFloat& dp) {
    p = 1.0;
    dp = 0.0;
    for (int i = 0; i < n; ++i) {
      dp = dp * x + p;
      p = p * x + coeffs[i];
    }
  };
  double radius = 0.0;
  for (const auto& c : coeffs) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;  // Cauchy bound
  std::vector<ComplexFloat> z(n);
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * M_PI * i / n + 0.4;
    z[i] = radius * ComplexFloat(std::cos(ang), std::sin(ang));
  }
  double worst = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    worst = 0.0;
    for (int i = 0; i < n; ++i) {
      ComplexFloat p, dp;
      eval(z[i], p, dp);
      worst = std::max(worst, std::abs(p));
      if (std::abs(p) <= tol) continue;
      ComplexFloat newton = dp == ComplexFloat(0.0) ? ComplexFloat(tol) : p / dp;
      ComplexFloat sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      ComplexFloat denom = 1.0 - newton * sum;
      z[i] -= denom == ComplexFloat(0.0) ? newton : newton / denom;
    }
    if (worst <= tol) return z;
  }
  // residual check once more: the last correction may have landed
  worst = 0.0;
  for (int i = 0; i < n; ++i) {
    ComplexFloat p, dp;
    eval(z[i], p, dp);
    worst = std::max(worst, std::abs(p));
  }
  if (worst <= tol) return z;
  throw NumericError("root finder did not converge", worst);
}

}  // namespace weyl

#endif  // WEYL_NUMERIC_HPP

#ifndef WEYL_MPOLY_HPP
#define WEYL_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Sparse multivariate polynomial over Q with nonnegative integer exponents.
class MPoly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rational>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly constant(int nvars, Rational c);
  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, Exponent exp, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;

  Rational coefficient(const Exponent& exp) const;
  void add_term(const Exponent& exp, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& c) const;
  MPoly pow(int k) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  Rational eval(const RatVec& point) const;
  double eval_d(const std::vector<double>& point) const;
  GaussianRational eval_g(const std::vector<GaussianRational>& point) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void check_arity(const MPoly& o) const;
  int nvars_;
  TermMap terms_;
};

using MPolyMat = std::vector<std::vector<MPoly>>;

/// Symmetric matrix of polynomials; only the upper triangle is stored.
class SymMatrixPoly {
 public:
  SymMatrixPoly() = default;
  SymMatrixPoly(int n, int nvars);

  int dim() const { return n_; }
  const MPoly& entry(int i, int j) const;
  void set_entry(int i, int j, MPoly p);

  RatMat eval(const RatVec& point) const;
  std::vector<std::vector<double>> eval_d(const std::vector<double>& point) const;

  MPolyMat to_full() const;

 private:
  int n_ = 0;
  std::vector<MPoly> upper_;  // row-major upper triangle, i <= j
};

/// Coefficients a_1..a_n with det(xI - A) = x^n + sum_i (-1)^i a_i x^{n-i}.
struct CharPoly {
  std::vector<Rational> a;

  int degree() const { return static_cast<int>(a.size()); }
  /// Number of nonzero eigenvalues of a symmetric matrix: index of the last
  /// nonzero coefficient.
  int rank() const;
  bool all_nonnegative() const;
  Rational determinant() const { return a.empty() ? Rational(1) : a.back(); }
};

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence.
CharPoly char_poly(const RatMat& a);

Rational det_rational(const RatMat& a);

struct PsdVerdict {
  bool psd = false;
  int rank = 0;
  CharPoly coeffs;
};

/// Exact positive-semidefiniteness decision for a symmetric rational matrix:
/// PSD iff every a_i of the characteristic polynomial is nonnegative.
PsdVerdict psd_test(const RatMat& a);

enum class TraceMethod { Auto, ExplicitPowers, NewtonIdentities };

/// trace(C^0), ..., trace(C^kmax) for a square polynomial matrix.
std::vector<MPoly> matrix_poly_power_traces(const MPolyMat& c, int kmax,
                                            TraceMethod method = TraceMethod::Auto);

/// Symbolic characteristic polynomial coefficients b_1..b_n with
/// det(xI - C) = x^n + b_1 x^{n-1} + ... + b_n.
std::vector<MPoly> char_poly_sym(const MPolyMat& c);

/// Symbolic determinant (Laplace expansion over column subsets).
MPoly det_sym(const MPolyMat& c);

MPolyMat mpoly_mat_mul(const MPolyMat& a, const MPolyMat& b);
MPoly mpoly_mat_trace(const MPolyMat& a);
RatMat evaluate_mat(const MPolyMat& m, const RatVec& point);
std::vector<std::vector<double>> evaluate_mat_d(const MPolyMat& m,
                                                const std::vector<double>& point);

}  // namespace weyl

#endif  // WEYL_MPOLY_HPP

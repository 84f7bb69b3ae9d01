#ifndef WEYL_LAURENT_HPP
#define WEYL_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "weyl/mpoly.hpp"
#include "weyl/rational.hpp"
#include "weyl/rootdata.hpp"

namespace weyl {

/// Sparse Laurent polynomial: integer exponent vectors with rational
/// coefficients. The group acts on exponents through integer matrices.
class LaurentPoly {
 public:
  using TermMap = std::map<IntVec, Rational>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, Rational c);
  static LaurentPoly monomial(int nvars, IntVec exp, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const IntVec& exp) const;
  void add_term(const IntVec& exp, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(int k) const;  // k >= 0

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// x_i d/dx_i applied termwise.
  LaurentPoly euler_derivative(int i) const;

  /// Substitution x -> x^{-1} in every coordinate.
  LaurentPoly hat() const;

  GaussianRational eval(const std::vector<CirclePoint>& x) const;
  ComplexFloat eval_c(const std::vector<ComplexFloat>& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Monomial substitution x^alpha -> x^{B alpha}.
LaurentPoly act(const IntMat& b, const LaurentPoly& f);

bool is_invariant(const RootSystemData& d, const LaurentPoly& f);

/// Normalized orbit sum (1/|G|) sum_B x^{B alpha}.
LaurentPoly orbit_polynomial(const RootSystemData& d, const IntVec& alpha,
                             std::size_t cap = kDefaultOrbitCap);

/// The fundamental invariants: orbit polynomials of the unit vectors.
std::vector<LaurentPoly> fundamental_invariants(const RootSystemData& d);

/// Signed orbit sum sum_B det(B) x^{B alpha}; identically zero when alpha
/// lies on a reflection wall.
LaurentPoly anti_invariant(const RootSystemData& d, const IntVec& alpha,
                           std::size_t cap = kDefaultOrbitCap);

/// The order-2 permutation with act(-I, theta_i) = theta_{sigma(i)}.
std::vector<int> conjugation_permutation(const RootSystemData& d);

/// Coordinates of an invariant in the orbit-polynomial basis, keyed by
/// dominant exponent vectors.
using InvariantExpansion = std::map<IntVec, Rational>;

/// Expansion of orb_alpha * orb_beta in the orbit-polynomial basis.
InvariantExpansion orbit_product_expand(const RootSystemData& d, const IntVec& alpha,
                                        const IntVec& beta, std::size_t cap = kDefaultOrbitCap);

/// Collects an invariant Laurent polynomial into the orbit-polynomial basis.
InvariantExpansion collect_orbits(const RootSystemData& d, const LaurentPoly& f);

/// Expresses a G-invariant Laurent polynomial as a polynomial in the
/// fundamental invariants, by repeated subtraction of the leading dominant
/// term. Throws std::invalid_argument for non-invariant input.
MPoly rewrite_in_fundamental(const RootSystemData& d, const LaurentPoly& f,
                             std::size_t iteration_cap = 200000);

/// P(theta_1, ..., theta_n) expanded back to a Laurent polynomial.
LaurentPoly expand_in_fundamental(const RootSystemData& d, const MPoly& p);

/// P(theta_1, ..., theta_n) in the orbit-polynomial basis; cheaper than the
/// full Laurent expansion and equivalent for equality checks.
InvariantExpansion expand_in_orbit_basis(const RootSystemData& d, const MPoly& p);

/// Exact quotient f / g; throws std::logic_error when the division leaves a
/// remainder (cannot happen for character quotients).
LaurentPoly divide_exact(const RootSystemData& d, const LaurentPoly& f, const LaurentPoly& g);

}  // namespace weyl

#endif  // WEYL_LAURENT_HPP

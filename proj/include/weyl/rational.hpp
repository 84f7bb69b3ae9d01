#ifndef WEYL_RATIONAL_HPP
#define WEYL_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weyl {

using Integer = mpz_class;
using ComplexFloat = std::complex<double>;

class Rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP keeps the canonical form).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) {}

  /// Parses "p", "p/q" or a plain decimal integer string.
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational pow(long k) const {
    if (k == 0) return Rational(1);
    if (is_zero() && k < 0) throw std::domain_error("Rational: 0^negative");
    mpq_class base = k > 0 ? q_ : mpq_class(q_.get_den(), q_.get_num());
    base.canonicalize();
    unsigned long e = k > 0 ? static_cast<unsigned long>(k)
                            : static_cast<unsigned long>(-k);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return Rational(r);
  }

 private:
  mpq_class q_;
};

inline Rational inverse(const Rational& a) { return Rational(1) / a; }

/// Element of Q(i).
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

  GaussianRational inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  ComplexFloat to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Point on the unit circle with exact Gaussian-rational coordinates
/// (re^2 + im^2 = 1 identically); inversion is conjugation.
class CirclePoint {
 public:
  CirclePoint() : v_(Rational(1)) {}
  explicit CirclePoint(GaussianRational v) : v_(std::move(v)) {
    if (v_.norm() != Rational(1))
      throw std::invalid_argument("CirclePoint: |x|^2 != 1");
  }

  const GaussianRational& value() const { return v_; }
  const Rational& re() const { return v_.re; }
  const Rational& im() const { return v_.im; }

  CirclePoint conj() const { return CirclePoint(v_.conj(), unchecked_tag{}); }
  CirclePoint inverse() const { return conj(); }

  friend CirclePoint operator*(const CirclePoint& a, const CirclePoint& b) {
    return CirclePoint(a.v_ * b.v_, unchecked_tag{});
  }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.v_ == b.v_; }
  friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return a.v_ != b.v_; }

  ComplexFloat to_complex() const { return v_.to_complex(); }

 private:
  struct unchecked_tag {};
  CirclePoint(GaussianRational v, unchecked_tag) : v_(std::move(v)) {}
  friend CirclePoint circle_from_tangent(const Rational&);
  friend CirclePoint circle_pow(const CirclePoint&, long);

  GaussianRational v_;
};

/// Rational parametrization of the circle: t -> ((1-t^2) + 2t i)/(1+t^2).
/// Hits every point except -1; t = 0 gives 1.
inline CirclePoint circle_from_tangent(const Rational& t) {
  Rational t2 = t * t;
  Rational den = Rational(1) + t2;
  return CirclePoint(GaussianRational((Rational(1) - t2) / den, (t + t) / den),
                     CirclePoint::unchecked_tag{});
}

/// Exact integer power; negative exponents go through conjugation.
inline CirclePoint circle_pow(const CirclePoint& x, long k) {
  GaussianRational base = k >= 0 ? x.value() : x.value().conj();
  unsigned long e = k >= 0 ? static_cast<unsigned long>(k)
                           : static_cast<unsigned long>(-k);
  GaussianRational acc{Rational(1)};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return CirclePoint(std::move(acc), CirclePoint::unchecked_tag{});
}

}  // namespace weyl

#endif  // WEYL_RATIONAL_HPP

#include "weyl/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weyl {

MPoly MPoly::constant(int nvars, Rational c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("MPoly::variable: index");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), Rational(1));
}

MPoly MPoly::monomial(int nvars, Exponent exp, Rational c) {
  MPoly p(nvars);
  p.add_term(exp, c);
  return p;
}

long MPoly::total_degree() const {
  long deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0L));
  return deg;
}

Rational MPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& exp, const Rational& c) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("MPoly::add_term: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_arity(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
}

MPoly MPoly::operator-() const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_arity(b);
  MPoly out(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  MPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [e, coef] : terms_) p.terms_.emplace(e, coef * c);
  return p;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly acc = constant(nvars_, Rational(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

namespace {

template <typename Scalar, typename FromRat>
Scalar eval_generic(const MPoly::TermMap& terms, int nvars, const std::vector<Scalar>& point,
                    FromRat from_rat) {
  if (static_cast<int>(point.size()) != nvars)
    throw std::invalid_argument("MPoly::eval: arity mismatch");
  // power tables per variable
  std::vector<int> maxdeg(nvars, 0);
  for (const auto& [e, c] : terms)
    for (int i = 0; i < nvars; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
  std::vector<std::vector<Scalar>> pows(nvars);
  for (int i = 0; i < nvars; ++i) {
    pows[i].reserve(maxdeg[i] + 1);
    pows[i].push_back(from_rat(Rational(1)));
    for (int k = 1; k <= maxdeg[i]; ++k) pows[i].push_back(pows[i].back() * point[i]);
  }
  Scalar sum = from_rat(Rational(0));
  for (const auto& [e, c] : terms) {
    Scalar t = from_rat(c);
    for (int i = 0; i < nvars; ++i)
      if (e[i] > 0) t = t * pows[i][e[i]];
    sum = sum + t;
  }
  return sum;
}

}  // namespace

Rational MPoly::eval(const RatVec& point) const {
  return eval_generic<Rational>(terms_, nvars_, point, [](const Rational& r) { return r; });
}

double MPoly::eval_d(const std::vector<double>& point) const {
  return eval_generic<double>(terms_, nvars_, point,
                              [](const Rational& r) { return r.to_double(); });
}

GaussianRational MPoly::eval_g(const std::vector<GaussianRational>& point) const {
  return eval_generic<GaussianRational>(terms_, nvars_, point,
                                        [](const Rational& r) { return GaussianRational(r); });
}

std::string MPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads better
  std::vector<const std::pair<const Exponent, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* x, auto* y) {
    long dx = std::accumulate(x->first.begin(), x->first.end(), 0L);
    long dy = std::accumulate(y->first.begin(), y->first.end(), 0L);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  for (auto* t : ts) {
    const auto& [e, c] = *t;
    Rational coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    if (!any_var || coef != Rational(1)) os << coef.to_string();
    bool star = !any_var || coef != Rational(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << var << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

SymMatrixPoly::SymMatrixPoly(int n, int nvars) : n_(n) {
  upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, MPoly(nvars));
}

namespace {
inline std::size_t upper_index(int n, int i, int j) {
  // row-major upper triangle with i <= j
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 -
         i + static_cast<std::size_t>(j);
}
}  // namespace

const MPoly& SymMatrixPoly::entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  return upper_.at(upper_index(n_, i, j));
}

void SymMatrixPoly::set_entry(int i, int j, MPoly p) {
  if (i > j) std::swap(i, j);
  upper_.at(upper_index(n_, i, j)) = std::move(p);
}

RatMat SymMatrixPoly::eval(const RatVec& point) const {
  RatMat m(n_, RatVec(n_, Rational(0)));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m[i][j] = m[j][i] = entry(i, j).eval(point);
  return m;
}

std::vector<std::vector<double>> SymMatrixPoly::eval_d(const std::vector<double>& point) const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_, 0.0));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m[i][j] = m[j][i] = entry(i, j).eval_d(point);
  return m;
}

MPolyMat SymMatrixPoly::to_full() const {
  MPolyMat m(n_, std::vector<MPoly>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = entry(i, j);
  return m;
}

int CharPoly::rank() const {
  for (int i = static_cast<int>(a.size()); i >= 1; --i)
    if (!a[i - 1].is_zero()) return i;
  return 0;
}

bool CharPoly::all_nonnegative() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.sign() >= 0; });
}

namespace {

void check_square(const RatMat& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size();
  RatMat out(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

CharPoly char_poly(const RatMat& a) {
  check_square(a);
  int n = static_cast<int>(a.size());
  CharPoly cp;
  cp.a.reserve(n);
  RatMat b(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) b[i][i] = 1;
  Rational sign(1);
  for (int k = 1; k <= n; ++k) {
    RatMat m = rat_mat_mul(a, b);
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += m[i][i];
    Rational bk = -tr / Rational(k);  // coefficient of x^{n-k}
    sign = -sign;                     // (-1)^k
    cp.a.push_back(sign * bk);
    for (int i = 0; i < n; ++i) m[i][i] += bk;
    b = std::move(m);
  }
  return cp;
}

Rational det_rational(const RatMat& a) {
  if (a.empty()) return Rational(1);
  return char_poly(a).determinant();
}

PsdVerdict psd_test(const RatMat& a) {
  check_square(a);
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("psd_test: matrix is not symmetric");
  PsdVerdict v;
  v.coeffs = char_poly(a);
  v.psd = v.coeffs.all_nonnegative();
  v.rank = v.coeffs.rank();
  return v;
}

namespace {

void check_square_poly(const MPolyMat& c) {
  for (const auto& row : c)
    if (row.size() != c.size()) throw std::invalid_argument("polynomial matrix is not square");
}

int mat_nvars(const MPolyMat& c) { return c.empty() ? 0 : c[0][0].nvars(); }

}  // namespace

MPolyMat mpoly_mat_mul(const MPolyMat& a, const MPolyMat& b) {
  std::size_t n = a.size();
  int nv = mat_nvars(a);
  MPolyMat out(n, std::vector<MPoly>(n, MPoly(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  return out;
}

MPoly mpoly_mat_trace(const MPolyMat& a) {
  MPoly tr(mat_nvars(a));
  for (std::size_t i = 0; i < a.size(); ++i) tr += a[i][i];
  return tr;
}

std::vector<MPoly> char_poly_sym(const MPolyMat& c) {
  check_square_poly(c);
  int n = static_cast<int>(c.size());
  int nv = mat_nvars(c);
  std::vector<MPoly> coeffs;
  coeffs.reserve(n);
  MPolyMat b(n, std::vector<MPoly>(n, MPoly(nv)));
  MPoly one = MPoly::constant(nv, Rational(1));
  for (int i = 0; i < n; ++i) b[i][i] = one;
  for (int k = 1; k <= n; ++k) {
    MPolyMat m = mpoly_mat_mul(c, b);
    MPoly tr = mpoly_mat_trace(m);
    MPoly bk = tr.scaled(Rational(-1, k));
    coeffs.push_back(bk);
    for (int i = 0; i < n; ++i) m[i][i] += bk;
    b = std::move(m);
  }
  return coeffs;
}

std::vector<MPoly> matrix_poly_power_traces(const MPolyMat& c, int kmax, TraceMethod method) {
  check_square_poly(c);
  if (kmax < 0) throw std::invalid_argument("matrix_poly_power_traces: kmax < 0");
  int n = static_cast<int>(c.size());
  int nv = mat_nvars(c);
  if (method == TraceMethod::Auto)
    method = n >= 5 ? TraceMethod::NewtonIdentities : TraceMethod::ExplicitPowers;

  std::vector<MPoly> traces;
  traces.reserve(kmax + 1);
  traces.push_back(MPoly::constant(nv, Rational(n)));
  if (kmax == 0) return traces;

  if (method == TraceMethod::ExplicitPowers) {
    MPolyMat power = c;
    traces.push_back(mpoly_mat_trace(power));
    for (int k = 2; k <= kmax; ++k) {
      power = mpoly_mat_mul(power, c);
      traces.push_back(mpoly_mat_trace(power));
    }
    return traces;
  }

  // Newton's identities from the symbolic characteristic polynomial:
  // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k  (k <= n).
  std::vector<MPoly> b = char_poly_sym(c);
  std::vector<MPoly> e;
  e.reserve(n);
  for (int i = 1; i <= n; ++i) e.push_back(i % 2 == 1 ? -b[i - 1] : b[i - 1]);
  for (int k = 1; k <= kmax; ++k) {
    MPoly pk(nv);
    int imax = std::min(k - 1, n);
    for (int i = 1; i <= imax; ++i) {
      MPoly t = e[i - 1] * traces[k - i];
      if (i % 2 == 0) t = -t;
      pk += t;
    }
    if (k <= n) {
      MPoly t = e[k - 1].scaled(Rational(k));
      if (k % 2 == 0) t = -t;
      pk += t;
    }
    traces.push_back(std::move(pk));
  }
  return traces;
}

MPoly det_sym(const MPolyMat& c) {
  check_square_poly(c);
  int n = static_cast<int>(c.size());
  int nv = mat_nvars(c);
  if (n == 0) return MPoly::constant(nv, Rational(1));
  // DP over column subsets: after row i, minors[S] is the determinant of
  // rows 0..i against the columns of S taken in increasing order.
  std::map<unsigned, MPoly> minors;
  minors.emplace(0u, MPoly::constant(nv, Rational(1)));
  for (int i = 0; i < n; ++i) {
    std::map<unsigned, MPoly> next;
    for (const auto& [mask, minor] : minors) {
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        if (c[i][j].is_zero()) continue;
        int below = __builtin_popcount(mask & ((1u << j) - 1));
        MPoly contrib = minor * c[i][j];
        if ((i + below) % 2 == 1) contrib = -contrib;
        unsigned key = mask | (1u << j);
        auto it = next.find(key);
        if (it == next.end())
          next.emplace(key, std::move(contrib));
        else
          it->second += contrib;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find(n == 32 ? ~0u : (1u << n) - 1);
  return it == minors.end() ? MPoly(nv) : it->second;
}

RatMat evaluate_mat(const MPolyMat& m, const RatVec& point) {
  RatMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& p : m[i]) out[i].push_back(p.eval(point));
  }
  return out;
}

std::vector<std::vector<double>> evaluate_mat_d(const MPolyMat& m,
                                                const std::vector<double>& point) {
  std::vector<std::vector<double>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& p : m[i]) out[i].push_back(p.eval_d(point));
  }
  return out;
}

}  // namespace weyl

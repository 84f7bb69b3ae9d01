#include "weyl/orbitspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl {

namespace {

Rational binom_rat(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational neg2_pow(int i) {
  Rational r = Rational(2).pow(i);
  return i % 2 == 0 ? r : -r;
}

void check_rank(Family f, int rank) {
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::out_of_range("type A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw std::out_of_range("type B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 1) throw std::out_of_range("type C requires rank >= 1");
      break;
    case Family::D:
      if (rank < 3) throw std::out_of_range("type D requires rank >= 3");
      break;
  }
}

}  // namespace

bool RealEmbedding::is_identity() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Coord& c) { return c.im_sign == 0; });
}

RealEmbedding real_embedding(Family family, int rank) {
  check_rank(family, rank);
  RealEmbedding emb;
  emb.family = family;
  emb.rank = rank;
  emb.coords.resize(rank);
  for (int k = 0; k < rank; ++k) emb.coords[k] = {k, -1, 0};
  if (family == Family::A) {
    for (int k = 0; k < rank; ++k) {
      int partner = rank - 1 - k;
      if (k < partner)
        emb.coords[k] = {k, partner, +1};
      else if (k > partner)
        emb.coords[k] = {partner, k, -1};
    }
  } else if (family == Family::D && rank % 2 == 1) {
    emb.coords[rank - 2] = {rank - 1, rank - 2, -1};
    emb.coords[rank - 1] = {rank - 1, rank - 2, +1};
  }
  return emb;
}

std::vector<GaussianRational> RealEmbedding::to_complex(const RatVec& w) const {
  if (static_cast<int>(w.size()) != rank)
    throw std::invalid_argument("RealEmbedding: wrong arity");
  std::vector<GaussianRational> z(rank);
  for (int k = 0; k < rank; ++k) {
    const Coord& c = coords[k];
    z[k] = c.im_sign == 0 ? GaussianRational(w[c.re_idx])
                          : GaussianRational(w[c.re_idx], Rational(c.im_sign) * w[c.im_idx]);
  }
  return z;
}

std::vector<ComplexFloat> RealEmbedding::to_complex_d(const std::vector<double>& w) const {
  if (static_cast<int>(w.size()) != rank)
    throw std::invalid_argument("RealEmbedding: wrong arity");
  std::vector<ComplexFloat> z(rank);
  for (int k = 0; k < rank; ++k) {
    const Coord& c = coords[k];
    z[k] = ComplexFloat(w[c.re_idx], c.im_sign == 0 ? 0.0 : c.im_sign * w[c.im_idx]);
  }
  return z;
}

RatVec RealEmbedding::from_complex(const std::vector<GaussianRational>& z) const {
  if (static_cast<int>(z.size()) != rank)
    throw std::invalid_argument("RealEmbedding: wrong arity");
  RatVec w(rank, Rational(0));
  for (int k = 0; k < rank; ++k) {
    const Coord& c = coords[k];
    if (c.im_sign == 0)
      w[c.re_idx] = z[k].re;
    else if (c.im_sign > 0) {
      w[c.re_idx] = z[k].re;
      w[c.im_idx] = z[k].im;
    }
  }
  if (to_complex(w) != z)
    throw std::invalid_argument("RealEmbedding: value violates the conjugation structure");
  return w;
}

std::vector<double> RealEmbedding::from_complex_d(const std::vector<ComplexFloat>& z) const {
  if (static_cast<int>(z.size()) != rank)
    throw std::invalid_argument("RealEmbedding: wrong arity");
  std::vector<double> w(rank, 0.0);
  for (int k = 0; k < rank; ++k) {
    const Coord& c = coords[k];
    if (c.im_sign == 0)
      w[c.re_idx] = z[k].real();
    else if (c.im_sign > 0) {
      w[c.re_idx] = z[k].real();
      w[c.im_idx] = z[k].imag();
    }
  }
  return w;
}

CoefficientMap symmetric_system_coeffs(Family family, int rank) {
  check_rank(family, rank);
  CoefficientMap cm;
  cm.family = family;
  cm.rank = rank;

  if (family == Family::A) {
    int n = rank + 1;
    cm.n = n;
    cm.chebyshev_basis = true;
    cm.trace_scale = 1;
    RealEmbedding emb = real_embedding(family, rank);
    struct CP {
      MPoly re, im;
    };
    std::vector<CP> c(n + 1, CP{MPoly(rank), MPoly(rank)});
    c[0].re = MPoly::constant(rank, Rational(1));
    c[n].re = MPoly::constant(rank, Rational(n % 2 == 0 ? 1 : -1));
    for (int i = 1; i < n; ++i) {
      Rational s = binom_rat(n, i);
      if (i % 2 == 1) s = -s;
      const auto& co = emb.coords[i - 1];
      c[i].re = MPoly::variable(rank, co.re_idx).scaled(s);
      if (co.im_sign != 0)
        c[i].im = MPoly::variable(rank, co.im_idx).scaled(s * Rational(co.im_sign));
    }
    // d_l = sum_i c_i * conj(c_{l-i}); real on the embedded subspace
    for (int l = 1; l <= n; ++l) {
      MPoly re(rank), im(rank);
      for (int i = 0; i <= l; ++i) {
        const CP& a = c[i];
        const CP& b = c[l - i];
        re += a.re * b.re + a.im * b.im;
        im += a.im * b.re - a.re * b.im;
      }
      if (!im.is_zero())
        throw std::logic_error("type A system coefficient is not real");
      cm.c.push_back(std::move(re));
    }
    return cm;
  }

  int n = rank;
  cm.n = n;
  cm.chebyshev_basis = false;
  cm.trace_scale = 4;
  cm.c.assign(n, MPoly(rank));

  auto plain = [&](int i) {  // c_i = (-2)^i binom(n, i) z_i
    return MPoly::variable(rank, i - 1).scaled(neg2_pow(i) * binom_rat(n, i));
  };

  switch (family) {
    case Family::C:
      for (int i = 1; i <= n; ++i) cm.c[i - 1] = plain(i);
      break;
    case Family::B: {
      for (int i = 1; i <= n - 1; ++i) cm.c[i - 1] = plain(i);
      MPoly inner = MPoly::variable(rank, n - 1).pow(2).scaled(Rational(2).pow(n));
      for (int i = 1; i <= n - 1; ++i)
        inner -= MPoly::variable(rank, i - 1).scaled(binom_rat(n, i));
      inner -= MPoly::constant(rank, Rational(1));
      cm.c[n - 1] = inner.scaled(neg2_pow(n));
      break;
    }
    case Family::D: {
      for (int i = 1; i <= n - 2; ++i) cm.c[i - 1] = plain(i);
      MPoly zm = MPoly::variable(rank, n - 2);
      MPoly zn = MPoly::variable(rank, n - 1);
      if (n % 2 == 0) {
        MPoly inner = (zn * zm).scaled(Rational(2).pow(n - 1));
        for (int j = 1; 2 * j - 1 <= n - 2; ++j)
          inner -= MPoly::variable(rank, 2 * j - 2).scaled(binom_rat(n, 2 * j - 1));
        cm.c[n - 2] = inner.scaled(neg2_pow(n - 1));
        MPoly inner2 = (zn * zn + zm * zm).scaled(Rational(2).pow(n - 2));
        for (int j = 1; 2 * j <= n - 2; ++j)
          inner2 -= MPoly::variable(rank, 2 * j - 1).scaled(binom_rat(n, 2 * j));
        inner2 -= MPoly::constant(rank, Rational(1));
        cm.c[n - 1] = inner2.scaled(neg2_pow(n));
      } else {
        // real coordinates: w_n = Re, w_{n-1} = Im of the complex invariant
        MPoly inner = (zn * zn + zm * zm).scaled(Rational(2).pow(n - 1));
        for (int j = 1; 2 * j <= n - 3; ++j)
          inner -= MPoly::variable(rank, 2 * j - 1).scaled(binom_rat(n, 2 * j));
        inner -= MPoly::constant(rank, Rational(1));
        cm.c[n - 2] = inner.scaled(neg2_pow(n - 1));
        MPoly inner2 = (zn * zn - zm * zm).scaled(Rational(2).pow(n - 1));
        for (int j = 0; 2 * j + 1 <= n - 2; ++j)
          inner2 -= MPoly::variable(rank, 2 * j).scaled(binom_rat(n, 2 * j + 1));
        cm.c[n - 1] = inner2.scaled(neg2_pow(n));
      }
      break;
    }
    default:
      break;
  }
  return cm;
}

MPolyMat companion_matrix(const CoefficientMap& cm) {
  int n = cm.n;
  int nv = cm.rank;
  MPolyMat c(n, std::vector<MPoly>(n, MPoly(nv)));
  if (!cm.chebyshev_basis) {
    for (int k = 1; k < n; ++k) c[k][k - 1] = MPoly::constant(nv, Rational(1));
    for (int k = 0; k < n; ++k) c[k][n - 1] = -cm.c[n - 1 - k];
    return c;
  }
  // multiplication by x in the Chebyshev basis T_0..T_{n-1}
  MPoly half = MPoly::constant(nv, Rational(1, 2));
  c[1][0] = MPoly::constant(nv, Rational(1));
  for (int j = 1; j <= n - 2; ++j) {
    c[j - 1][j] += half;
    c[j + 1][j] += half;
  }
  // last column: x T_{n-1} = (T_n + T_{n-2})/2 with T_n reduced mod p
  if (n >= 2) c[n - 2][n - 1] += half;
  c[0][n - 1] += cm.c[n - 1].scaled(Rational(-1, 4));  // -d_n/4
  for (int k = 1; k <= n - 1; ++k)
    c[k][n - 1] += cm.c[n - 1 - k].scaled(Rational(-1, 2));  // -d_{n-k}/2
  return c;
}

HermiteMatrix hermite_matrix(Family family, int rank, TraceMethod method) {
  CoefficientMap cm = symmetric_system_coeffs(family, rank);
  HermiteMatrix hm;
  hm.family = family;
  hm.rank = rank;
  hm.n = cm.n;
  hm.companion = companion_matrix(cm);
  std::vector<MPoly> t = matrix_poly_power_traces(hm.companion, 2 * cm.n, method);
  hm.H = SymMatrixPoly(cm.n, cm.rank);
  Rational scale(cm.trace_scale);
  for (int i = 1; i <= cm.n; ++i)
    for (int j = i; j <= cm.n; ++j)
      hm.H.set_entry(i - 1, j - 1, t[i + j - 2].scaled(scale) - t[i + j]);
  return hm;
}

namespace {

RatMat rat_mat_mul_local(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size();
  RatMat out(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<Rational> companion_traces(const RatMat& c, int kmax) {
  int n = static_cast<int>(c.size());
  std::vector<Rational> t;
  t.reserve(kmax + 1);
  t.push_back(Rational(n));
  RatMat power = c;
  for (int k = 1; k <= kmax; ++k) {
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += power[i][i];
    t.push_back(tr);
    if (k < kmax) power = rat_mat_mul_local(power, c);
  }
  return t;
}

}  // namespace

namespace {

RatMat hermite_from_companion(const MPolyMat& sym, int trace_scale, const RatVec& z) {
  int n = static_cast<int>(sym.size());
  RatMat c(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = sym[i][j].eval(z);
  std::vector<Rational> t = companion_traces(c, 2 * n);
  Rational scale(trace_scale);
  RatMat h(n, RatVec(n, Rational(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) h[i - 1][j - 1] = scale * t[i + j - 2] - t[i + j];
  return h;
}

DMat hermite_from_companion_d(const MPolyMat& sym, int trace_scale,
                              const std::vector<double>& z);

}  // namespace

RatMat hermite_at(const CoefficientMap& cm, const RatVec& z) {
  if (static_cast<int>(z.size()) != cm.rank)
    throw std::invalid_argument("hermite_at: wrong arity");
  return hermite_from_companion(companion_matrix(cm), cm.trace_scale, z);
}

namespace {

DMat hermite_from_companion_d(const MPolyMat& sym, int trace_scale,
                              const std::vector<double>& z) {
  int n = static_cast<int>(sym.size());
  DMat c(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = sym[i][j].eval_d(z);
  std::vector<double> t;
  t.reserve(2 * n + 1);
  t.push_back(n);
  DMat power = c;
  for (int k = 1; k <= 2 * n; ++k) {
    double tr = 0;
    for (int i = 0; i < n; ++i) tr += power[i][i];
    t.push_back(tr);
    if (k < 2 * n) {
      DMat next(n, std::vector<double>(n, 0.0));
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          if (power[i][l] == 0.0) continue;
          for (int j = 0; j < n; ++j) next[i][j] += power[i][l] * c[l][j];
        }
      power = std::move(next);
    }
  }
  double scale = trace_scale;
  DMat h(n, std::vector<double>(n, 0.0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) h[i - 1][j - 1] = scale * t[i + j - 2] - t[i + j];
  return h;
}

}  // namespace

DMat hermite_at_d(const CoefficientMap& cm, const std::vector<double>& z) {
  if (static_cast<int>(z.size()) != cm.rank)
    throw std::invalid_argument("hermite_at_d: wrong arity");
  return hermite_from_companion_d(companion_matrix(cm), cm.trace_scale, z);
}

RatMat hermite_form_general(const RatVec& monic_coeffs, const Rational& a) {
  if (a.sign() < 0) throw std::invalid_argument("hermite_form_general: a must be >= 0");
  int n = static_cast<int>(monic_coeffs.size());
  if (n < 1) throw std::invalid_argument("hermite_form_general: degree must be >= 1");
  RatMat c(n, RatVec(n, Rational(0)));
  for (int k = 1; k < n; ++k) c[k][k - 1] = 1;
  for (int k = 0; k < n; ++k) c[k][n - 1] = -monic_coeffs[n - 1 - k];
  std::vector<Rational> t = companion_traces(c, 2 * n);
  Rational a2 = a * a;
  RatMat h(n, RatVec(n, Rational(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) h[i - 1][j - 1] = a2 * t[i + j - 2] - t[i + j];
  return h;
}

const FamilyContext& family_context(Family family, int rank) {
  static std::map<std::pair<int, int>, std::unique_ptr<FamilyContext>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(family), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto ctx = std::make_unique<FamilyContext>();
    ctx->d = build_root_system({family, rank});
    ctx->thetas = fundamental_invariants(ctx->d);
    ctx->emb = real_embedding(family, rank);
    ctx->coeffs = symmetric_system_coeffs(family, rank);
    ctx->companion = companion_matrix(ctx->coeffs);
    it = cache.emplace(key, std::move(ctx)).first;
  }
  return *it->second;
}

RatVec theta_real(const RootSystemData& d, const std::vector<CirclePoint>& x) {
  if (static_cast<int>(x.size()) != d.rank)
    throw std::invalid_argument("theta_real: wrong arity");
  const FamilyContext& ctx = family_context(d.family, d.rank);
  std::vector<GaussianRational> z(d.rank);
  for (int i = 0; i < d.rank; ++i) z[i] = ctx.thetas[i].eval(x);
  return ctx.emb.from_complex(z);
}

std::vector<double> theta_real_d(const RootSystemData& d, const std::vector<ComplexFloat>& x,
                                 double torus_tol) {
  if (static_cast<int>(x.size()) != d.rank)
    throw std::invalid_argument("theta_real_d: wrong arity");
  for (const auto& xi : x)
    if (std::abs(std::abs(xi) - 1.0) > torus_tol)
      throw std::invalid_argument("theta_real_d: point is off the torus");
  const FamilyContext& ctx = family_context(d.family, d.rank);
  std::vector<ComplexFloat> z(d.rank);
  for (int i = 0; i < d.rank; ++i) z[i] = ctx.thetas[i].eval_c(x);
  return ctx.emb.from_complex_d(z);
}

namespace {

RegionClass classify_exact(const CharPoly& cp, bool psd) {
  if (!psd) return RegionClass::Outside;
  bool strict = std::all_of(cp.a.begin(), cp.a.end(),
                            [](const Rational& r) { return r.sign() > 0; });
  return strict ? RegionClass::Interior : RegionClass::Boundary;
}

}  // namespace

namespace {

// Damped Gauss-Newton refinement of a torus point against the invariant
// map, in angle coordinates. Clustered roots of the univariate system limit
// the lifting accuracy to about sqrt(eps); this restores full precision.
void polish_preimage(const FamilyContext& ctx, const std::vector<double>& z,
                     std::vector<ComplexFloat>& x) {
  int r = ctx.d.rank;
  std::vector<double> u(r);
  for (int i = 0; i < r; ++i) u[i] = std::arg(x[i]) / (2.0 * M_PI);

  std::vector<std::vector<LaurentPoly>> jac(r, std::vector<LaurentPoly>(r, LaurentPoly(r)));
  for (int col = 0; col < r; ++col)
    for (int row = 0; row < r; ++row) jac[row][col] = ctx.thetas[col].euler_derivative(row);

  auto point_of = [&](const std::vector<double>& uu) {
    std::vector<ComplexFloat> pt(r);
    for (int i = 0; i < r; ++i) {
      double a = 2.0 * M_PI * uu[i];
      pt[i] = ComplexFloat(std::cos(a), std::sin(a));
    }
    return pt;
  };
  auto residual_of = [&](const std::vector<ComplexFloat>& pt, std::vector<double>& f) {
    std::vector<double> th = theta_real_d(ctx.d, pt, 1e-3);
    double sup = 0.0;
    f.resize(r);
    for (int i = 0; i < r; ++i) {
      f[i] = th[i] - z[i];
      sup = std::max(sup, std::abs(f[i]));
    }
    return sup;
  };

  std::vector<double> f;
  std::vector<ComplexFloat> pt = point_of(u);
  double best = residual_of(pt, f);
  std::vector<double> best_u = u;
  for (int iter = 0; iter < 30 && best > 1e-13; ++iter) {
    // real Jacobian rows follow the embedding of the complex invariants
    DMat jr(r, std::vector<double>(r, 0.0));
    for (int k = 0; k < r; ++k)
      for (int col = 0; col < r; ++col) {
        ComplexFloat dtheta = ComplexFloat(0.0, 2.0 * M_PI) * jac[k][col].eval_c(pt);
        const RealEmbedding::Coord& co = ctx.emb.coords[col];
        if (co.im_sign == 0)
          jr[co.re_idx][k] = dtheta.real();
        else if (co.im_sign > 0) {
          jr[co.re_idx][k] = dtheta.real();
          jr[co.im_idx][k] = dtheta.imag();
        }
      }
    // damped normal equations
    DMat a(r, std::vector<double>(r, 0.0));
    std::vector<double> b(r, 0.0);
    double damp = 1e-10;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) a[i][j] += jr[k][i] * jr[k][j];
        if (i == j) a[i][j] += damp;
      }
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) b[i] += jr[k][i] * f[k];
    // gaussian elimination
    for (int col = 0; col < r; ++col) {
      int piv = col;
      for (int row = col + 1; row < r; ++row)
        if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
      if (a[piv][col] == 0.0) return;
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
      for (int row = col + 1; row < r; ++row) {
        double fac = a[row][col] / a[col][col];
        for (int cc = col; cc < r; ++cc) a[row][cc] -= fac * a[col][cc];
        b[row] -= fac * b[col];
      }
    }
    std::vector<double> step(r, 0.0);
    for (int row = r - 1; row >= 0; --row) {
      double s = b[row];
      for (int cc = row + 1; cc < r; ++cc) s -= a[row][cc] * step[cc];
      step[row] = s / a[row][row];
    }
    // backtracking line search on the sup-norm residual
    double lambda = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 8 && !improved; ++ls, lambda *= 0.5) {
      std::vector<double> trial = u;
      for (int i = 0; i < r; ++i) trial[i] -= lambda * step[i];
      std::vector<ComplexFloat> tp = point_of(trial);
      std::vector<double> tf;
      double res = residual_of(tp, tf);
      if (res < best) {
        best = res;
        best_u = trial;
        u = trial;
        pt = tp;
        f = tf;
        improved = true;
      }
    }
    if (!improved) break;
  }
  x = point_of(best_u);
}

}  // namespace

std::vector<std::vector<ComplexFloat>> reconstruct_preimages(Family family, int rank,
                                                             const std::vector<double>& z,
                                                             double tol) {
  const FamilyContext& ctx = family_context(family, rank);
  int n = ctx.coeffs.n;

  // univariate system polynomial coefficients
  std::vector<ComplexFloat> pc(n);
  if (family == Family::A) {
    std::vector<ComplexFloat> zt = ctx.emb.to_complex_d(z);
    for (int i = 1; i <= n - 1; ++i) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), n, i);
      double s = b.get_d();
      pc[i - 1] = (i % 2 == 1 ? -s : s) * zt[i - 1];
    }
    pc[n - 1] = n % 2 == 0 ? 1.0 : -1.0;
  } else {
    for (int i = 1; i <= n; ++i) pc[i - 1] = ctx.coeffs.c[i - 1].eval_d(z);
  }

  std::vector<ComplexFloat> roots = aberth_roots(pc);

  // root -> torus coordinate lifting
  std::vector<ComplexFloat> y(n);
  if (family == Family::A) {
    for (int i = 0; i < n; ++i) {
      double m = std::abs(roots[i]);
      y[i] = m > 0 ? roots[i] / m : roots[i];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      double r = roots[i].real();
      // multiple roots at the interval ends (orbit-space vertices) only
      // reach ~sqrt(tol); snapping them restores full accuracy, and the
      // validation below rejects any wrong snap
      if (std::abs(r - 2.0) < 1e-6)
        r = 2.0;
      else if (std::abs(r + 2.0) < 1e-6)
        r = -2.0;
      double disc = 1.0 - 0.25 * r * r;
      if (disc < 0 && disc > -1e-12) disc = 0;  // boundary clamp
      if (disc < 0) disc = 0;                   // filtered by validation below
      y[i] = ComplexFloat(0.5 * r, std::sqrt(disc));
    }
  }

  // invert the monomial substitution; enumerate the finite branch ambiguity
  std::vector<std::vector<ComplexFloat>> candidates;
  auto prefix = [&](int count) {
    std::vector<ComplexFloat> x(count);
    ComplexFloat acc = 1.0;
    for (int i = 0; i < count; ++i) {
      acc *= y[i];
      x[i] = acc;
    }
    return x;
  };
  switch (family) {
    case Family::A:
      candidates.push_back(prefix(rank));
      break;
    case Family::C:
      candidates.push_back(prefix(rank));
      break;
    case Family::B: {
      std::vector<ComplexFloat> x = prefix(rank);  // x[rank-1] overwritten below
      ComplexFloat xn = std::sqrt(y[rank - 1] * (rank >= 2 ? x[rank - 2] : ComplexFloat(1.0)));
      for (int sign : {+1, -1}) {
        x[rank - 1] = double(sign) * xn;
        candidates.push_back(x);
      }
      break;
    }
    case Family::D: {
      std::vector<ComplexFloat> x = prefix(rank);
      ComplexFloat xprev = rank >= 3 ? x[rank - 3] : ComplexFloat(1.0);
      ComplexFloat xn = std::sqrt(y[rank - 2] * y[rank - 1] * xprev);
      for (int sign : {+1, -1}) {
        ComplexFloat last = double(sign) * xn;
        ComplexFloat second = last / y[rank - 1];
        x[rank - 2] = second;
        x[rank - 1] = last;
        candidates.push_back(x);
        std::swap(x[rank - 2], x[rank - 1]);  // theta-swap branch
        candidates.push_back(x);
        std::swap(x[rank - 2], x[rank - 1]);
      }
      break;
    }
  }

  std::vector<std::vector<ComplexFloat>> valid;
  for (auto& cand : candidates) {
    for (auto& xi : cand) {
      double m = std::abs(xi);
      if (m > 0) xi /= m;  // project onto the torus
    }
    polish_preimage(ctx, z, cand);
    std::vector<double> back;
    try {
      back = theta_real_d(ctx.d, cand, 1e-6);
    } catch (const std::invalid_argument&) {
      continue;
    }
    double err = 0;
    for (int i = 0; i < rank; ++i) err = std::max(err, std::abs(back[i] - z[i]));
    if (err <= tol) valid.push_back(cand);
  }
  return valid;
}

MembershipReport membership(Family family, int rank, const RatVec& z, bool want_preimages,
                            double preimage_tol) {
  const FamilyContext& ctx = family_context(family, rank);
  if (static_cast<int>(z.size()) != rank)
    throw std::invalid_argument("membership: wrong arity");
  MembershipReport rep;
  rep.family = family;
  rep.rank = rank;
  rep.exact = true;
  rep.point_q = z;
  rep.point_d.reserve(rank);
  for (const auto& c : z) rep.point_d.push_back(c.to_double());
  PsdVerdict v = psd_test(hermite_from_companion(ctx.companion, ctx.coeffs.trace_scale, z));
  rep.psd = v.psd;
  rep.charpoly = v.coeffs;
  rep.rank_h = v.rank;
  rep.classification = classify_exact(v.coeffs, v.psd);
  if (want_preimages && rep.psd)
    rep.preimages = reconstruct_preimages(family, rank, rep.point_d, preimage_tol);
  return rep;
}

MembershipReport membership_f(Family family, int rank, const std::vector<double>& z,
                              bool want_preimages, double boundary_tol, double preimage_tol) {
  const FamilyContext& ctx = family_context(family, rank);
  if (static_cast<int>(z.size()) != rank)
    throw std::invalid_argument("membership_f: wrong arity");
  MembershipReport rep;
  rep.family = family;
  rep.rank = rank;
  rep.exact = false;
  rep.point_d = z;
  rep.charpoly_d =
      char_poly_d(hermite_from_companion_d(ctx.companion, ctx.coeffs.trace_scale, z));
  double min_a = 0;
  for (double a : rep.charpoly_d) min_a = std::min(min_a, a);
  rep.psd = min_a >= -boundary_tol;
  if (!rep.psd)
    rep.classification = RegionClass::Outside;
  else {
    bool strict = std::all_of(rep.charpoly_d.begin(), rep.charpoly_d.end(),
                              [&](double a) { return a > boundary_tol; });
    rep.classification = strict ? RegionClass::Interior : RegionClass::Boundary;
  }
  int r = 0;
  for (int i = static_cast<int>(rep.charpoly_d.size()); i >= 1; --i)
    if (std::abs(rep.charpoly_d[i - 1]) > boundary_tol) {
      r = i;
      break;
    }
  rep.rank_h = r;
  if (want_preimages && rep.psd)
    rep.preimages = reconstruct_preimages(family, rank, z, preimage_tol);
  return rep;
}

int max_threads_from_env() {
  const char* env = std::getenv("WEYL_TORUS_THREADS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

RasterGrid raster_impl(Family family, int rank, const RasterWindow& window, int res_x, int res_y,
                       int axis_x, int axis_y, std::vector<double> fixed, double boundary_tol,
                       bool parallel) {
  if (res_x < 1 || res_y < 1 || res_x > 20000 || res_y > 20000)
    throw std::invalid_argument("raster: resolution out of range");
  if (window.xmax <= window.xmin || window.ymax <= window.ymin)
    throw std::invalid_argument("raster: degenerate window");
  if (axis_x == axis_y || axis_x < 0 || axis_y < 0 || axis_x >= rank || axis_y >= rank)
    throw std::invalid_argument("raster: bad axes");
  if (fixed.empty()) fixed.assign(rank, 0.0);
  if (static_cast<int>(fixed.size()) != rank)
    throw std::invalid_argument("raster: fixed coordinates have wrong arity");
  family_context(family, rank);  // warm the cache before going parallel

  RasterGrid grid;
  grid.family = family;
  grid.rank = rank;
  grid.window = window;
  grid.res_x = res_x;
  grid.res_y = res_y;
  grid.axis_x = axis_x;
  grid.axis_y = axis_y;
  grid.fixed = fixed;
  int nx = res_x + 1, ny = res_y + 1;
  grid.verdicts.assign(static_cast<std::size_t>(nx) * ny, RegionClass::Outside);
  grid.ranks.assign(static_cast<std::size_t>(nx) * ny, 0);
  grid.node_x.resize(nx);
  grid.node_y.resize(ny);
  for (int i = 0; i < nx; ++i)
    grid.node_x[i] = window.xmin + (window.xmax - window.xmin) * i / res_x;
  for (int j = 0; j < ny; ++j)
    grid.node_y[j] = window.ymin + (window.ymax - window.ymin) * j / res_y;

  int threads = parallel ? max_threads_from_env() : 1;
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel)
  for (int j = 0; j < ny; ++j) {
    std::vector<double> z = grid.fixed;
    for (int i = 0; i < nx; ++i) {
      z[axis_x] = grid.node_x[i];
      z[axis_y] = grid.node_y[j];
      MembershipReport rep = membership_f(family, rank, z, false, boundary_tol);
      grid.verdicts[static_cast<std::size_t>(j) * nx + i] = rep.classification;
      grid.ranks[static_cast<std::size_t>(j) * nx + i] = rep.rank_h;
    }
  }
  return grid;
}

}  // namespace

RasterGrid region_raster(Family family, int rank, const RasterWindow& window, int res_x,
                         int res_y, int axis_x, int axis_y, std::vector<double> fixed,
                         double boundary_tol, bool parallel) {
  return raster_impl(family, rank, window, res_x, res_y, axis_x, axis_y, std::move(fixed),
                     boundary_tol, parallel);
}

RasterGrid region_raster_serial(Family family, int rank, const RasterWindow& window, int res_x,
                                int res_y, int axis_x, int axis_y, std::vector<double> fixed,
                                double boundary_tol) {
  return raster_impl(family, rank, window, res_x, res_y, axis_x, axis_y, std::move(fixed),
                     boundary_tol, false);
}

}  // namespace weyl

#include "weyl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "weyl/mpoly.hpp"
#include "weyl/orbitspace.hpp"

namespace weyl {

std::vector<std::vector<LaurentPoly>> euler_jacobian(const RootSystemData& d) {
  const FamilyContext& ctx = family_context(d.family, d.rank);
  int n = d.rank;
  std::vector<std::vector<LaurentPoly>> j(n, std::vector<LaurentPoly>(n, LaurentPoly(n)));
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) j[row][col] = ctx.thetas[col].euler_derivative(row);
  return j;
}

Rational jacobian_determinant_factor(const RootSystemData& d) {
  Rational f(1);
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    f *= Rational(stabilizer_order(d, e)) / Rational(d.group_order);
  }
  return f;
}

GaussianRational det_g(GMat m) {
  int n = static_cast<int>(m.size());
  GaussianRational det{Rational(1)};
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return GaussianRational{Rational(0)};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    GaussianRational inv = m[col][col].inverse();
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      GaussianRational factor = m[row][col] * inv;
      for (int k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

GMat evaluate_jacobian(const std::vector<std::vector<LaurentPoly>>& j,
                       const std::vector<CirclePoint>& x) {
  GMat out(j.size(), std::vector<GaussianRational>(j.size()));
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < j.size(); ++c) out[r][c] = j[r][c].eval(x);
  return out;
}

InvariantForm invariant_form(const RootSystemData& d, std::size_t cap) {
  GroupRep rep = enumerate_group(d, cap);
  int n = d.rank;
  RatMat s(n, RatVec(n, Rational(0)));
  for (const auto& [b, det] : rep.elements) {
    (void)det;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long acc = 0;
        for (int k = 0; k < n; ++k) acc += b[k][i] * b[k][j];
        s[i][j] += Rational(acc);
      }
  }
  Rational scale = Rational(1) / Rational(d.group_order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] *= scale;
  return InvariantForm{std::move(s)};
}

namespace {

// S, sigma and the Jacobian are fixed per family and rank; cache them for
// the pointwise evaluators.
struct MContext {
  InvariantForm form;
  std::vector<int> sigma;
  std::vector<std::vector<LaurentPoly>> jac;
};

const MContext& m_context(const RootSystemData& d) {
  static std::map<std::pair<int, int>, std::unique_ptr<MContext>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(d.family), d.rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto ctx = std::make_unique<MContext>();
    ctx->form = invariant_form(d);
    ctx->sigma = conjugation_permutation(d);
    ctx->jac = euler_jacobian(d);
    it = cache.emplace(key, std::move(ctx)).first;
  }
  return *it->second;
}

}  // namespace

GMat m_matrix_at(const RootSystemData& d, const std::vector<CirclePoint>& x) {
  int n = d.rank;
  const MContext& mc = m_context(d);
  const InvariantForm& form = mc.form;
  const std::vector<int>& sigma = mc.sigma;
  GMat jx = evaluate_jacobian(mc.jac, x);
  GMat m(n, std::vector<GaussianRational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      GaussianRational acc{Rational(0)};
      for (int k = 0; k < n; ++k) {
        if (jx[k][a].is_zero()) continue;
        for (int l = 0; l < n; ++l) {
          if (form.S[k][l].is_zero()) continue;
          acc += jx[k][a] * GaussianRational(form.S[k][l]) * jx[l][sigma[b]];
        }
      }
      m[a][b] = acc;
    }
  return m;
}

CMat m_matrix_at_d(const RootSystemData& d, const std::vector<ComplexFloat>& x,
                   double torus_tol) {
  for (const auto& xi : x)
    if (std::abs(std::abs(xi) - 1.0) > torus_tol)
      throw std::invalid_argument("m_matrix_at_d: point is off the torus");
  int n = d.rank;
  const MContext& mc = m_context(d);
  const InvariantForm& form = mc.form;
  const std::vector<int>& sigma = mc.sigma;
  const auto& j = mc.jac;
  CMat jx(n, std::vector<ComplexFloat>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) jx[r][c] = j[r][c].eval_c(x);
  CMat m(n, std::vector<ComplexFloat>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ComplexFloat acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (form.S[k][l].is_zero()) continue;
          acc += jx[k][a] * form.S[k][l].to_double() * jx[l][sigma[b]];
        }
      m[a][b] = acc;
    }
  return m;
}

RatMat hermitian_realification(const GMat& m) {
  int n = static_cast<int>(m.size());
  RatMat r(2 * n, RatVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r[i][j] = m[i][j].re;
      r[n + i][n + j] = m[i][j].re;
      r[i][n + j] = -m[i][j].im;
      r[n + i][j] = m[i][j].im;
    }
  return r;
}

bool is_nsd_exact(const GMat& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != m[j][i].conj())
        throw std::invalid_argument("is_nsd_exact: matrix is not Hermitian");
  GMat neg(n, std::vector<GaussianRational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) neg[i][j] = -m[i][j];
  return psd_test(hermitian_realification(neg)).psd;
}

MPolyMat m_matrix_symbolic(const RootSystemData& d) {
  int n = d.rank;
  const MContext& mc = m_context(d);
  const InvariantForm& form = mc.form;
  const std::vector<int>& sigma = mc.sigma;
  const auto& j = mc.jac;
  MPolyMat m(n, std::vector<MPoly>(n, MPoly(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      LaurentPoly entry(n);
      for (int k = 0; k < n; ++k) {
        if (j[k][a].is_zero()) continue;
        for (int l = 0; l < n; ++l) {
          if (form.S[k][l].is_zero()) continue;
          entry += (j[k][a] * j[l][sigma[b]]).scaled(form.S[k][l]);
        }
      }
      m[a][b] = rewrite_in_fundamental(d, entry);
    }
  return m;
}

ChebyshevPoly chebyshev_first(const RootSystemData& d, const IntVec& alpha) {
  if (!is_dominant(alpha))
    throw std::invalid_argument("chebyshev_first: alpha must be dominant");
  ChebyshevPoly t;
  t.kind = ChebyshevPoly::Kind::First;
  t.alpha = alpha;
  t.poly = rewrite_in_fundamental(d, orbit_polynomial(d, alpha));
  return t;
}

ChebyshevPoly chebyshev_second(const RootSystemData& d, const IntVec& alpha) {
  if (!is_dominant(alpha))
    throw std::invalid_argument("chebyshev_second: alpha must be dominant");
  IntVec delta(d.rank, 1);
  IntVec shifted(d.rank);
  for (int i = 0; i < d.rank; ++i) shifted[i] = alpha[i] + 1;
  LaurentPoly num = anti_invariant(d, shifted);
  LaurentPoly den = anti_invariant(d, delta);
  if (den.is_zero()) throw std::logic_error("chebyshev_second: vanishing denominator");
  LaurentPoly quotient = divide_exact(d, num, den);
  ChebyshevPoly u;
  u.kind = ChebyshevPoly::Kind::Second;
  u.alpha = alpha;
  u.poly = rewrite_in_fundamental(d, quotient);
  return u;
}

MPoly weight_phi(const RootSystemData& d) {
  IntVec delta(d.rank, 1);
  LaurentPoly upsilon = anti_invariant(d, delta);
  return rewrite_in_fundamental(d, upsilon * upsilon);
}

namespace {

std::vector<std::vector<double>> orbit_weights_d(const RootSystemData& d, const IntVec& mu) {
  std::vector<std::vector<double>> out;
  for (const auto& beta : orbit(d, mu)) {
    RatVec w = weight_vector(d, beta);
    std::vector<double> wd(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wd[i] = w[i].to_double();
    out.push_back(std::move(wd));
  }
  return out;
}

ComplexFloat exp_sum(const std::vector<std::vector<double>>& weights,
                     const std::vector<double>& signs, const std::vector<double>& u,
                     double scale) {
  ComplexFloat acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double dot = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) dot += weights[i][k] * u[k];
    double ang = 2.0 * M_PI * dot;
    acc += signs[i] * ComplexFloat(std::cos(ang), std::sin(ang));
  }
  return acc * scale;
}

struct HarmonicData {
  std::vector<std::vector<double>> weights;
  std::vector<double> signs;
  double scale = 0.0;  // 1/|orbit| for cosines, 1/|W| for sines
};

HarmonicData harmonic_data(const RootSystemData& d, const IntVec& mu, bool sine) {
  HarmonicData h;
  if (!sine) {
    h.weights = orbit_weights_d(d, mu);
    h.signs.assign(h.weights.size(), 1.0);
    h.scale = h.weights.empty() ? 0.0 : 1.0 / static_cast<double>(h.weights.size());
    return h;
  }
  auto so = signed_orbit(d, mu);
  for (auto& [beta, s] : so) {
    RatVec w = weight_vector(d, beta);
    std::vector<double> wd(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wd[i] = w[i].to_double();
    h.weights.push_back(std::move(wd));
    h.signs.push_back(static_cast<double>(s));
  }
  h.scale = 1.0 / d.group_order.get_d();
  return h;
}

}  // namespace

ComplexFloat generalized_cosine(const RootSystemData& d, const IntVec& mu,
                                const std::vector<double>& u) {
  HarmonicData h = harmonic_data(d, mu, false);
  return exp_sum(h.weights, h.signs, u, h.scale);
}

ComplexFloat generalized_sine(const RootSystemData& d, const IntVec& mu,
                              const std::vector<double>& u) {
  HarmonicData h = harmonic_data(d, mu, true);
  if (h.weights.empty()) return 0.0;
  return exp_sum(h.weights, h.signs, u, h.scale);
}

std::vector<double> AlcoveSampler::sample(std::uint64_t index) const {
  int rank = static_cast<int>(coroot_basis.empty() ? 0 : coroot_basis[0].size());
  int ambient = static_cast<int>(coroot_basis.size());
  std::vector<double> u(ambient, 0.0);
  for (int j = 0; j < rank; ++j) {
    double t = rng.uniform(index * static_cast<std::uint64_t>(rank) + j);
    for (int a = 0; a < ambient; ++a) u[a] += coroot_basis[a][j].to_double() * t;
  }
  return u;
}

AlcoveSampler alcove_sampler(const RootSystemData& d, std::uint64_t seed) {
  RatMat basis(d.ambient, RatVec(d.rank, Rational(0)));
  for (int i = 0; i < d.rank; ++i) {
    Rational norm(0);
    for (int a = 0; a < d.ambient; ++a) norm += d.simple_roots[i][a] * d.simple_roots[i][a];
    for (int a = 0; a < d.ambient; ++a)
      basis[a][i] = Rational(2) * d.simple_roots[i][a] / norm;
  }
  return AlcoveSampler{std::move(basis), CounterRng(seed)};
}

namespace {

Rational orthogonality_target(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                              bool sine) {
  IntVec dm = dominant_representative(d, mu);
  IntVec dn = dominant_representative(d, nu);
  if (dm != dn) return Rational(0);
  if (sine) {
    if (signed_orbit(d, mu).empty()) return Rational(0);
    return Rational(1) / Rational(d.group_order);
  }
  return Rational(stabilizer_order(d, mu)) / Rational(d.group_order);
}

OrthoResult mc_impl(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                    std::size_t samples, std::uint64_t seed, bool sine, bool parallel) {
  if (samples < 1) throw std::invalid_argument("orthogonality_mc: samples < 1");
  HarmonicData hm = harmonic_data(d, mu, sine);
  HarmonicData hn = harmonic_data(d, nu, sine);
  AlcoveSampler sampler = alcove_sampler(d, seed);

  constexpr std::size_t kBlock = 8192;
  std::size_t nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<ComplexFloat> block_sum(nblocks, ComplexFloat(0.0));
  std::vector<double> block_sumsq(nblocks, 0.0);

  int threads = parallel ? max_threads_from_env() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
  for (std::size_t b = 0; b < nblocks; ++b) {
    std::size_t lo = b * kBlock;
    std::size_t hi = std::min(samples, lo + kBlock);
    ComplexFloat acc = 0.0;
    double accsq = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      std::vector<double> u = sampler.sample(k);
      ComplexFloat fm = exp_sum(hm.weights, hm.signs, u, hm.scale);
      ComplexFloat fn = exp_sum(hn.weights, hn.signs, u, hn.scale);
      ComplexFloat term = fm * std::conj(fn);
      acc += term;
      accsq += std::norm(term);
    }
    block_sum[b] = acc;
    block_sumsq[b] = accsq;
  }

  ComplexFloat total = 0.0;
  double totalsq = 0.0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    total += block_sum[b];
    totalsq += block_sumsq[b];
  }
  OrthoResult r;
  r.samples = samples;
  r.estimate = total / static_cast<double>(samples);
  double var = totalsq / static_cast<double>(samples) - std::norm(r.estimate);
  r.stderr_est = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  r.target = orthogonality_target(d, mu, nu, sine);
  return r;
}

}  // namespace

OrthoResult orthogonality_mc(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                             std::size_t samples, std::uint64_t seed, bool sine, bool parallel) {
  return mc_impl(d, mu, nu, samples, seed, sine, parallel);
}

OrthoResult orthogonality_mc_serial(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                                    std::size_t samples, std::uint64_t seed, bool sine) {
  return mc_impl(d, mu, nu, samples, seed, sine, false);
}

}  // namespace weyl

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weyl/geometry.hpp"
#include "weyl/golden.hpp"
#include "weyl/numeric.hpp"
#include "weyl/orbitspace.hpp"
#include "weyl/rng.hpp"

using namespace weyl;

namespace {

std::vector<CirclePoint> circle_points(const CounterRng& rng, std::uint64_t base, int rank) {
  std::vector<CirclePoint> x;
  for (int i = 0; i < rank; ++i)
    x.push_back(circle_from_tangent(Rational(rng.uniform_int(base + 2 * i, -15, 15),
                                             rng.uniform_int(base + 2 * i + 1, 1, 9))));
  return x;
}

// x -> x^B as a point transformation: (x^B)_i = prod_j x_j^{B_ji}
std::vector<CirclePoint> transform_point(const IntMat& b, const std::vector<CirclePoint>& x) {
  std::vector<CirclePoint> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CirclePoint acc{};
    for (std::size_t j = 0; j < x.size(); ++j)
      acc = acc * circle_pow(x[j], b[j][i]);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("euler jacobian of A1") {
  auto a1 = build_root_system({Family::A, 1});
  auto j = euler_jacobian(a1);
  LaurentPoly want = (LaurentPoly::monomial(1, {1}, Rational(1)) -
                      LaurentPoly::monomial(1, {-1}, Rational(1)))
                         .scaled(Rational(1, 2));
  CHECK(j[0][0] == want);
  CHECK(jacobian_determinant_factor(a1) == Rational(1, 2));
}

TEST_CASE("jacobian equivariance") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::D, 3}}) {
    auto d = build_root_system({f, r});
    auto j = euler_jacobian(d);
    CounterRng rng(61 + static_cast<int>(f));
    auto x = circle_points(rng, 0, r);
    for (const auto& g : d.generators) {
      auto xg = transform_point(g, x);
      GMat jx = evaluate_jacobian(j, x);
      GMat jxg = evaluate_jacobian(j, xg);
      // B * J(x^B) = J(x) columnwise
      for (int col = 0; col < r; ++col)
        for (int row = 0; row < r; ++row) {
          GaussianRational acc{Rational(0)};
          for (int k = 0; k < r; ++k)
            acc += GaussianRational(Rational(g[row][k])) * jxg[k][col];
          CHECK(acc == jx[row][col]);
        }
    }
  }
}

TEST_CASE("jacobian determinant factorization") {
  CounterRng rng(67);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 4}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
    auto d = build_root_system({f, r});
    auto j = euler_jacobian(d);
    Rational factor = jacobian_determinant_factor(d);
    LaurentPoly ups = anti_invariant(d, IntVec(r, 1));
    for (int t = 0; t < 20; ++t) {
      auto x = circle_points(rng, 512 * t + 16384 * static_cast<int>(f) + r, r);
      CHECK(det_g(evaluate_jacobian(j, x)) == GaussianRational(factor) * ups.eval(x));
    }
  }
}

TEST_CASE("C2 jacobian determinant vanishes on the wall") {
  auto c2 = build_root_system({Family::C, 2});
  std::vector<CirclePoint> ones(2);
  CHECK(det_g(evaluate_jacobian(euler_jacobian(c2), ones)).is_zero());
}

TEST_CASE("invariant form") {
  auto a1 = build_root_system({Family::A, 1});
  CHECK(invariant_form(a1).S == RatMat{{Rational(1)}});

  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}}) {
    auto d = build_root_system({f, r});
    InvariantForm form = invariant_form(d);
    // positive definite
    PsdVerdict v = psd_test(form.S);
    CHECK(v.psd);
    CHECK(v.rank == r);
    // exactly invariant under every generator
    for (const auto& g : d.generators) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          Rational lhs(0);
          for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
              lhs += Rational(g[k][i]) * form.S[k][l] * Rational(g[l][j]);
          CHECK(lhs == form.S[i][j]);
        }
    }
  }
}

TEST_CASE("M matrix at torus points") {
  auto c2 = build_root_system({Family::C, 2});
  std::vector<CirclePoint> ones(2);
  GMat m0 = m_matrix_at(c2, ones);
  for (const auto& row : m0)
    for (const auto& e : row) CHECK(e.is_zero());

  CounterRng rng(71);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::D, 3}}) {
    auto d = build_root_system({f, r});
    for (int t = 0; t < 5; ++t) {
      auto x = circle_points(rng, 128 * t + 4096 * static_cast<int>(f), r);
      GMat m = m_matrix_at(d, x);
      // Hermitian
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) CHECK(m[i][j] == m[j][i].conj());
      CHECK(is_nsd_exact(m));
    }
  }

  // A1: M(x) = -|x - x^{-1}|^2 / 4 <= 0
  auto a1 = build_root_system({Family::A, 1});
  auto x = circle_points(rng, 9999, 1);
  GMat m = m_matrix_at(a1, x);
  GaussianRational grad = (LaurentPoly::monomial(1, {1}, Rational(1, 2)) -
                           LaurentPoly::monomial(1, {-1}, Rational(1, 2)))
                              .eval(x);
  CHECK(m[0][0] == -(grad * grad.conj()));
}

TEST_CASE("symbolic M matrices match the worked cases") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK(m_matrix_symbolic(a2) == golden::a2_m());
  auto a1 = build_root_system({Family::A, 1});
  CHECK(m_matrix_symbolic(a1) == golden::a1_m());
}

TEST_CASE("symbolic M re-expands to the pointwise values") {
  CounterRng rng(73);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}}) {
    const FamilyContext& ctx = family_context(f, r);
    MPolyMat m = m_matrix_symbolic(ctx.d);
    for (int t = 0; t < 20; ++t) {
      auto x = circle_points(rng, 256 * t + 8192 * static_cast<int>(f), r);
      GMat at = m_matrix_at(ctx.d, x);
      std::vector<GaussianRational> theta(r);
      for (int i = 0; i < r; ++i) theta[i] = ctx.thetas[i].eval(x);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) CHECK(m[i][j].eval_g(theta) == at[i][j]);
    }
  }
}

TEST_CASE("chebyshev polynomials") {
  auto a1 = build_root_system({Family::A, 1});
  MPoly z = MPoly::variable(1, 0);
  CHECK(chebyshev_first(a1, {1}).poly == z);
  CHECK(chebyshev_first(a1, {2}).poly == (z * z).scaled(2) - MPoly::constant(1, 1));
  CHECK(chebyshev_second(a1, {0}).poly == MPoly::constant(1, 1));
  CHECK(chebyshev_second(a1, {1}).poly == z.scaled(2));
  CHECK(chebyshev_second(a1, {2}).poly == (z * z).scaled(4) - MPoly::constant(1, 1));

  auto b2 = build_root_system({Family::B, 2});
  MPoly z1 = MPoly::variable(2, 0), z2 = MPoly::variable(2, 1);
  CHECK(chebyshev_first(b2, {0, 2}).poly ==
        (z2 * z2).scaled(4) - z1.scaled(2) - MPoly::constant(2, 1));
  for (int i = 0; i < 2; ++i) {
    IntVec e(2, 0);
    e[i] = 1;
    CHECK(chebyshev_first(b2, e).poly == MPoly::variable(2, i));
  }

  CHECK_THROWS_AS(chebyshev_first(b2, {-1, 0}), std::invalid_argument);
}

TEST_CASE("chebyshev defining identities re-expand exactly") {
  CounterRng rng(79);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::D, 3}}) {
    auto d = build_root_system({f, r});
    IntVec delta(r, 1);
    LaurentPoly ups = anti_invariant(d, delta);
    for (int t = 0; t < 3; ++t) {
      IntVec alpha(r);
      for (int i = 0; i < r; ++i)
        alpha[i] = rng.uniform_int(128 * t + 8 * i + 1024 * static_cast<int>(f), 0, 2);
      CHECK(expand_in_fundamental(d, chebyshev_first(d, alpha).poly) ==
            orbit_polynomial(d, alpha));
      IntVec shifted(r);
      for (int i = 0; i < r; ++i) shifted[i] = alpha[i] + 1;
      CHECK(expand_in_fundamental(d, chebyshev_second(d, alpha).poly) * ups ==
            anti_invariant(d, shifted));
    }
  }
}

TEST_CASE("weight polynomials match the printed forms") {
  CHECK(weight_phi(build_root_system({Family::A, 1})) == golden::a1_phi());
  CHECK(weight_phi(build_root_system({Family::A, 2})) == golden::a2_phi());
  CHECK(weight_phi(build_root_system({Family::B, 2})) == golden::b2_phi());
  CHECK(weight_phi(build_root_system({Family::C, 2})) == golden::c2_phi());
}

TEST_CASE("squared denominator expansions in the orbit basis") {
  auto expand_check = [](Family f, const InvariantExpansion& want) {
    auto d = build_root_system({f, 2});
    LaurentPoly ups = anti_invariant(d, {1, 1});
    LaurentPoly rhs(2);
    for (const auto& [mu, c] : want) rhs += orbit_polynomial(d, mu).scaled(c);
    CHECK(ups * ups == rhs);
  };
  expand_check(Family::A, {{{2, 2}, Rational(6)},
                           {{3, 0}, Rational(-6)},
                           {{0, 3}, Rational(-6)},
                           {{1, 1}, Rational(12)},
                           {{0, 0}, Rational(-6)}});
  expand_check(Family::B, {{{0, 4}, Rational(-8)},
                           {{3, 0}, Rational(-8)},
                           {{2, 2}, Rational(8)},
                           {{1, 2}, Rational(16)},
                           {{0, 2}, Rational(-8)},
                           {{1, 0}, Rational(-8)},
                           {{0, 0}, Rational(8)}});
  expand_check(Family::C, {{{4, 0}, Rational(-8)},
                           {{2, 2}, Rational(8)},
                           {{2, 1}, Rational(16)},
                           {{0, 3}, Rational(-8)},
                           {{2, 0}, Rational(-8)},
                           {{0, 1}, Rational(-8)},
                           {{0, 0}, Rational(8)}});
}

TEST_CASE("weight is proportional to det(M) with an exact constant") {
  // fitted by exact division at the first usable point, then verified at 24
  // more; the constant is negative for A2 because the signed orbit sum takes
  // imaginary values there
  struct Case {
    Family family;
    Rational constant;
  };
  for (const auto& [f, want] : {Case{Family::A, Rational(-243, 4)},
                                Case{Family::B, Rational(1024, 9)},
                                Case{Family::C, Rational(1024, 9)}}) {
    const FamilyContext& ctx = family_context(f, 2);
    MPoly phi = weight_phi(ctx.d);
    MPolyMat m = m_matrix_symbolic(ctx.d);
    MPoly det_m = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    CounterRng rng(97 + static_cast<int>(f));
    Rational c(0);
    int used = 0;
    for (std::uint64_t t = 0; used < 25 && t < 200; ++t) {
      RatVec z = {Rational(rng.uniform_int(4 * t, -9, 9), rng.uniform_int(4 * t + 1, 1, 7)),
                  Rational(rng.uniform_int(4 * t + 2, -9, 9), rng.uniform_int(4 * t + 3, 1, 7))};
      Rational dm = det_m.eval(z);
      if (dm.is_zero()) continue;
      Rational ratio = phi.eval(z) / dm;
      if (used == 0) {
        c = ratio;
        CHECK(!c.is_zero());
      } else {
        CHECK(ratio == c);
      }
      ++used;
    }
    CHECK(used == 25);
    CHECK(c == want);
  }
}

TEST_CASE("squared denominator is real on the torus") {
  CounterRng rng(83);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::D, 3}}) {
    auto d = build_root_system({f, r});
    LaurentPoly ups = anti_invariant(d, IntVec(r, 1));
    for (int t = 0; t < 10; ++t) {
      auto x = circle_points(rng, 100 * t + 2048 * static_cast<int>(f), r);
      GaussianRational v = ups.eval(x);
      CHECK((v * v).is_real());
    }
  }
}

TEST_CASE("generalized cosine") {
  auto a2 = build_root_system({Family::A, 2});
  std::vector<double> u0(3, 0.0);
  CHECK(std::abs(generalized_cosine(a2, {0, 0}, u0) - ComplexFloat(1.0)) < 1e-15);
  CHECK(std::abs(generalized_cosine(a2, {2, 1}, u0) - ComplexFloat(1.0)) < 1e-15);

  // at u = -w1 the cosine vector reproduces the orbit-space corner
  std::vector<double> u(3);
  for (int a = 0; a < 3; ++a) u[a] = -a2.fundamental_weights[0][a].to_double();
  ComplexFloat c1 = generalized_cosine(a2, {1, 0}, u);
  CHECK(std::abs(c1 - ComplexFloat(-0.5, std::sqrt(3.0) / 2.0)) < 1e-12);

  // periodicity along the coroot lattice
  AlcoveSampler sampler = alcove_sampler(a2, 5);
  std::vector<double> v = sampler.sample(3);
  std::vector<double> shifted = v;
  for (int a = 0; a < 3; ++a) shifted[a] += sampler.coroot_basis[a][0].to_double();
  CHECK(std::abs(generalized_cosine(a2, {1, 2}, v) -
                 generalized_cosine(a2, {1, 2}, shifted)) < 1e-9);

  // sine vanishes on walls
  CHECK(std::abs(generalized_sine(a2, {1, 0}, v)) == 0.0);
}

TEST_CASE("monte carlo orthogonality") {
  auto a2 = build_root_system({Family::A, 2});
  OrthoResult r = orthogonality_mc(a2, {1, 0}, {1, 0}, 50000, 42);
  CHECK(r.target == Rational(1, 3));
  CHECK(std::abs(r.estimate.real() - 1.0 / 3.0) < 0.015);
  CHECK(std::abs(r.estimate.imag()) < 0.015);
  CHECK(r.stderr_est > 0);

  OrthoResult zero = orthogonality_mc(a2, {1, 0}, {0, 1}, 50000, 42);
  CHECK(zero.target == Rational(0));
  CHECK(std::abs(zero.estimate.real()) < 0.015);

  auto c2 = build_root_system({Family::C, 2});
  OrthoResult sine = orthogonality_mc(c2, {1, 1}, {1, 1}, 50000, 42, true);
  CHECK(sine.target == Rational(1, 8));
  CHECK(std::abs(sine.estimate.real() - 0.125) < 0.015);
}

TEST_CASE("parallel Monte Carlo equals the serial reference") {
  auto b2 = build_root_system({Family::B, 2});
  OrthoResult a = orthogonality_mc(b2, {1, 0}, {1, 0}, 100000, 7);
  OrthoResult b = orthogonality_mc_serial(b2, {1, 0}, {1, 0}, 100000, 7);
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_est == b.stderr_est);
  CHECK(a.target == b.target);
}

TEST_CASE("experimental converse check on sampled NSD points") {
  // where M(z) is NSD at sampled orbit-space points, membership holds; this
  // exercises the sampling harness without asserting the converse globally
  const FamilyContext& ctx = family_context(Family::C, 2);
  MPolyMat m = m_matrix_symbolic(ctx.d);
  CounterRng rng(89);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 20; ++t) {
    std::vector<double> z = {2.0 * rng.uniform(2 * t) - 1.0, 2.0 * rng.uniform(2 * t + 1) - 1.0};
    DMat md(2, std::vector<double>(2, 0.0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) md[i][j] = m[i][j].eval_d(z);
    auto eig = jacobi_eigenvalues(md);
    if (eig[0] > 1e-9 || eig[1] > 1e-9) continue;  // not NSD, skip
    ++tested;
    CHECK(membership_f(Family::C, 2, z).psd);
  }
  CHECK(tested > 0);
}

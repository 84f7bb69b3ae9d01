#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/golden.hpp"
#include "weyl/mpoly.hpp"
#include "weyl/numeric.hpp"
#include "weyl/rng.hpp"

using namespace weyl;

namespace {

// test-only oracle: char poly by cofactor expansion over Q[x]
using UPoly = std::vector<Rational>;  // coefficient of x^i at index i

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UPoly up_neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

UPoly det_xI_minus_A(const std::vector<std::vector<UPoly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  UPoly det{Rational(0)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<UPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<UPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    UPoly term = up_mul(m[0][j], det_xI_minus_A(minor));
    det = up_add(det, j % 2 == 0 ? term : up_neg(term));
  }
  return det;
}

CharPoly char_poly_cofactor(const RatMat& a) {
  std::size_t n = a.size();
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = UPoly{-a[i][j], Rational(1)};
      else
        m[i][j] = UPoly{-a[i][j]};
    }
  UPoly p = det_xI_minus_A(m);
  CharPoly cp;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational c = p[n - i];  // coefficient of x^{n-i}
    cp.a.push_back(i % 2 == 0 ? c : -c);
  }
  return cp;
}

RatMat companion_of(const std::vector<Rational>& monic) {
  int n = static_cast<int>(monic.size());
  RatMat c(n, RatVec(n, Rational(0)));
  for (int k = 1; k < n; ++k) c[k][k - 1] = Rational(1);
  for (int k = 0; k < n; ++k) c[k][n - 1] = -monic[n - 1 - k];
  return c;
}

}  // namespace

TEST_CASE("characteristic polynomial basics") {
  RatMat i2 = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CharPoly cp = char_poly(i2);
  CHECK(cp.a == std::vector<Rational>{Rational(2), Rational(1)});

  // companion of x^2 - 3x + 2 reproduces its own coefficients
  RatMat comp = companion_of({Rational(-3), Rational(2)});
  CharPoly cc = char_poly(comp);
  CHECK(cc.a == std::vector<Rational>{Rational(3), Rational(2)});

  // [[0, -4b], [1, 4a]] -> x^2 - 4a x + 4b (cofactor oracle)
  Rational a(2, 3), b(5, 7);
  RatMat m = {{Rational(0), Rational(-4) * b}, {Rational(1), Rational(4) * a}};
  CHECK(char_poly(m).a == std::vector<Rational>{Rational(4) * a, Rational(4) * b});
  CHECK(char_poly(m).a == char_poly_cofactor(m).a);
}

TEST_CASE("char poly agrees with the cofactor oracle up to 4x4") {
  CounterRng rng(17);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng.uniform_int(1000 + t, 0, 3));
    RatMat a(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a[i][j] = Rational(rng.uniform_int(64 * t + 8 * i + j, -6, 6),
                           rng.uniform_int(9000 + 64 * t + 8 * i + j, 1, 3));
    CHECK(char_poly(a).a == char_poly_cofactor(a).a);
  }
}

TEST_CASE("companion matrices of random monic polynomials") {
  CounterRng rng(18);
  for (int t = 0; t < 25; ++t) {
    int deg = 1 + static_cast<int>(rng.uniform_int(3000 + t, 0, 7));
    std::vector<Rational> coeffs;
    for (int i = 0; i < deg; ++i)
      coeffs.push_back(Rational(rng.uniform_int(64 * t + i, -9, 9)));
    CharPoly cp = char_poly(companion_of(coeffs));
    for (int i = 1; i <= deg; ++i)
      CHECK(cp.a[i - 1] == (i % 2 == 0 ? coeffs[i - 1] : -coeffs[i - 1]));
  }
}

TEST_CASE("psd decisions") {
  PsdVerdict v1 = psd_test({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  CHECK(v1.psd);
  CHECK(v1.rank == 1);

  PsdVerdict v2 = psd_test({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  CHECK(!v2.psd);
  CHECK(v2.coeffs.a[1] == Rational(-1));

  CHECK_THROWS_AS(psd_test({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("psd agrees with a float eigenvalue oracle") {
  CounterRng rng(19);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng.uniform_int(5000 + t, 0, 4));
    RatMat a(n, RatVec(n, Rational(0)));
    DMat ad(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        a[i][j] = a[j][i] = Rational(rng.uniform_int(64 * t + 8 * i + j, -5, 5));
        ad[i][j] = ad[j][i] = a[i][j].to_double();
      }
    auto eig = jacobi_eigenvalues(ad);
    double mn = eig[0], mnabs = std::abs(eig[0]);
    for (double e : eig) {
      mn = std::min(mn, e);
      mnabs = std::min(mnabs, std::abs(e));
    }
    if (mnabs < 1e-9) continue;  // exact verdict is authoritative near singularity
    CHECK(psd_test(a).psd == (mn >= 0));
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("trace sequences") {
  MPoly z = MPoly::variable(1, 0);
  MPolyMat one = {{z}};
  auto t = matrix_poly_power_traces(one, 3);
  CHECK(t[0] == MPoly::constant(1, 1));
  CHECK(t[1] == z);
  CHECK(t[2] == z * z);
  CHECK(t[3] == z * z * z);

  // C2 companion: tr C = 4 z1, tr C^2 = 16 z1^2 - 8 z2 (direct 2x2 oracle)
  MPoly z1 = MPoly::variable(2, 0), z2 = MPoly::variable(2, 1);
  MPolyMat c = {{MPoly(2), z2.scaled(-4)}, {MPoly::constant(2, 1), z1.scaled(4)}};
  auto tc = matrix_poly_power_traces(c, 2);
  CHECK(tc[0] == MPoly::constant(2, 2));
  CHECK(tc[1] == z1.scaled(4));
  CHECK(tc[2] == (z1 * z1).scaled(16) - z2.scaled(8));
}

TEST_CASE("newton identities match explicit powers") {
  CounterRng rng(23);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + static_cast<int>(rng.uniform_int(t, 0, 2));
    MPolyMat c(n, std::vector<MPoly>(n, MPoly(2)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        MPoly p(2);
        for (int e1 = 0; e1 <= 1; ++e1)
          for (int e2 = 0; e2 + e1 <= 2; ++e2)
            p.add_term({e1, e2},
                       Rational(rng.uniform_int(1024 * t + 64 * i + 8 * j + 2 * e1 + e2, -2, 2)));
        c[i][j] = p;
      }
    auto a = matrix_poly_power_traces(c, 2 * n, TraceMethod::ExplicitPowers);
    auto b = matrix_poly_power_traces(c, 2 * n, TraceMethod::NewtonIdentities);
    CHECK(a == b);
  }
}

TEST_CASE("polynomial evaluation") {
  MPoly p = MPoly::variable(1, 0);
  CHECK(p.eval({Rational(7, 3)}) == Rational(7, 3));

  // the A2 weight polynomial vanishes at (1,1)
  CHECK(golden::a2_phi().eval({Rational(1), Rational(1)}) == Rational(0));

  // det of the reference C2 Hermite matrix vanishes at the origin
  MPolyMat h = golden::c2_hermite();
  MPoly det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  CHECK(det.eval({Rational(0), Rational(0)}) == Rational(0));

  CHECK_THROWS_AS(p.eval({}), std::invalid_argument);
}

TEST_CASE("symbolic determinants") {
  CounterRng rng(29);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + static_cast<int>(rng.uniform_int(t, 0, 3));
    MPolyMat m(n, std::vector<MPoly>(n, MPoly(1)));
    RatMat a(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = Rational(rng.uniform_int(64 * t + 8 * i + j, -5, 5));
        m[i][j] = MPoly::constant(1, a[i][j]);
      }
    CHECK(det_sym(m) == MPoly::constant(1, det_rational(a)));
  }

  // symbolic 2x2 against the closed form
  MPoly z1 = MPoly::variable(2, 0), z2 = MPoly::variable(2, 1);
  MPolyMat m = {{z1, z2}, {z2.scaled(3), z1 * z1}};
  CHECK(det_sym(m) == z1 * z1 * z1 - (z2 * z2).scaled(3));
}

TEST_CASE("symmetric polynomial matrix storage") {
  SymMatrixPoly s(3, 2);
  MPoly z1 = MPoly::variable(2, 0);
  s.set_entry(2, 0, z1);
  CHECK(s.entry(0, 2) == z1);
  CHECK(s.entry(2, 0) == z1);
  CHECK(s.entry(1, 1).is_zero());
}

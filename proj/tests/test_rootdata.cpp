#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/rootdata.hpp"

using namespace weyl;

namespace {

Integer binom(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

RatVec rv(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("standard coordinate data C2") {
  auto d = build_root_system({Family::C, 2});
  CHECK(d.simple_roots[0] == rv({Rational(1), Rational(-1)}));
  CHECK(d.simple_roots[1] == rv({Rational(0), Rational(2)}));
  // the fundamental weights dual to the simple coroots
  CHECK(d.fundamental_weights[0] == rv({Rational(1), Rational(0)}));
  CHECK(d.fundamental_weights[1] == rv({Rational(1), Rational(1)}));
  CHECK(d.highest_root == rv({Rational(2), Rational(0)}));
  CHECK(d.cartan == IntMat{{2, -1}, {-2, 2}});
  CHECK(d.group_order == 8);
}

TEST_CASE("standard coordinate data A2 and B2") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK(a2.fundamental_weights[0] ==
        rv({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
  CHECK(a2.fundamental_weights[1] == rv({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
  CHECK(a2.group_order == 6);

  auto b2 = build_root_system({Family::B, 2});
  CHECK(b2.fundamental_weights[0] == rv({Rational(1), Rational(0)}));
  CHECK(b2.fundamental_weights[1] == rv({Rational(1, 2), Rational(1, 2)}));
  CHECK(b2.simple_roots[1] == rv({Rational(0), Rational(1)}));
  CHECK(b2.highest_root == rv({Rational(1), Rational(1)}));
}

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(build_root_system({Family::A, 0}), std::out_of_range);
  CHECK_THROWS_AS(build_root_system({Family::B, 1}), std::out_of_range);
  CHECK_THROWS_AS(build_root_system({Family::D, 2}), std::out_of_range);
  CHECK_NOTHROW(build_root_system({Family::C, 1}));
}

TEST_CASE("simple reflections") {
  auto a1 = build_root_system({Family::A, 1});
  CHECK(a1.generators == std::vector<IntMat>{{{-1}}});

  auto c2 = build_root_system({Family::C, 2});
  // involutions whose product has order 4 (dihedral group of order 8)
  IntMat p = mat_mul(c2.generators[0], c2.generators[1]);
  IntMat p2 = mat_mul(p, p);
  CHECK(p2 != identity_matrix(2));
  CHECK(mat_mul(p2, p2) == identity_matrix(2));
}

TEST_CASE("generators are involutions preserving the invariant form") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::C, 4}, {Family::D, 4}}) {
    auto d = build_root_system({f, r});
    for (const auto& g : d.generators) {
      CHECK(mat_mul(g, g) == identity_matrix(r));
      // g^t Gram g = Gram, i.e. the ambient representation is orthogonal
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          Rational lhs(0);
          for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
              lhs += Rational(g[k][i]) * d.gram[k][l] * Rational(g[l][j]);
          CHECK(lhs == d.gram[i][j]);
        }
    }
  }
}

TEST_CASE("orbit sizes match the closed forms") {
  auto orbit_of_unit = [](const RootSystemData& d, int i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    return orbit(d, e).size();
  };

  auto c2 = build_root_system({Family::C, 2});
  CHECK(orbit_of_unit(c2, 0) == 4);
  auto a2 = build_root_system({Family::A, 2});
  CHECK(orbit_of_unit(a2, 0) == 3);
  auto d4 = build_root_system({Family::D, 4});
  CHECK(orbit_of_unit(d4, 3) == 8);

  for (int r = 2; r <= 5; ++r) {
    auto a = build_root_system({Family::A, r});
    for (int i = 0; i < r; ++i)
      CHECK(Integer(static_cast<long>(orbit_of_unit(a, i))) == binom(r + 1, i + 1));
    auto c = build_root_system({Family::C, r});
    auto b = build_root_system({Family::B, r});
    for (int i = 0; i < r; ++i) {
      Integer want = binom(r, i + 1) * (Integer(1) << (i + 1));
      CHECK(Integer(static_cast<long>(orbit_of_unit(c, i))) == want);
      CHECK(Integer(static_cast<long>(orbit_of_unit(b, i))) == want);
    }
    if (r >= 3) {
      auto dd = build_root_system({Family::D, r});
      for (int i = 0; i < r - 2; ++i)
        CHECK(Integer(static_cast<long>(orbit_of_unit(dd, i))) ==
              binom(r, i + 1) * (Integer(1) << (i + 1)));
      CHECK(Integer(static_cast<long>(orbit_of_unit(dd, r - 2))) == Integer(1) << (r - 1));
      CHECK(Integer(static_cast<long>(orbit_of_unit(dd, r - 1))) == Integer(1) << (r - 1));
    }
  }
}

TEST_CASE("orbit times stabilizer equals group order") {
  for (auto [f, lo] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::B, 2}, {Family::C, 1}, {Family::D, 3}}) {
    for (int r = lo; r <= 5; ++r) {
      auto d = build_root_system({f, r});
      for (int i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        CHECK(stabilizer_order(d, e) * orbit_size(d, e) == d.group_order);
      }
    }
  }
}

TEST_CASE("orbit cap raises a resource error") {
  auto c4 = build_root_system({Family::C, 4});
  IntVec reg(4, 1);
  CHECK_THROWS_AS(orbit(c4, reg, 10), ResourceError);
}

TEST_CASE("group enumeration") {
  auto b3 = build_root_system({Family::B, 3});
  GroupRep rep = enumerate_group(b3);
  CHECK(rep.order == 48);
  CHECK(rep.elements.size() == 48);
  long plus = 0, minus = 0;
  for (auto& [m, s] : rep.elements) (s > 0 ? plus : minus) += 1;
  CHECK(plus == minus);  // determinant characters split evenly
  CHECK_THROWS_AS(enumerate_group(b3, 10), ResourceError);
}

TEST_CASE("dominant representative") {
  auto d4 = build_root_system({Family::D, 4});
  for (const auto& v : orbit(d4, {1, 0, 2, 1})) {
    IntVec dom = dominant_representative(d4, v);
    CHECK(is_dominant(dom));
    CHECK(dom == dominant_representative(d4, IntVec{1, 0, 2, 1}));
  }
}

TEST_CASE("signed orbit vanishes on walls") {
  auto a2 = build_root_system({Family::A, 2});
  CHECK(signed_orbit(a2, {1, 0}).empty());   // stabilized by a reflection
  CHECK(!signed_orbit(a2, {1, 1}).empty());  // regular
  CHECK(signed_orbit(a2, {1, 1}).size() == 6);
}

TEST_CASE("highest roots match the standard values") {
  auto a3 = build_root_system({Family::A, 3});
  CHECK(a3.highest_root == rv({Rational(1), Rational(0), Rational(0), Rational(-1)}));
  auto c3 = build_root_system({Family::C, 3});
  CHECK(c3.highest_root == rv({Rational(2), Rational(0), Rational(0)}));
  auto d4 = build_root_system({Family::D, 4});
  CHECK(d4.highest_root == rv({Rational(1), Rational(1), Rational(0), Rational(0)}));
  // dominant: nonnegative pairing with every simple coroot
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::B, 3}, {Family::C, 4}, {Family::D, 5}}) {
    auto d = build_root_system({f, r});
    for (int j = 0; j < r; ++j) {
      Rational norm(0), pairing(0);
      for (int a = 0; a < d.ambient; ++a) {
        norm += d.simple_roots[j][a] * d.simple_roots[j][a];
        pairing += d.highest_root[a] * d.simple_roots[j][a];
      }
      CHECK(Rational(2) * pairing / norm >= Rational(0));
    }
  }
}

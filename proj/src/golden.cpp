#include "weyl/golden.hpp"
#include <cmath>

namespace weyl {
namespace golden {

namespace {

struct Term {
  long coeff;
  std::vector<int> exp;
};

MPoly from_terms(int nvars, const std::vector<Term>& terms, long denom = 1) {
  MPoly p(nvars);
  for (const auto& t : terms) p.add_term(t.exp, Rational(t.coeff, denom));
  return p;
}

}  // namespace

MPolyMat c2_hermite() {
  MPoly h11 = from_terms(2, {{-2, {2, 0}}, {1, {0, 1}}, {1, {0, 0}}});
  MPoly h12 = from_terms(2, {{-8, {3, 0}}, {6, {1, 1}}, {2, {1, 0}}});
  MPoly h22 = from_terms(
      2, {{-32, {4, 0}}, {8, {2, 0}}, {32, {2, 1}}, {-4, {0, 2}}, {-4, {0, 1}}});
  return {{h11, h12}, {h12, h22}};
}

MPolyMat b2_hermite() {
  MPoly h11 = from_terms(2, {{-1, {2, 0}}, {2, {0, 2}}, {-1, {1, 0}}});
  MPoly h12 = from_terms(2, {{-4, {3, 0}}, {12, {1, 2}}, {-6, {2, 0}}, {-2, {1, 0}}});
  MPoly h22 = from_terms(2, {{-16, {4, 0}},
                             {64, {2, 2}},
                             {-32, {0, 4}},
                             {-32, {3, 0}},
                             {32, {1, 2}},
                             {-20, {2, 0}},
                             {8, {0, 2}},
                             {-4, {1, 0}}});
  return {{h11, h12}, {h12, h22}};
}

MPolyMat c2_companion() {
  MPoly zero(2);
  return {{zero, from_terms(2, {{-4, {0, 1}}})},
          {MPoly::constant(2, 1), from_terms(2, {{4, {1, 0}}})}};
}

MPolyMat b2_companion() {
  MPoly zero(2);
  return {{zero, from_terms(2, {{-16, {0, 2}}, {8, {1, 0}}, {4, {0, 0}}})},
          {MPoly::constant(2, 1), from_terms(2, {{4, {1, 0}}})}};
}

MPolyMat a2_companion() {
  MPoly zero(2);
  MPoly half = MPoly::constant(2, Rational(1, 2));
  MPoly c02 = from_terms(2, {{1, {0, 0}}, {9, {2, 0}}, {-9, {0, 2}}}, 2);
  MPoly c12 = from_terms(2, {{1, {0, 0}}, {-9, {2, 0}}, {-9, {0, 2}}, {-6, {1, 0}}}, 2);
  MPoly c22 = from_terms(2, {{3, {1, 0}}});
  return {{zero, half, c02}, {MPoly::constant(2, 1), zero, c12}, {zero, half, c22}};
}

MPoly a1_phi() { return from_terms(1, {{4, {2}}, {-4, {0}}}); }

MPoly a2_phi() {
  return from_terms(2, {{81, {2, 2}}, {-108, {3, 0}}, {-108, {0, 3}}, {162, {1, 1}}, {-27, {0, 0}}});
}

MPoly b2_phi() {
  return from_terms(2, {{256, {2, 2}},
                        {-1024, {0, 4}},
                        {-256, {3, 0}},
                        {1536, {1, 2}},
                        {-512, {2, 0}},
                        {256, {0, 2}},
                        {-256, {1, 0}}});
}

MPoly c2_phi() {
  return from_terms(2, {{-1024, {4, 0}},
                        {256, {2, 2}},
                        {1536, {2, 1}},
                        {-256, {0, 3}},
                        {256, {2, 0}},
                        {-512, {0, 2}},
                        {-256, {0, 1}}});
}

MPolyMat a2_m() {
  MPoly m11 = from_terms(2, {{2, {1, 1}}, {-2, {0, 0}}}, 3);
  MPoly m12 = from_terms(2, {{4, {2, 0}}, {-4, {0, 1}}}, 3);
  MPoly m21 = from_terms(2, {{4, {0, 2}}, {-4, {1, 0}}}, 3);
  return {{m11, m12}, {m21, m11}};
}

MPolyMat a1_m() { return {{from_terms(1, {{1, {2}}, {-1, {0}}})}}; }

MPoly d4_det() {
  // prefactor 2^32 (z3 - z4)^2 (z3 + z4)^2 = 2^32 (z3^2 - z4^2)^2
  MPoly pre = from_terms(4, {{1, {0, 0, 4, 0}}, {-2, {0, 0, 2, 2}}, {1, {0, 0, 0, 4}}});
  pre = pre.scaled(Rational(Integer(Integer(1) << 32)));
  MPoly inner = from_terms(
      4,
      {{-512, {3, 0, 3, 3}}, {-432, {4, 0, 4, 0}}, {-96, {4, 0, 2, 2}},  {-432, {4, 0, 0, 4}},
       {864, {3, 1, 3, 1}},  {864, {3, 1, 1, 3}},  {144, {2, 2, 2, 2}},  {-96, {2, 0, 4, 2}},
       {-96, {2, 0, 2, 4}},  {864, {1, 1, 3, 3}},  {-432, {0, 0, 4, 4}}, {-384, {5, 0, 1, 1}},
       {864, {4, 1, 2, 0}},  {864, {4, 1, 0, 2}},  {-1440, {3, 2, 1, 1}},
       {96, {3, 0, 3, 1}},   {96, {3, 0, 1, 3}},   {-216, {2, 3, 2, 0}}, {-216, {2, 3, 0, 2}},
       {864, {2, 1, 4, 0}},  {576, {2, 1, 2, 2}},  {864, {2, 1, 0, 4}},  {-1440, {1, 2, 3, 1}},
       {-1440, {1, 2, 1, 3}},
       {-384, {1, 0, 5, 1}}, {96, {1, 0, 3, 3}},   {-384, {1, 0, 1, 5}}, {-216, {0, 3, 2, 2}},
       {864, {0, 1, 4, 2}},  {864, {0, 1, 2, 4}},  {64, {6, 0, 0, 0}},   {-288, {4, 2, 0, 0}},
       {192, {4, 0, 2, 0}},  {192, {4, 0, 0, 2}},  {288, {3, 1, 1, 1}},  {324, {2, 4, 0, 0}},
       {-1872, {2, 2, 2, 0}},
       {-1872, {2, 2, 0, 2}},
       {192, {2, 0, 4, 0}},  {-240, {2, 0, 2, 2}}, {192, {2, 0, 0, 4}},  {2376, {1, 3, 1, 1}},
       {288, {1, 1, 3, 1}},  {288, {1, 1, 1, 3}},  {324, {0, 4, 2, 0}},  {324, {0, 4, 0, 2}},
       {-288, {0, 2, 4, 0}}, {-1872, {0, 2, 2, 2}},
       {-288, {0, 2, 0, 4}}, {64, {0, 0, 6, 0}},   {192, {0, 0, 4, 2}},  {192, {0, 0, 2, 4}},
       {64, {0, 0, 0, 6}},   {-288, {4, 1, 0, 0}}, {192, {3, 0, 1, 1}},  {864, {2, 3, 0, 0}},
       {-792, {2, 1, 2, 0}}, {-792, {2, 1, 0, 2}}, {792, {1, 2, 1, 1}},  {192, {1, 0, 3, 1}},
       {192, {1, 0, 1, 3}},  {-486, {0, 5, 0, 0}}, {864, {0, 3, 2, 0}},  {864, {0, 3, 0, 2}},
       {-288, {0, 1, 4, 0}}, {-792, {0, 1, 2, 2}}, {-288, {0, 1, 0, 4}}, {-48, {4, 0, 0, 0}},
       {576, {2, 2, 0, 0}},  {-96, {2, 0, 2, 0}},  {-96, {2, 0, 0, 2}},  {-72, {1, 1, 1, 1}},
       {-729, {0, 4, 0, 0}}, {576, {0, 2, 2, 0}},  {576, {0, 2, 0, 2}},  {-48, {0, 0, 4, 0}},
       {-96, {0, 0, 2, 2}},  {-48, {0, 0, 0, 4}},  {144, {2, 1, 0, 0}},  {-24, {1, 0, 1, 1}},
       {-432, {0, 3, 0, 0}}, {144, {0, 1, 2, 0}},  {144, {0, 1, 0, 2}},  {12, {2, 0, 0, 0}},
       {-126, {0, 2, 0, 0}}, {12, {0, 0, 2, 0}},   {12, {0, 0, 0, 2}},   {-18, {0, 1, 0, 0}},
       {-1, {0, 0, 0, 0}}});
  return pre * inner;
}

QuotientIdentity a2_quotient() {
  MPoly co = from_terms(2, {{3, {1, 0}}, {1, {0, 0}}});
  co = co * co * MPoly::monomial(2, {0, 4}, Rational(1));
  return {Rational(19683, 256), co};
}

QuotientIdentity b2_quotient() {
  return {Rational(16384, 9), MPoly::monomial(2, {0, 2}, Rational(1))};
}

QuotientIdentity c2_quotient() { return {Rational(1024, 9), MPoly::constant(2, 1)}; }

std::vector<VertexDatum> a2_vertices() {
  double s = std::sqrt(3.0) / 2.0;
  return {{{1.0, 0.0}, 0, true},
          {{-1.0 / 3.0, 0.0}, 0, true},
          {{-0.5, s}, 1, false},
          {{-0.5, -s}, 1, false}};
}

std::vector<std::vector<double>> c2_vertices() {
  return {{1.0, 1.0}, {-1.0, 1.0}, {0.0, -1.0}};
}

}  // namespace golden
}  // namespace weyl

#ifndef WEYL_GOLDEN_HPP
#define WEYL_GOLDEN_HPP

#include <vector>

#include "weyl/mpoly.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Closed-form reference data for the small worked cases; used by the
/// verification suites and golden tests.
namespace golden {

/// Unscaled 2x2 Hermite matrix for C2; the generated matrix is 8 times this.
MPolyMat c2_hermite();
/// Unscaled 2x2 Hermite matrix for B2; the generated matrix is 16 times this.
MPolyMat b2_hermite();

MPolyMat c2_companion();
MPolyMat b2_companion();
MPolyMat a2_companion();

/// Orthogonality weights in the canonical coordinates.
MPoly a1_phi();
MPoly a2_phi();
MPoly b2_phi();
MPoly c2_phi();

/// M matrix for A2 in conjugate-pair coordinates, and for A1.
MPolyMat a2_m();
MPolyMat a1_m();

/// det H(z) for D4 as printed: 2^32 (z3-z4)^2 (z3+z4)^2 * inner.
MPoly d4_det();

struct QuotientIdentity {
  Rational constant;
  MPoly cofactor;  // det H = constant * cofactor * det(-M)
};

QuotientIdentity a2_quotient();  // 19683/256 * (3 z1 + 1)^2 z2^4
QuotientIdentity b2_quotient();  // 16384/9 * z2^2
QuotientIdentity c2_quotient();  // 1024/9

/// Distinguished boundary points of the A2 orbit space in real coordinates,
/// with the rank of H there.
struct VertexDatum {
  std::vector<double> point;
  int rank;
  bool rational;  // exactly representable input
};
std::vector<VertexDatum> a2_vertices();

/// Vertices of the C2 orbit space.
std::vector<std::vector<double>> c2_vertices();

}  // namespace golden
}  // namespace weyl

#endif  // WEYL_GOLDEN_HPP

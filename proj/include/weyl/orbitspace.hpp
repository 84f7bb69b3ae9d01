#ifndef WEYL_ORBITSPACE_HPP
#define WEYL_ORBITSPACE_HPP

#include <optional>
#include <vector>

#include "weyl/laurent.hpp"
#include "weyl/mpoly.hpp"
#include "weyl/numeric.hpp"
#include "weyl/rational.hpp"
#include "weyl/rootdata.hpp"

namespace weyl {

/// Change of coordinates between the complex fundamental-invariant values
/// and the public real coordinates. Types B, C and even D are already real;
/// type A pairs coordinate i with rank+1-i, odd D pairs the last two.
struct RealEmbedding {
  struct Coord {
    int re_idx;   // which real coordinate carries the real part
    int im_idx;   // -1 for genuinely real coordinates
    int im_sign;  // 0 for real coordinates, else +1/-1
  };
  Family family;
  int rank = 0;
  std::vector<Coord> coords;

  bool is_identity() const;
  std::vector<GaussianRational> to_complex(const RatVec& w) const;
  std::vector<ComplexFloat> to_complex_d(const std::vector<double>& w) const;
  /// Validates the conjugation structure exactly and inverts.
  RatVec from_complex(const std::vector<GaussianRational>& z) const;
  std::vector<double> from_complex_d(const std::vector<ComplexFloat>& z) const;
};

RealEmbedding real_embedding(Family family, int rank);

/// The coefficient polynomials of the univariate symmetric system attached
/// to a family: monomial-basis companion coefficients for B/C/D, Chebyshev
/// coefficients (conjugate convolution) for A. All polynomials live in the
/// real public coordinates.
struct CoefficientMap {
  Family family;
  int rank = 0;   // number of public coordinates
  int n = 0;      // matrix dimension (rank, or rank+1 for type A)
  bool chebyshev_basis = false;
  int trace_scale = 4;  // H_ij = trace_scale*tr(C^{i+j-2}) - tr(C^{i+j})
  std::vector<MPoly> c;  // c[k] is c_{k+1}(z), or d_{k+1}(z) for type A
};

CoefficientMap symmetric_system_coeffs(Family family, int rank);

/// Companion matrix of the system as a polynomial matrix.
MPolyMat companion_matrix(const CoefficientMap& cm);

struct HermiteMatrix {
  Family family;
  int rank = 0;
  int n = 0;
  MPolyMat companion;
  SymMatrixPoly H;
};

/// Symbolic Hermite matrix H(z) whose positivity locus is the orbit space.
HermiteMatrix hermite_matrix(Family family, int rank,
                             TraceMethod method = TraceMethod::Auto);

/// H evaluated at a point through numeric companion powers (no symbolic
/// construction); exact for rational input.
RatMat hermite_at(const CoefficientMap& cm, const RatVec& z);
DMat hermite_at_d(const CoefficientMap& cm, const std::vector<double>& z);

/// Hermite matrix of a general monic polynomial p for the interval [-a, a]:
/// H_ij = tr(a^2 M^{i+j-2} - M^{i+j}) with M the companion matrix of p.
/// PSD iff all roots of p lie in [-a, a].
RatMat hermite_form_general(const RatVec& monic_coeffs, const Rational& a);

enum class RegionClass { Interior, Boundary, Outside };

struct MembershipReport {
  Family family;
  int rank = 0;
  bool exact = false;
  RatVec point_q;               // exact path input
  std::vector<double> point_d;  // float mirror of the input
  bool psd = false;
  CharPoly charpoly;                // exact path
  std::vector<double> charpoly_d;   // float path
  int rank_h = 0;
  RegionClass classification = RegionClass::Outside;
  std::vector<std::vector<ComplexFloat>> preimages;  // torus points, if requested
};

/// Exact membership decision; preimage reconstruction (optional) runs in
/// floating point and validates every branch against z.
MembershipReport membership(Family family, int rank, const RatVec& z,
                            bool want_preimages = false, double preimage_tol = 1e-9);

/// Floating-point membership with a boundary tolerance on the coefficient
/// signs of the characteristic polynomial.
MembershipReport membership_f(Family family, int rank, const std::vector<double>& z,
                              bool want_preimages = false, double boundary_tol = 1e-10,
                              double preimage_tol = 1e-9);

/// Fundamental invariants evaluated at an exact torus point, in the real
/// public coordinates.
RatVec theta_real(const RootSystemData& d, const std::vector<CirclePoint>& x);

/// Float path; rejects points farther than torus_tol from the torus.
std::vector<double> theta_real_d(const RootSystemData& d, const std::vector<ComplexFloat>& x,
                                 double torus_tol = 1e-12);

/// Torus preimages of a point of the orbit space (float path): roots of the
/// univariate system polynomial, half-disc lifting, telescoping inversion of
/// the monomial substitution, and branch enumeration. Returns every branch
/// whose image matches z within tol.
std::vector<std::vector<ComplexFloat>> reconstruct_preimages(Family family, int rank,
                                                             const std::vector<double>& z,
                                                             double tol = 1e-9);

struct RasterWindow {
  double xmin = -1.1, xmax = 1.1, ymin = -1.1, ymax = 1.1;
};

/// Verdicts on the (res_x+1) x (res_y+1) lattice of grid nodes spanning the
/// window (endpoints included). Axes pick which two coordinates vary; the
/// rest are pinned to `fixed`.
struct RasterGrid {
  Family family;
  int rank = 0;
  RasterWindow window;
  int res_x = 0, res_y = 0;
  int axis_x = 0, axis_y = 1;
  std::vector<double> fixed;
  std::vector<RegionClass> verdicts;  // row-major, (res_x+1)*(res_y+1)
  std::vector<int> ranks;
  std::vector<double> node_x, node_y;

  RegionClass at(int ix, int iy) const { return verdicts[iy * (res_x + 1) + ix]; }
};

RasterGrid region_raster(Family family, int rank, const RasterWindow& window, int res_x,
                         int res_y, int axis_x = 0, int axis_y = 1,
                         std::vector<double> fixed = {}, double boundary_tol = 1e-10,
                         bool parallel = true);

/// Serial reference for the OpenMP raster kernel; must produce identical
/// output.
RasterGrid region_raster_serial(Family family, int rank, const RasterWindow& window, int res_x,
                                int res_y, int axis_x = 0, int axis_y = 1,
                                std::vector<double> fixed = {}, double boundary_tol = 1e-10);

/// Shared per-(family, rank) data, cached process-wide.
struct FamilyContext {
  RootSystemData d;
  std::vector<LaurentPoly> thetas;
  RealEmbedding emb;
  CoefficientMap coeffs;
  MPolyMat companion;
};

const FamilyContext& family_context(Family family, int rank);

int max_threads_from_env();

}  // namespace weyl

#endif  // WEYL_ORBITSPACE_HPP

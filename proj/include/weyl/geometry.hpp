#ifndef WEYL_GEOMETRY_HPP
#define WEYL_GEOMETRY_HPP

#include <cstdint>
#include <vector>

#include "weyl/laurent.hpp"
#include "weyl/mpoly.hpp"
#include "weyl/rng.hpp"
#include "weyl/rootdata.hpp"

namespace weyl {

using GMat = std::vector<std::vector<GaussianRational>>;
using CMat = std::vector<std::vector<ComplexFloat>>;

/// Jacobian of the fundamental invariants with respect to the Euler
/// derivations: J[k][j] = x_k d(theta_j)/dx_k.
std::vector<std::vector<LaurentPoly>> euler_jacobian(const RootSystemData& d);

/// det(J) equals this constant times the signed orbit sum of (1,...,1).
Rational jacobian_determinant_factor(const RootSystemData& d);

/// Exact determinant of a Gaussian-rational matrix (Gaussian elimination).
GaussianRational det_g(GMat m);

GMat evaluate_jacobian(const std::vector<std::vector<LaurentPoly>>& j,
                       const std::vector<CirclePoint>& x);

/// Group-invariant positive definite form S = (1/|G|) sum_B B^t B.
struct InvariantForm {
  RatMat S;
};

InvariantForm invariant_form(const RootSystemData& d, std::size_t cap = kDefaultGroupCap);

/// Hermitian matrix J(x)^t S J(x^-1)-hat at an exact torus point; negative
/// semi-definite on the torus.
GMat m_matrix_at(const RootSystemData& d, const std::vector<CirclePoint>& x);
CMat m_matrix_at_d(const RootSystemData& d, const std::vector<ComplexFloat>& x,
                   double torus_tol = 1e-12);

/// Realification of a Hermitian matrix: [[Re, -Im], [Im, Re]]; PSD of the
/// realification is equivalent to PSD of the Hermitian matrix.
RatMat hermitian_realification(const GMat& m);

/// Exact negative semi-definiteness via the realification of -M.
bool is_nsd_exact(const GMat& m);

/// Entries of the M matrix rewritten as polynomials in the fundamental
/// invariants (conjugate-pair coordinates for types A and odd D).
MPolyMat m_matrix_symbolic(const RootSystemData& d);

struct ChebyshevPoly {
  enum class Kind { First, Second };
  Kind kind = Kind::First;
  IntVec alpha;
  MPoly poly;
};

/// First kind: T_alpha(theta_1, ..., theta_n) = orbit polynomial of alpha.
ChebyshevPoly chebyshev_first(const RootSystemData& d, const IntVec& alpha);

/// Second kind: U_alpha * (signed orbit sum of delta) = signed orbit sum of
/// alpha + delta (Weyl character).
ChebyshevPoly chebyshev_second(const RootSystemData& d, const IntVec& alpha);

/// Orthogonality weight: the square of the Weyl denominator expressed in
/// the fundamental invariants.
MPoly weight_phi(const RootSystemData& d);

/// (1/|W|) sum over the group of exp(2 pi i <A mu, u>); u in ambient
/// coordinates.
ComplexFloat generalized_cosine(const RootSystemData& d, const IntVec& mu,
                                const std::vector<double>& u);

/// Signed variant; identically zero for weights on a reflection wall.
ComplexFloat generalized_sine(const RootSystemData& d, const IntVec& mu,
                              const std::vector<double>& u);

/// Uniform sampler over one period cell of the coroot lattice.
struct AlcoveSampler {
  RatMat coroot_basis;  // ambient x rank, columns are simple coroots
  CounterRng rng;

  std::vector<double> sample(std::uint64_t index) const;
};

AlcoveSampler alcove_sampler(const RootSystemData& d, std::uint64_t seed);

struct OrthoResult {
  ComplexFloat estimate;
  Rational target;
  double stderr_est = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo average of f_mu * conj(f_nu) over the coroot period cell,
/// where f is the generalized cosine (or sine). Deterministic for a fixed
/// seed, independent of the number of threads.
OrthoResult orthogonality_mc(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                             std::size_t samples, std::uint64_t seed, bool sine = false,
                             bool parallel = true);

/// Serial reference for the parallel kernel; bit-identical results.
OrthoResult orthogonality_mc_serial(const RootSystemData& d, const IntVec& mu, const IntVec& nu,
                                    std::size_t samples, std::uint64_t seed, bool sine = false);

}  // namespace weyl

#endif  // WEYL_GEOMETRY_HPP

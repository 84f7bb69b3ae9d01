#ifndef WEYL_ROOTDATA_HPP
#define WEYL_ROOTDATA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

enum class Family { A, B, C, D };

char family_char(Family f);
Family family_from_char(char c);

struct RootSystemType {
  Family family;
  int rank;
};

using IntVec = std::vector<long>;
using IntMat = std::vector<std::vector<long>>;

/// Thrown when an orbit or group enumeration exceeds its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOrbitCap = 1u << 20;
inline constexpr std::size_t kDefaultGroupCap = 1000000;

/// Simple roots, fundamental weights and the Weyl group generators of one
/// of the four infinite families, in the standard coordinates.
///
/// Type A of rank m lives in the sum-zero hyperplane of R^{m+1}; the group
/// acts on exponent vectors in Z^m (weight basis). For B, C, D the ambient
/// dimension equals the rank.
struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  int ambient = 0;

  RatMat simple_roots;         // rank rows of length ambient
  RatMat fundamental_weights;  // rank rows of length ambient
  RatVec highest_root;         // length ambient
  IntMat cartan;               // rank x rank
  RatMat weight_matrix;        // ambient x rank, columns are the weights
  Integer group_order;
  std::vector<IntMat> generators;  // simple reflections in the weight basis

  RatMat gram;                // Gram matrix of the fundamental weights
  RatVec chamber_functional;  // gram * (1,...,1): positive on positive roots

  std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }
};

RootSystemData build_root_system(RootSystemType t);

inline const std::vector<IntMat>& simple_reflection_matrices(const RootSystemData& d) {
  return d.generators;
}

IntVec apply_matrix(const IntMat& m, const IntVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_matrix(int n);

/// Real coordinates W * alpha of the weight with exponent vector alpha.
RatVec weight_vector(const RootSystemData& d, const IntVec& alpha);

/// Linear functional strictly positive on positive roots; used as the
/// termination order for rewriting loops.
Rational chamber_height(const RootSystemData& d, const IntVec& alpha);

/// BFS closure of alpha under the generators.
std::vector<IntVec> orbit(const RootSystemData& d, const IntVec& alpha,
                          std::size_t cap = kDefaultOrbitCap);

/// Orbit with determinant signs. Returns an empty list when the stabilizer
/// contains a reflection (the signed sum vanishes identically).
std::vector<std::pair<IntVec, int>> signed_orbit(const RootSystemData& d, const IntVec& alpha,
                                                 std::size_t cap = kDefaultOrbitCap);

/// The unique dominant point of the orbit of alpha.
IntVec dominant_representative(const RootSystemData& d, IntVec alpha);

bool is_dominant(const IntVec& alpha);

Integer orbit_size(const RootSystemData& d, const IntVec& alpha);
Integer stabilizer_order(const RootSystemData& d, const IntVec& alpha);

/// Explicit matrix group, materialized only for small orders.
struct GroupRep {
  std::vector<IntMat> generators;
  std::vector<std::pair<IntMat, int>> elements;  // (matrix, determinant)
  Integer order;
};

GroupRep enumerate_group(const RootSystemData& d, std::size_t cap = kDefaultGroupCap);

}  // namespace weyl

#endif  // WEYL_ROOTDATA_HPP

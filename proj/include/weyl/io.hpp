#ifndef WEYL_IO_HPP
#define WEYL_IO_HPP

#include <string>

#include <json.hpp>

#include "weyl/geometry.hpp"
#include "weyl/mpoly.hpp"
#include "weyl/orbitspace.hpp"

namespace weyl {
namespace io {

inline constexpr const char* kSchema = "weyl-torus/1";

using nlohmann::json;

json rational_json(const Rational& r);
Rational rational_from_json(const json& j);
json complex_json(const ComplexFloat& z);

json mpoly_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);
json mpoly_mat_json(const MPolyMat& m);
MPolyMat mpoly_mat_from_json(const json& j);

/// Coordinate convention used by polynomials of a family: the canonical
/// invariant coordinates are complex conjugate pairs for A and odd D.
std::string canonical_coordinates(Family family, int rank);

json hermite_json(const HermiteMatrix& hm);
HermiteMatrix hermite_from_json(const json& j);

json membership_json(const MembershipReport& rep);

json polynomial_payload(const std::string& kind, Family family, int rank,
                        const std::string& coordinates, const MPoly& p);

json ortho_json(Family family, int rank, const IntVec& mu, const IntVec& nu, bool sine,
                std::uint64_t seed, const OrthoResult& r);

std::string raster_csv(const RasterGrid& grid);

struct SvgOptions {
  int cell_px = 4;
  std::string inside_fill = "#9a9a9a";
  std::string boundary_fill = "#3b3b3b";
  std::string background = "#ffffff";
};

std::string raster_svg(const RasterGrid& grid, const SvgOptions& opts = {});

}  // namespace io
}  // namespace weyl

#endif  // WEYL_IO_HPP

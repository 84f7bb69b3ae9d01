#include "weyl/io.hpp"

#include <sstream>

namespace weyl {
namespace io {

json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  return Rational::from_string(j.get<std::string>());
}

json complex_json(const ComplexFloat& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json mpoly_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", e}, {"coef", rational_json(c)}});
  return json{{"vars", p.nvars()}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const json& j) {
  MPoly p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exp").get<std::vector<int>>(), rational_from_json(t.at("coef")));
  return p;
}

json mpoly_mat_json(const MPolyMat& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& p : row) r.push_back(mpoly_json(p));
    rows.push_back(std::move(r));
  }
  return rows;
}

MPolyMat mpoly_mat_from_json(const json& j) {
  MPolyMat m;
  for (const auto& row : j) {
    std::vector<MPoly> r;
    for (const auto& p : row) r.push_back(mpoly_from_json(p));
    m.push_back(std::move(r));
  }
  return m;
}

std::string canonical_coordinates(Family family, int rank) {
  bool pair = family == Family::A ? rank >= 2 : (family == Family::D && rank % 2 == 1);
  return pair ? "conjugate-pair" : "real";
}

json hermite_json(const HermiteMatrix& hm) {
  return json{{"schema", kSchema},
              {"kind", "hermite_matrix"},
              {"family", std::string(1, family_char(hm.family))},
              {"rank", hm.rank},
              {"n", hm.n},
              {"coordinates", "real"},
              {"companion", mpoly_mat_json(hm.companion)},
              {"H", mpoly_mat_json(hm.H.to_full())}};
}

HermiteMatrix hermite_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kSchema)
    throw std::invalid_argument("hermite_from_json: unknown schema");
  HermiteMatrix hm;
  hm.family = family_from_char(j.at("family").get<std::string>().at(0));
  hm.rank = j.at("rank").get<int>();
  hm.n = j.at("n").get<int>();
  hm.companion = mpoly_mat_from_json(j.at("companion"));
  MPolyMat full = mpoly_mat_from_json(j.at("H"));
  hm.H = SymMatrixPoly(hm.n, full.empty() ? 0 : full[0][0].nvars());
  for (int i = 0; i < hm.n; ++i)
    for (int k = i; k < hm.n; ++k) hm.H.set_entry(i, k, full[i][k]);
  return hm;
}

namespace {

const char* class_name(RegionClass c) {
  switch (c) {
    case RegionClass::Interior: return "interior";
    case RegionClass::Boundary: return "boundary";
    case RegionClass::Outside: return "outside";
  }
  return "?";
}

}  // namespace

json membership_json(const MembershipReport& rep) {
  json j{{"schema", kSchema},
         {"kind", "membership"},
         {"family", std::string(1, family_char(rep.family))},
         {"rank", rep.rank},
         {"exact", rep.exact},
         {"psd", rep.psd},
         {"rank_H", rep.rank_h},
         {"classification", class_name(rep.classification)}};
  if (rep.exact) {
    json pt = json::array();
    for (const auto& c : rep.point_q) pt.push_back(rational_json(c));
    j["point"] = std::move(pt);
    json cp = json::array();
    for (const auto& a : rep.charpoly.a) cp.push_back(rational_json(a));
    j["charpoly"] = std::move(cp);
  } else {
    j["point"] = rep.point_d;
    j["charpoly"] = rep.charpoly_d;
  }
  if (!rep.preimages.empty()) {
    json pre = json::array();
    for (const auto& x : rep.preimages) {
      json p = json::array();
      for (const auto& xi : x) p.push_back(complex_json(xi));
      pre.push_back(std::move(p));
    }
    j["preimages"] = std::move(pre);
  }
  return j;
}

json polynomial_payload(const std::string& kind, Family family, int rank,
                        const std::string& coordinates, const MPoly& p) {
  return json{{"schema", kSchema},
              {"kind", kind},
              {"family", std::string(1, family_char(family))},
              {"rank", rank},
              {"coordinates", coordinates},
              {"poly", mpoly_json(p)},
              {"text", p.to_string()}};
}

json ortho_json(Family family, int rank, const IntVec& mu, const IntVec& nu, bool sine,
                std::uint64_t seed, const OrthoResult& r) {
  return json{{"schema", kSchema},
              {"kind", "orthogonality"},
              {"family", std::string(1, family_char(family))},
              {"rank", rank},
              {"mu", mu},
              {"nu", nu},
              {"sine", sine},
              {"seed", seed},
              {"samples", r.samples},
              {"estimate", complex_json(r.estimate)},
              {"target", rational_json(r.target)},
              {"target_float", r.target.to_double()},
              {"stderr", r.stderr_est}};
}

std::string raster_csv(const RasterGrid& grid) {
  std::ostringstream os;
  for (int c = 0; c < grid.rank; ++c) os << "z" << (c + 1) << ",";
  os << "psd,rank\n";
  int nx = grid.res_x + 1;
  int ny = grid.res_y + 1;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      std::vector<double> z = grid.fixed;
      z[grid.axis_x] = grid.node_x[i];
      z[grid.axis_y] = grid.node_y[j];
      for (int c = 0; c < grid.rank; ++c) os << z[c] << ",";
      RegionClass v = grid.at(i, j);
      os << (v != RegionClass::Outside ? 1 : 0) << ","
         << grid.ranks[static_cast<std::size_t>(j) * nx + i] << "\n";
    }
  return os.str();
}

std::string raster_svg(const RasterGrid& grid, const SvgOptions& opts) {
  int nx = grid.res_x + 1;
  int ny = grid.res_y + 1;
  int w = nx * opts.cell_px;
  int h = ny * opts.cell_px;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"" << opts.background
     << "\"/>\n";
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      RegionClass v = grid.at(i, j);
      if (v == RegionClass::Outside) continue;
      // SVG y axis points down; flip so the window reads naturally
      int px = i * opts.cell_px;
      int py = (ny - 1 - j) * opts.cell_px;
      os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << opts.cell_px
         << "\" height=\"" << opts.cell_px << "\" fill=\""
         << (v == RegionClass::Boundary ? opts.boundary_fill : opts.inside_fill) << "\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace io
}  // namespace weyl

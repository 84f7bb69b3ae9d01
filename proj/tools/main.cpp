#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weyl/geometry.hpp"
#include "weyl/io.hpp"
#include "weyl/orbitspace.hpp"
#include "weyl/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace weyl;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOutside = 3;
constexpr int kExitNumeric = 4;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool looks_exact(const std::string& s) {
  return s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
         s.find('E') == std::string::npos;
}

struct PointArg {
  bool exact = false;
  RatVec q;
  std::vector<double> d;
};

PointArg parse_point(const std::string& arg) {
  PointArg p;
  auto parts = split(arg, ',');
  p.exact = !parts.empty();
  for (const auto& s : parts)
    if (!looks_exact(s)) p.exact = false;
  for (const auto& s : parts) {
    if (p.exact) {
      Rational r = Rational::from_string(s);
      p.q.push_back(r);
      p.d.push_back(r.to_double());
    } else {
      p.d.push_back(std::stod(s));
    }
  }
  return p;
}

IntVec parse_intvec(const std::string& arg) {
  IntVec v;
  for (const auto& s : split(arg, ',')) v.push_back(std::stol(s));
  return v;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text << "\n";
}

void apply_thread_cap() {
#ifdef _OPENMP
  const char* env = std::getenv("WEYL_TORUS_THREADS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v > 0) omp_set_num_threads(v);
  }
#endif
}

json numeric_diagnostic(const std::string& what, double residual) {
  return json{{"schema", io::kSchema},
              {"kind", "error"},
              {"error", "numeric"},
              {"what", what},
              {"residual", residual}};
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"Exact semi-algebraic descriptions of compact torus orbit spaces "
               "of Weyl groups (types A, B, C, D)"};
  app.require_subcommand(1);

  std::string family_str = "C";
  int rank = 2;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd, bool with_out = true) {
    cmd->add_option("-f,--family", family_str, "Root system family: A, B, C or D");
    cmd->add_option("-r,--rank", rank, "Rank (A >= 1, C >= 1, B >= 2, D >= 3)");
    if (with_out) cmd->add_option("-o,--out", out_path, "Write output to this file");
  };

  // hermite
  auto* cmd_hermite = app.add_subcommand("hermite", "Emit the Hermite matrix H(z) and its companion");
  bool hermite_text = false;
  add_common(cmd_hermite);
  cmd_hermite->add_flag("--text", hermite_text, "Plain-text polynomials instead of JSON");

  // member
  auto* cmd_member = app.add_subcommand("member", "Decide membership of a point in the orbit space");
  std::string point_str;
  bool want_preimages = false;
  add_common(cmd_member);
  cmd_member->add_option("-p,--point", point_str, "Coordinates, e.g. 0,-1 or 1/2,3/4 (exact)")
      ->required();
  cmd_member->add_flag("--preimages", want_preimages, "Reconstruct torus preimages");

  // theta
  auto* cmd_theta = app.add_subcommand("theta", "Map torus parameters to orbit-space coordinates");
  std::string tangent_str, angles_str;
  add_common(cmd_theta);
  cmd_theta->add_option("--tangent", tangent_str,
                        "Exact rational tangent parameters t1,t2,... (x = (1-t^2+2ti)/(1+t^2))");
  cmd_theta->add_option("--angles", angles_str, "Angles as multiples of 2*pi, e.g. 0.25,0.5");

  // preimage
  auto* cmd_pre = app.add_subcommand("preimage", "Reconstruct torus points mapping to a given point");
  add_common(cmd_pre);
  cmd_pre->add_option("-p,--point", point_str, "Coordinates")->required();

  // raster
  auto* cmd_raster = app.add_subcommand("raster", "Rasterize the membership region on a grid");
  std::string window_str = "-1.1,1.1,-1.1,1.1", axes_str = "1,2", fix_str, csv_path, svg_path;
  int res = 100;
  add_common(cmd_raster, false);
  cmd_raster->add_option("--window", window_str, "xmin,xmax,ymin,ymax");
  cmd_raster->add_option("--res", res, "Grid resolution (res+1 nodes per axis)");
  cmd_raster->add_option("--axes", axes_str, "1-based coordinate indices to vary");
  cmd_raster->add_option("--fix", fix_str, "Values for the remaining coordinates, e.g. 0.0,0.5");
  cmd_raster->add_option("--csv", csv_path, "Write CSV here");
  cmd_raster->add_option("--svg", svg_path, "Write SVG here");
  bool raster_serial = false;
  cmd_raster->add_flag("--serial", raster_serial, "Use the serial reference kernel");

  // cheb
  auto* cmd_cheb = app.add_subcommand("cheb", "Generalized Chebyshev polynomial of a dominant weight");
  std::string kind_str = "first", alpha_str;
  add_common(cmd_cheb);
  cmd_cheb->add_option("--kind", kind_str, "first or second");
  cmd_cheb->add_option("--alpha", alpha_str, "Dominant exponent vector a1,a2,...")->required();

  // phi
  auto* cmd_phi = app.add_subcommand("phi", "Orthogonality weight polynomial");
  add_common(cmd_phi);

  // mmatrix
  auto* cmd_mm = app.add_subcommand("mmatrix", "Gradient-form matrix M(z) in the invariants");
  add_common(cmd_mm);

  // ortho
  auto* cmd_ortho = app.add_subcommand("ortho", "Monte Carlo orthogonality estimate");
  std::string mu_str, nu_str;
  std::uint64_t seed = 42;
  std::size_t samples = 200000;
  bool sine = false;
  add_common(cmd_ortho);
  cmd_ortho->add_option("--mu", mu_str, "Weight mu as exponents, e.g. 1,0")->required();
  cmd_ortho->add_option("--nu", nu_str, "Weight nu")->required();
  cmd_ortho->add_option("--samples", samples, "Sample count");
  cmd_ortho->add_option("--seed", seed, "RNG seed");
  cmd_ortho->add_flag("--sine", sine, "Signed (sine) variant");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the verification suites");
  std::string suite_filter;
  std::uint64_t verify_seed = 42;
  cmd_verify->add_option("--suite", suite_filter, "Run suites whose name or tag contains this");
  cmd_verify->add_option("--seed", verify_seed, "Seed for the stochastic suites");
  bool list_suites = false;
  cmd_verify->add_flag("--list", list_suites, "List suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Family family = family_from_char(family_str.at(0));

    if (cmd_hermite->parsed()) {
      HermiteMatrix hm = hermite_matrix(family, rank);
      if (hermite_text) {
        std::ostringstream os;
        for (int i = 0; i < hm.n; ++i)
          for (int j = i; j < hm.n; ++j)
            os << "H[" << (i + 1) << "][" << (j + 1) << "] = " << hm.H.entry(i, j).to_string()
               << "\n";
        emit(os.str(), out_path);
      } else {
        emit(io::hermite_json(hm).dump(2), out_path);
      }
      return kExitOk;
    }

    if (cmd_member->parsed() || cmd_pre->parsed()) {
      bool pre = cmd_pre->parsed() || want_preimages;
      PointArg p = parse_point(point_str);
      MembershipReport rep = p.exact ? membership(family, rank, p.q, pre)
                                     : membership_f(family, rank, p.d, pre);
      emit(io::membership_json(rep).dump(2), out_path);
      return rep.psd ? kExitOk : kExitOutside;
    }

    if (cmd_theta->parsed()) {
      const FamilyContext& ctx = family_context(family, rank);
      json j{{"schema", io::kSchema}, {"kind", "theta"},
             {"family", family_str},  {"rank", rank}};
      if (!tangent_str.empty()) {
        std::vector<CirclePoint> x;
        for (const auto& s : split(tangent_str, ','))
          x.push_back(circle_from_tangent(Rational::from_string(s)));
        RatVec z = theta_real(ctx.d, x);
        json zj = json::array(), zf = json::array();
        for (const auto& c : z) {
          zj.push_back(io::rational_json(c));
          zf.push_back(c.to_double());
        }
        j["point"] = std::move(zj);
        j["point_float"] = std::move(zf);
        j["exact"] = true;
      } else if (!angles_str.empty()) {
        std::vector<ComplexFloat> x;
        for (const auto& s : split(angles_str, ',')) {
          double a = 2.0 * M_PI * std::stod(s);
          x.push_back(ComplexFloat(std::cos(a), std::sin(a)));
        }
        j["point"] = theta_real_d(ctx.d, x);
        j["exact"] = false;
      } else {
        std::cerr << "theta: need --tangent or --angles\n";
        return kExitUsage;
      }
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_raster->parsed()) {
      auto w = split(window_str, ',');
      if (w.size() != 4) throw CLI::ValidationError("raster", "--window needs 4 numbers");
      RasterWindow window{std::stod(w[0]), std::stod(w[1]), std::stod(w[2]), std::stod(w[3])};
      auto axes = parse_intvec(axes_str);
      if (axes.size() != 2) throw CLI::ValidationError("raster", "--axes needs 2 indices");
      std::vector<double> fixed(rank, 0.0);
      if (!fix_str.empty()) {
        auto parts = split(fix_str, ',');
        if (static_cast<int>(parts.size()) != rank)
          throw CLI::ValidationError("raster", "--fix needs one value per coordinate");
        for (int i = 0; i < rank; ++i) fixed[i] = std::stod(parts[i]);
      }
      RasterGrid grid =
          raster_serial
              ? region_raster_serial(family, rank, window, res, res, static_cast<int>(axes[0]) - 1,
                                     static_cast<int>(axes[1]) - 1, fixed)
              : region_raster(family, rank, window, res, res, static_cast<int>(axes[0]) - 1,
                              static_cast<int>(axes[1]) - 1, fixed);
      if (!csv_path.empty()) emit(io::raster_csv(grid), csv_path);
      if (!svg_path.empty()) emit(io::raster_svg(grid), svg_path);
      if (csv_path.empty() && svg_path.empty()) std::cout << io::raster_csv(grid);
      return kExitOk;
    }

    if (cmd_cheb->parsed()) {
      const FamilyContext& ctx = family_context(family, rank);
      IntVec alpha = parse_intvec(alpha_str);
      ChebyshevPoly cp = kind_str == "second" ? chebyshev_second(ctx.d, alpha)
                                              : chebyshev_first(ctx.d, alpha);
      json j = io::polynomial_payload(
          kind_str == "second" ? "chebyshev_second" : "chebyshev_first", family, rank,
          io::canonical_coordinates(family, rank), cp.poly);
      j["alpha"] = alpha;
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_phi->parsed()) {
      const FamilyContext& ctx = family_context(family, rank);
      emit(io::polynomial_payload("phi", family, rank,
                                  io::canonical_coordinates(family, rank), weight_phi(ctx.d))
               .dump(2),
           out_path);
      return kExitOk;
    }

    if (cmd_mm->parsed()) {
      const FamilyContext& ctx = family_context(family, rank);
      MPolyMat m = m_matrix_symbolic(ctx.d);
      json j{{"schema", io::kSchema},
             {"kind", "m_matrix"},
             {"family", family_str},
             {"rank", rank},
             {"coordinates", io::canonical_coordinates(family, rank)},
             {"M", io::mpoly_mat_json(m)}};
      emit(j.dump(2), out_path);
      return kExitOk;
    }

    if (cmd_ortho->parsed()) {
      const FamilyContext& ctx = family_context(family, rank);
      IntVec mu = parse_intvec(mu_str), nu = parse_intvec(nu_str);
      OrthoResult r = orthogonality_mc(ctx.d, mu, nu, samples, seed, sine);
      emit(io::ortho_json(family, rank, mu, nu, sine, seed, r).dump(2), out_path);
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      if (list_suites) {
        for (const auto& n : verify::suite_names()) std::cout << n << "\n";
        return kExitOk;
      }
      auto results = verify::run(suite_filter, verify_seed);
      if (results.empty()) {
        std::cerr << "no suite matches '" << suite_filter << "'\n";
        return kExitUsage;
      }
      bool all = true;
      std::printf("%-26s %-6s %9s  %s\n", "suite", "result", "time", "detail");
      for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%-26s %-6s %8.0fms  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.millis, r.detail.c_str());
      }
      return all ? kExitOk : 1;
    }
  } catch (const NumericError& e) {
    std::cerr << numeric_diagnostic(e.what(), e.residual()).dump(2) << "\n";
    return kExitNumeric;
  } catch (const ResourceError& e) {
    std::cerr << numeric_diagnostic(e.what(), 0.0).dump(2) << "\n";
    return kExitNumeric;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

// heatpoly: small-time heat content of polygons with Dirichlet and open edges.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heatpoly/coefficients.hpp"
#include "heatpoly/expansion.hpp"
#include "heatpoly/geometry.hpp"
#include "heatpoly/mc_oracle.hpp"
#include "heatpoly/polygon_io.hpp"
#include "heatpoly/wedge_kernel.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace heatpoly;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // Flat record as a two-line CSV.
  std::string header, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_structured()) continue;
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += it.key();
    row += it.value().is_number() ? num(it.value().get<double>())
                                  : it.value().is_string() ? it.value().get<std::string>()
                                                           : it.value().dump();
  }
  std::cout << header << "\n" << row << "\n";
}

double to_radians(double angle, const std::string& unit) {
  return unit == "deg" ? angle * std::numbers::pi / 180.0 : angle;
}

numerics::QuadConfig quad_config(double tol) {
  numerics::QuadConfig cfg;
  cfg.abs_tol = tol;
  cfg.rel_tol = tol;
  return cfg;
}

struct Options {
  std::string format = "json";
  double tol = 1e-12;
  // coeff
  std::string kind;
  double angle = 0.0;
  std::string unit = "rad";
  // polygon commands
  std::string polygon_file;
  std::vector<double> times;
  double time = 0.0;
  std::uint64_t paths = 100'000;
  std::uint32_t steps = 256;
  std::uint64_t seed = 1;
  bool no_bridge = false;
  double budget = 5e-4;
  double z_threshold = 3.0;
  // sector
  double radius = 1.0;
  double alpha = 0.0;
  // kernel-check
  double identity_tol = 1e-6;
};

int cmd_coeff(const Options& o) {
  const double rad = to_radians(o.angle, o.unit);
  const auto cfg = quad_config(o.tol);
  json out{{"kind", o.kind}, {"angle_rad", rad}};
  if (o.kind == "a") {
    const auto r = coefficients::coeff_a_integral_quad(Angle{rad}, cfg);
    out["value"] = r.value;
    out["method"] = "integral";
    out["est_error"] = r.error_bound;
  } else if (o.kind == "b") {
    out["value"] = coefficients::coeff_b(Angle{rad});
    out["method"] = "closed";
    out["est_error"] = 0.0;
  } else {
    const auto r = coefficients::coeff_c_quad(Angle{rad}, cfg);
    out["value"] = r.value;
    out["method"] = "integral";
    out["est_error"] = r.error_bound;
  }
  emit(out, o.format);
  return 0;
}

json coefficients_json(const expansion::ExpansionCoefficients& c) {
  json vertices = json::array();
  for (const auto& v : c.per_vertex) {
    vertices.push_back({{"loop", v.angle.vertex.loop},
                        {"index", v.angle.vertex.position},
                        {"angle_rad", v.angle.radians},
                        {"class", std::string(to_string(v.angle.cls))},
                        {"contribution", v.coefficient}});
  }
  return {{"area", c.area},
          {"sqrt_t_coeff", c.sqrt_t_coeff},
          {"t_coeff", c.t_coeff},
          {"decay_rate", c.decay_rate},
          {"length_dirichlet", c.lengths.dirichlet},
          {"length_open", c.lengths.open},
          {"per_vertex", vertices}};
}

int cmd_expand(const Options& o) {
  const Polygon polygon = io::load_polygon(o.polygon_file);
  const auto coeffs = expansion::heat_content_coeffs(polygon, quad_config(o.tol));
  const json out = coefficients_json(coeffs);
  if (o.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "loop,index,angle_rad,class,contribution\n";
    for (const auto& v : coeffs.per_vertex)
      std::cout << v.angle.vertex.loop << "," << v.angle.vertex.position << ","
                << num(v.angle.radians) << "," << to_string(v.angle.cls) << ","
                << num(v.coefficient) << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o) {
  for (double t : o.times)
    if (!(t > 0.0)) throw DomainError("all times must be positive, got " + num(t));
  const Polygon polygon = io::load_polygon(o.polygon_file);
  const auto coeffs = expansion::heat_content_coeffs(polygon, quad_config(o.tol));
  if (o.format == "json") {
    json rows = json::array();
    for (double t : o.times) {
      const auto v = expansion::eval_expansion(coeffs, t);
      rows.push_back({{"t", t}, {"value", v.value}, {"remainder_scale", v.remainder_scale}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << "t,value,remainder_scale\n";
  for (double t : o.times) {
    const auto v = expansion::eval_expansion(coeffs, t);
    std::cout << num(t) << "," << num(v.value) << "," << num(v.remainder_scale) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  if (!(o.time > 0.0)) throw DomainError("--time must be positive");
  const Polygon polygon = io::load_polygon(o.polygon_file);
  const auto coeffs = expansion::heat_content_coeffs(polygon, quad_config(o.tol));
  const auto asym = expansion::eval_expansion(coeffs, o.time);

  mc::MCConfig cfg;
  cfg.n_paths = o.paths;
  cfg.n_steps = o.steps;
  cfg.seed = o.seed;
  cfg.bridge_correction = !o.no_bridge;
  const auto est = mc::estimate_heat_content(polygon, o.time, cfg);

  const double diff = asym.value - est.mean;
  const double z = est.std_error > 0.0 ? diff / est.std_error : (diff == 0.0 ? 0.0 : INFINITY);
  const bool pass = std::abs(diff) <= o.z_threshold * est.std_error + o.budget;
  json out{{"t", o.time},
           {"asymptotic", asym.value},
           {"remainder_scale", asym.remainder_scale},
           {"mc_mean", est.mean},
           {"mc_std_error", est.std_error},
           {"z_score", std::isfinite(z) ? json(z) : json(nullptr)},
           {"budget", o.budget},
           {"pass", pass},
           {"paths", est.n_paths},
           {"steps", cfg.n_steps},
           {"seed", cfg.seed},
           {"bridge_correction", cfg.bridge_correction}};
  // Beyond this the neglected exponential term is no longer small.
  if (asym.remainder_scale > 1e-3) {
    out["warning"] = "t is outside the small-time regime; the truncated expansion is not reliable";
    std::cerr << "warning: remainder scale " << num(asym.remainder_scale)
              << " exceeds 1e-3; expansion truncation is not negligible at this t\n";
  }
  emit(out, o.format);
  return pass ? 0 : kExitVerification;
}

int cmd_sector(const Options& o) {
  const double alpha = to_radians(o.alpha, o.unit);
  const auto b = expansion::sector_heat_content_DO({o.radius, alpha}, o.time, quad_config(o.tol));
  emit(json{{"R", o.radius},
            {"alpha_rad", alpha},
            {"t", o.time},
            {"area_term", b.area_term},
            {"edge_term", b.edge_term},
            {"angle_term", b.angle_term},
            {"cusp_term", b.cusp_term},
            {"total", b.total},
            {"remainder_scale", b.remainder_scale}},
       o.format);
  return 0;
}

int cmd_kernel_check(const Options& o) {
  const auto suite = wedge::identity_suite();
  bool all_pass = true;
  json rows = json::array();
  for (const auto& c : suite) {
    const bool pass = c.abs_err <= o.identity_tol;
    all_pass = all_pass && pass;
    rows.push_back({{"identity", c.identity},
                    {"parameters", c.parameters},
                    {"lhs", c.lhs},
                    {"rhs", c.rhs},
                    {"abs_err", c.abs_err},
                    {"pass", pass}});
  }
  if (o.format == "json") {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "identity,parameters,lhs,rhs,abs_err,pass\n";
    for (const auto& r : rows)
      std::cout << r["identity"].get<std::string>() << ",\"" << r["parameters"].get<std::string>()
                << "\"," << num(r["lhs"]) << "," << num(r["rhs"]) << "," << num(r["abs_err"])
                << "," << (r["pass"].get<bool>() ? "true" : "false") << "\n";
  }
  return all_pass ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-time heat content of polygons with Dirichlet and open edges"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--tol", o.tol, "Quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* coeff = app.add_subcommand("coeff", "Evaluate an angle coefficient a, b or c");
  coeff->add_option("--kind", o.kind, "Coefficient kind")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  coeff->add_option("--angle", o.angle, "Angle")->required();
  coeff->add_option("--unit", o.unit, "Angle unit")
      ->check(CLI::IsMember({"rad", "deg"}))
      ->capture_default_str();
  add_common(coeff);

  auto* expand = app.add_subcommand("expand", "Expansion coefficients of a polygon file");
  expand->add_option("polygon", o.polygon_file, "Polygon JSON file")->required();
  add_common(expand);

  auto* eval = app.add_subcommand("eval", "Evaluate the expansion at a list of times");
  eval->add_option("polygon", o.polygon_file, "Polygon JSON file")->required();
  eval->add_option("--times", o.times, "Comma-separated times")->delimiter(',');
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "Compare the expansion with Monte Carlo");
  verify->add_option("polygon", o.polygon_file, "Polygon JSON file")->required();
  verify->add_option("--time", o.time, "Time t")->required();
  verify->add_option("--paths", o.paths, "Number of paths")->capture_default_str();
  verify->add_option("--steps", o.steps, "Steps per path")->capture_default_str();
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_flag("--no-bridge", o.no_bridge, "Disable the bridge crossing correction");
  verify->add_option("--budget", o.budget, "Absolute truncation/bias budget")
      ->capture_default_str();
  verify->add_option("--z", o.z_threshold, "Standard-error multiple")->capture_default_str();
  add_common(verify);

  auto* sector = app.add_subcommand("sector", "Dirichlet-open sector heat content");
  sector->add_option("--radius", o.radius, "Sector radius R")->capture_default_str();
  sector->add_option("--alpha", o.alpha, "Opening angle")->required();
  sector->add_option("--unit", o.unit, "Angle unit")
      ->check(CLI::IsMember({"rad", "deg"}))
      ->capture_default_str();
  sector->add_option("--time", o.time, "Time t")->required();
  add_common(sector);

  auto* kernel = app.add_subcommand("kernel-check", "Run the Bessel/Green identity suite");
  kernel->add_option("--threshold", o.identity_tol, "Pass threshold on abs_err")
      ->capture_default_str();
  add_common(kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (eval->parsed() && o.format == "json" && !eval->get_option("--format")->count())
    o.format = "csv";

  try {
    if (coeff->parsed()) return cmd_coeff(o);
    if (expand->parsed()) return cmd_expand(o);
    if (eval->parsed()) return cmd_eval(o);
    if (verify->parsed()) return cmd_verify(o);
    if (sector->parsed()) return cmd_sector(o);
    if (kernel->parsed()) return cmd_kernel_check(o);
  } catch (const GeometryError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

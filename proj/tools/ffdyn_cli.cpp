// Command-line front end: cf | orbit | ray | mass | lom | sphere.
// Exit status is the numeric ErrorKind of the failure, 0 on success.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffdyn/cf.hpp"
#include "ffdyn/config.hpp"
#include "ffdyn/dynamics.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/quad.hpp"

using namespace ffdyn;
using nlohmann::json;

namespace {

json header(const ExperimentConfig& c) {
  return {{"schema", 1}, {"config", json::parse(config_to_json(c))}, {"config_hash", hex64(config_hash(c))}};
}

std::string csv_preamble(const ExperimentConfig& c) {
  return "# schema=1 config_hash=" + hex64(config_hash(c)) + " config=" + config_to_json(c) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidConfig, "cannot write " + path);
  f << text;
}

void emit_json(const json& j, const std::string& path) {
  if (!path.empty()) emit(j.dump(2) + "\n", path);
}

OrbitOptions orbit_options(const ExperimentConfig& c) {
  OrbitOptions o;
  o.path = c.path == "walk" ? OrbitPath::Walk : c.path == "both" ? OrbitPath::Both : OrbitPath::Fast;
  return o;
}

// Reruns f with the offending radius attached to any library error.
template <class F>
auto at_radius(int n, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    fail(e.kind(), "n=" + std::to_string(n) + ": " + e.message());
  }
}

int run_cf(ExperimentConfig& c) {
  const FieldPtr F = Field::make_order(c.q);
  c.p = F->p();
  c.e = F->e();
  if (c.surd.empty()) fail(ErrorKind::InvalidConfig, "--surd is required");
  const QuadElem x = parse_quad(F, c.surd);
  const CFExpansion cf = cf_expand_surd(x);
  json j = header(c);
  const json body = json::parse(cf_to_json(cf));
  j["preperiod"] = body["preperiod"];
  j["period"] = body["period"];
  j["twisted_length"] = cf.twisted_length;
  j["twist"] = F->to_string(cf.twist);
  j["primitive_degree"] = primitive_period_degree(cf);
  emit(j.dump() + "\n", "");
  emit_json(j, c.out_json);
  return 0;
}

int run_orbit(ExperimentConfig& c) {
  const ValidatedConfig v = validate(c);
  const OrbitTable t = theorem31_table(v.gamma, v.pi, std::min(c.n_full, c.n_max), c.n_max, c.budget);
  emit(csv_preamble(c) + to_csv(t), c.out_csv);
  json j = header(c);
  j["split"] = json::parse(split_data_json(t.split));
  j["kappa"] = t.kappa;
  j["kappa_n20"] = calibrate_kappa(t.split, t.p, t.rows, 20);
  j["linear_bound_holds"] = t.linear_bound_holds();
  emit_json(j, c.out_json);
  return 0;
}

std::vector<int> radii(int from, int to) {
  std::vector<int> ns;
  for (int n = from; n <= to; ++n) ns.push_back(n);
  return ns;
}

EscapeSeries escape_rows(const ValidatedConfig& v, const ExperimentConfig& c, const std::vector<int>& ns) {
  EscapeSeries s;
  s.N = c.N;
  for (int n : ns) {
    const EscapeSeries one =
        at_radius(n, [&] { return ray_escape_experiment(v.lox, v.xi, v.pi, {n}, c.N, orbit_options(c)); });
    s.rows.push_back(one.rows.front());
  }
  return s;
}

int run_ray(ExperimentConfig& c) {
  const ValidatedConfig v = validate(c);
  const EscapeSeries s = escape_rows(v, c, radii(1, c.n_max));
  emit(csv_preamble(c) + to_csv(s), c.out_csv);
  json j = header(c);
  bool all = true;
  for (const auto& r : s.rows) all = all && r.bound_holds();
  j["bound_holds"] = all;
  j["kappa"] = s.kappa_max(5);
  emit_json(j, c.out_json);
  return 0;
}

int run_mass(ExperimentConfig& c, int k_max) {
  const ValidatedConfig v = validate(c);
  const SplitData sd = split_data_at_nu(v.gamma, v.pi);
  const std::vector<int> ns = lom_subsequence(sd, static_cast<int>(c.p), k_max);
  const EscapeSeries s = escape_rows(v, c, ns);
  TrendReport t;
  t.N = c.N;
  std::ostringstream os;
  os << "n,mass_below,n_times_mass\n";
  for (const auto& r : s.rows) {
    const TrendRow row{r.n, r.mass_below};
    if (!t.rows.empty() && row.mass_below > t.rows.back().mass_below) ++t.increases;
    t.sup_scaled = std::max(t.sup_scaled, row.scaled());
    t.rows.push_back(row);
    os << row.n << ',' << row.mass_below.to_string() << ',' << row.scaled().to_string() << '\n';
  }
  emit(csv_preamble(c) + os.str(), c.out_csv);
  json j = header(c);
  j["lom"] = sd.lom.to_string();
  j["increases"] = t.increases;
  j["sup_n_times_mass"] = t.sup_scaled.to_string();
  emit_json(j, c.out_json);
  return 0;
}

int run_lom(ExperimentConfig& c) {
  const ValidatedConfig v = validate(c);
  const SplitData sd = split_data_at_nu(v.gamma, v.pi);
  emit(split_data_json(sd) + "\n", "");
  json j = header(c);
  j["split"] = json::parse(split_data_json(sd));
  emit_json(j, c.out_json);
  return 0;
}

int run_sphere(ExperimentConfig& c) {
  const ValidatedConfig v = validate(c);
  const SectorSpec s{canonical_vertex(parse_polymat(v.F, c.sector), v.pi)};
  const QuadMat g_f = periodic_point_rep(v.lox);
  const int n = c.n_max;
  const HeightHistogram h = at_radius(n, [&] {
    return sector_sphere_distribution(s, v.pi, n, g_f, c.mode == "sample" ? SectorMode::Sample : SectorMode::Enum,
                                      c.count, c.seed, c.budget);
  });
  const int parity = sphere_height_parity(point_height(poly_identity(v.F), g_f), v.pi, n);
  json j = header(c);
  j["sector"] = json::parse(vertex_json(s.x));
  j["n"] = n;
  j["histogram"] = json::parse(to_json(h));
  j["parity"] = parity;
  j["tv"] = total_variation(h, static_cast<int>(c.q), parity);
  j["tv_unconditioned"] = total_variation(h, static_cast<int>(c.q));
  json model = json::object();
  for (int k = 0; k <= h.max_height(); ++k) model[std::to_string(k)] = model_mass(static_cast<int>(c.q), k, parity);
  j["model"] = model;
  emit(j.dump() + "\n", c.out_csv);
  emit_json(j, c.out_json);
  return 0;
}

void add_common(CLI::App* sub, ExperimentConfig& c) {
  sub->add_option("--q", c.q, "field order (prime power)");
  sub->add_option("--p", c.p, "characteristic (checked against q)");
  sub->add_option("--e", c.e, "extension degree (checked against q)");
  sub->add_option("--nu,--pi", c.pi_nu, "irreducible polynomial of the place");
  sub->add_option("--gamma", c.gamma0, "loxodromic element \"a,b;c,d\"");
  sub->add_option("--xi", c.xi, "rational end \"inf\" or \"u/v\"");
  sub->add_option("--n-max", c.n_max, "largest radius");
  sub->add_option("--n-full", c.n_full, "largest radius enumerated on full spheres");
  sub->add_option("--N", c.N, "height cut for the compact part");
  sub->add_option("--mode", c.mode, "enum | sample");
  sub->add_option("--count", c.count, "sample size");
  sub->add_option("--seed", c.seed, "sampling seed");
  sub->add_option("--budget", c.budget, "enumeration budget (points)");
  sub->add_option("--sector", c.sector, "sector vertex \"a,b;0,d\"");
  sub->add_option("--path", c.path, "orbit engine: fast | walk | both");
  sub->add_option("--out", c.out_csv, "main output file (default stdout)");
  sub->add_option("--json", c.out_json, "JSON summary file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic dynamics over F_q(Y): continued fractions, Hecke spheres, escape of mass"};
  app.require_subcommand(1);
  ExperimentConfig c;
  std::string config_file;
  int k_max = 4;
  app.add_option("--config", config_file, "load the configuration from a JSON file first");

  std::function<int()> action;
  auto* cf = app.add_subcommand("cf", "continued fraction of a quadratic surd");
  add_common(cf, c);
  cf->add_option("--surd", c.surd, "\"a,b,c,D\" for (a + b sqrt(D)) / c")->required();
  cf->callback([&] {
    c.command = cf->get_name();
    action = [&] { return run_cf(c); };
  });

  auto* orbit = app.add_subcommand("orbit", "maximal orbit sizes on spheres and the calibrated bound");
  add_common(orbit, c);
  orbit->callback([&] {
    c.command = orbit->get_name();
    action = [&] { return run_orbit(c); };
  });

  auto* ray = app.add_subcommand("ray", "escape-of-mass series along a rational ray");
  add_common(ray, c);
  ray->callback([&] {
    c.command = ray->get_name();
    action = [&] { return run_ray(c); };
  });

  auto* mass = app.add_subcommand("mass", "mass below N along the subsequence floor(r p^k / e)");
  add_common(mass, c);
  mass->add_option("--k-max", k_max, "largest k of the subsequence");
  mass->callback([&] {
    c.command = mass->get_name();
    action = [&] { return run_mass(c, k_max); };
  });

  auto* lomc = app.add_subcommand("lom", "splitting data and limit of escaped mass at the place");
  add_common(lomc, c);
  lomc->callback([&] {
    c.command = lomc->get_name();
    action = [&] { return run_lom(c); };
  });

  auto* sphere = app.add_subcommand("sphere", "height distribution on a sector sphere");
  add_common(sphere, c);
  sphere->callback([&] {
    c.command = sphere->get_name();
    action = [&] { return run_sphere(c); };
  });

  try {
    // A config file supplies defaults; flags given on the command line win.
    app.allow_extras(false);
    CLI::App pre;
    pre.allow_extras(true);
    pre.set_help_flag();
    pre.add_option("--config", config_file);
    pre.parse(argc, argv);
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      if (!f) fail(ErrorKind::InvalidConfig, "cannot read " + config_file);
      std::stringstream ss;
      ss << f.rdbuf();
      c = config_from_json(ss.str());
    }
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "InvalidConfig"}, {"message", e.what()}}.dump() << "\n";
    return static_cast<int>(ErrorKind::InvalidConfig);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.message()}}.dump() << "\n";
    return static_cast<int>(e.kind());
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.message()}}.dump() << "\n";
    return static_cast<int>(e.kind());
  }
}

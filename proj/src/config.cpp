#include "ffdyn/config.hpp"

#include <cstdio>

#include "json.hpp"

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

nlohmann::json to_object(const ExperimentConfig& c) {
  return {{"q", c.q},         {"p", c.p},       {"e", c.e},         {"pi_nu", c.pi_nu},   {"gamma0", c.gamma0},
          {"xi", c.xi},       {"n_max", c.n_max}, {"n_full", c.n_full}, {"N", c.N},         {"mode", c.mode},
          {"count", c.count}, {"seed", c.seed}, {"budget", c.budget}, {"sector", c.sector}, {"path", c.path}, {"surd", c.surd}, {"command", c.command}};
}

}  // namespace

std::string config_to_json(const ExperimentConfig& c) { return to_object(c).dump(); }

ExperimentConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("config JSON: ") + e.what());
  }
  ExperimentConfig c;
  try {
    c.q = j.at("q").get<std::uint32_t>();
    c.p = j.at("p").get<std::uint32_t>();
    c.e = j.at("e").get<std::uint32_t>();
    c.pi_nu = j.at("pi_nu").get<std::string>();
    c.gamma0 = j.at("gamma0").get<std::string>();
    c.xi = j.at("xi").get<std::string>();
    c.n_max = j.at("n_max").get<int>();
    c.n_full = j.at("n_full").get<int>();
    c.N = j.at("N").get<int>();
    c.mode = j.at("mode").get<std::string>();
    c.count = j.at("count").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.budget = j.at("budget").get<std::uint64_t>();
    c.sector = j.at("sector").get<std::string>();
    c.path = j.at("path").get<std::string>();
    c.surd = j.at("surd").get<std::string>();
    c.command = j.at("command").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidConfig, std::string("config field: ") + e.what());
  }
  return c;
}

std::uint64_t config_hash(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config_to_json(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

ValidatedConfig validate(ExperimentConfig& c) {
  ValidatedConfig v;
  v.F = Field::make_order(c.q);
  if ((c.p && c.p != v.F->p()) || (c.e && c.e != v.F->e()))
    fail(ErrorKind::InvalidConfig, "q = " + std::to_string(c.q) + " is not p^e for the given p, e");
  c.p = v.F->p();
  c.e = v.F->e();
  if (c.n_max < 0 || c.n_full < 0) fail(ErrorKind::InvalidConfig, "radii must be nonnegative");
  if (c.mode != "enum" && c.mode != "sample") fail(ErrorKind::InvalidConfig, "mode must be enum or sample");
  if (c.path != "fast" && c.path != "walk" && c.path != "both")
    fail(ErrorKind::InvalidConfig, "path must be fast, walk or both");
  v.pi = parse_poly(v.F, c.pi_nu);
  if (v.pi.degree() < 1 || !is_irreducible(v.pi)) fail(ErrorKind::InvalidConfig, "pi_nu = " + c.pi_nu + " is not irreducible");
  v.pi = v.pi.monic();
  const PolyMat g = parse_polymat(v.F, c.gamma0);
  if (g.det().degree() != 0) fail(ErrorKind::InvalidConfig, "gamma0 must have a unit determinant");
  v.gamma = PGL2Elem(g);
  v.lox = fixed_quadratic(v.gamma);  // NotLoxodromic keeps its own exit code
  v.xi = parse_end(v.F, c.xi);
  return v;
}

}  // namespace ffdyn

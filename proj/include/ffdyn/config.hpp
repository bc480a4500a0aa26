#pragma once

#include <cstdint>
#include <string>

#include "ffdyn/field.hpp"
#include "ffdyn/hecke.hpp"
#include "ffdyn/pgl2.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn {

// Everything an experiment run depends on. Output paths are not part of the
// identity of a run and are excluded from the hash.
struct ExperimentConfig {
  std::uint32_t q = 3, p = 0, e = 0;  // p, e = 0: derived from q
  std::string pi_nu = "Y";
  std::string gamma0 = "Y,1;1,0";
  std::string xi = "inf";
  int n_max = 8;
  int n_full = 8;
  int N = 10;
  std::string mode = "enum";
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = std::uint64_t{1} << 26;
  std::string sector = "Y^2,Y+1;0,1";
  std::string path = "fast";
  std::string surd;  // "a,b,c,D" for the cf command
  std::string command;
  std::string out_csv, out_json;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::string config_to_json(const ExperimentConfig& c);  // canonical, without output paths
ExperimentConfig config_from_json(const std::string& text);
std::uint64_t config_hash(const ExperimentConfig& c);    // FNV-1a 64 of the canonical JSON
std::string hex64(std::uint64_t x);

// Parsed and checked objects of a config: q = p^e (filled in when zero),
// pi_nu irreducible (made monic),
// gamma0 loxodromic with entries in F_q[Y]. Throws InvalidConfig or ParseError.
struct ValidatedConfig {
  FieldPtr F;
  FqPoly pi;
  PGL2Elem gamma;
  LoxodromicData lox;
  RationalEnd xi;
};
ValidatedConfig validate(ExperimentConfig& c);

}  // namespace ffdyn

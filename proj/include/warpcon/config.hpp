#pragma once

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace warpcon {

/// Hard tolerances of the verification batteries. The defaults are the
/// contract; configs may tighten or relax them for exploration, the shipped
/// acceptance run uses the defaults unchanged.
struct Tolerances {
  double exact = 1e-12;        // machine-precision identities
  double span = 1e-10;         // least-squares span memberships
  double regression = 1e-14;   // kappa = 0 must reproduce the undeformed objects
  double phase = 1e-10;        // closed-form scattering phases
  double unit_modulus = 1e-14; // |kernel ratio| = 1
};

inline void to_json(nlohmann::json& j, const Tolerances& t) {
  j = nlohmann::json{{"exact", t.exact},
                     {"span", t.span},
                     {"regression", t.regression},
                     {"phase", t.phase},
                     {"unit_modulus", t.unit_modulus}};
}

inline void from_json(const nlohmann::json& j, Tolerances& t) {
  t.exact = j.value("exact", t.exact);
  t.span = j.value("span", t.span);
  t.regression = j.value("regression", t.regression);
  t.phase = j.value("phase", t.phase);
  t.unit_modulus = j.value("unit_modulus", t.unit_modulus);
}

/// Batch-run configuration. The defaults describe the reference desk-scale
/// model (d = 2, m = 1, modes {-2..2}, two-particle cutoff); checks that are
/// pinned to specific dimensions (rotation covariance, reference kinematics)
/// build their own models and ignore the lattice parameters.
struct RunConfig {
  int dimension = 2;
  double mass = 1.0;
  std::vector<double> kappas = {1.0};
  int lattice_k = 2;
  double lattice_delta = 1.0;
  int n_max = 2;
  int degree_cap = 3;
  std::uint64_t seed = 42;
  int max_model_dim = 5000;
  Tolerances tol;

  void validate() const {
    if (dimension < 2) throw std::invalid_argument("config: dimension must be >= 2");
    if (mass <= 0.0) throw std::invalid_argument("config: mass must be positive");
    for (double k : kappas)
      if (k < 0.0) throw std::invalid_argument("config: kappa must be >= 0");
    if (kappas.empty()) throw std::invalid_argument("config: need at least one kappa");
    if (lattice_k < 0 || lattice_delta <= 0.0)
      throw std::invalid_argument("config: invalid lattice parameters");
    if (n_max < 1) throw std::invalid_argument("config: cutoff must be >= 1");
    if (degree_cap < 1) throw std::invalid_argument("config: degree cap must be >= 1");
    if (max_model_dim < 2) throw std::invalid_argument("config: dimension guard too small");
  }
};

inline void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"dimension", c.dimension},
                     {"mass", c.mass},
                     {"kappas", c.kappas},
                     {"lattice_k", c.lattice_k},
                     {"lattice_delta", c.lattice_delta},
                     {"n_max", c.n_max},
                     {"degree_cap", c.degree_cap},
                     {"seed", c.seed},
                     {"max_model_dim", c.max_model_dim},
                     {"tolerances", c.tol}};
}

inline void from_json(const nlohmann::json& j, RunConfig& c) {
  c.dimension = j.value("dimension", c.dimension);
  c.mass = j.value("mass", c.mass);
  c.kappas = j.value("kappas", c.kappas);
  c.lattice_k = j.value("lattice_k", c.lattice_k);
  c.lattice_delta = j.value("lattice_delta", c.lattice_delta);
  c.n_max = j.value("n_max", c.n_max);
  c.degree_cap = j.value("degree_cap", c.degree_cap);
  c.seed = j.value("seed", c.seed);
  c.max_model_dim = j.value("max_model_dim", c.max_model_dim);
  if (j.contains("tolerances")) c.tol = j.at("tolerances").get<Tolerances>();
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  nlohmann::json j;
  in >> j;
  RunConfig c = j.get<RunConfig>();
  c.validate();
  return c;
}

}  // namespace warpcon

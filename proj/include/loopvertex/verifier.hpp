#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "loopvertex/vertex.hpp"

namespace loopvertex {

struct Witness {
  std::string monomial;
  std::string degree;  // in units of the variables, "p/q"
  std::string lhs, rhs;
};

struct CheckCase {
  CheckCase() = default;
  CheckCase(std::string id, std::string anch, nlohmann::ordered_json p)
      : identity(std::move(id)), anchor(std::move(anch)), params(std::move(p)) {}
  std::string identity;
  std::string anchor;  // which identity of the theory this instantiates
  nlohmann::ordered_json params;
  bool pass = false;
  std::optional<Witness> witness;
  std::string note;
};

nlohmann::ordered_json case_to_json(const CheckCase& c);
CheckCase case_from_json(const nlohmann::ordered_json& j);

// ---- individual checks ---------------------------------------------------

CheckCase check_loopschur_threeway(const NPartition& lambda, Degree qdegree);
std::vector<CheckCase> check_det_forms(const Partition& sigma_bar, int n, int m, Degree qdegree);
CheckCase check_finite_m_forms(const Partition& omega, const Partition& sigma_bar, int d, int n, int m,
                                Degree qdegree);
// the two finite-m forms only meet as m grows: passes when the first
// disagreement degree strictly increases along ms (or clears the bound)
CheckCase check_finite_m_stabilization(const Partition& omega, const Partition& sigma_bar, int d, int n,
                                        const std::vector<int>& ms, Degree qdegree);

CheckCase check_thm_comb(const Partition& omega, const NPartition& sigma, int d);
CheckCase check_reduction(const Partition& tau, const NPartition& mu, int d, int alpha);
// the alpha = -1 side obtained from alpha = +1 through chi_{rho'} = sign * chi_rho
CheckCase check_reduction_flip(const Partition& tau, const NPartition& mu, int d);

CheckCase check_sym_correspondence(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n,
                                   Degree xudegree, bool negate_q = false);
CheckCase check_gw_symmetry(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n,
                            Degree xudegree);
CheckCase check_dt_symmetry(const Partition& rho_plus, const Partition& rho_minus, const NPartition& lambda,
                            Alpha alpha, const Framing& w);

CheckCase check_sym_orthogonality(int d);
CheckCase check_wreath_orthogonality(int n, int d);
CheckCase check_conjugation_rule(int n, int d);
CheckCase check_twist_rule(int n, int d);
CheckCase check_strip_expansion(const NPartition& lambda, const NPartition& mu, int d);

CheckCase check_framing_sym(const Partition& rho_plus, const Partition& rho_minus, Alpha alpha, const Framing& w,
                            int n, Degree xudegree);
CheckCase check_framing_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                             Degree xudegree);
CheckCase check_hurwitz(int n, int d, Degree xudegree);
CheckCase check_central(const NPartition& lambda);
CheckCase check_fp_coefficients(int terms);

// ---- suites ---------------------------------------------------------------

// suites: loopschur, det-forms, thm-comb, reduction, sym-corr, characters,
// framing, hurwitz, gw-symmetry, dt-symmetry, fp.  Only suites present in
// the config run ("all" = every listed one), so an empty config gives an
// empty report.  Missing keys inside a suite take the defaults below; an
// unknown key is a config error.
nlohmann::ordered_json default_config();
const std::vector<std::string>& suite_names();

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::vector<std::string> suites;
  std::vector<CheckCase> cases;  // in generation order, independent of scheduling
  bool pass() const;
  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
  std::string summary() const;
};

// Throws ConfigError on malformed configuration.
Report run_suite(const std::string& suite, const nlohmann::ordered_json& config, int threads = 0);

}  // namespace loopvertex

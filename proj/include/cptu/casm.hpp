#ifndef CPTU_CASM_HPP
#define CPTU_CASM_HPP

#include <stdexcept>
#include <vector>

#include "cptu/material.hpp"

namespace cptu {

/// Controls for the undrained triaxial driver.
struct TriaxialConfig {
  enum class StartMode { in_situ_anisotropic, isotropic };

  double max_dev_strain = 0.50;    ///< target deviatoric strain
  double step_dev_strain = 1e-4;   ///< driver strain increment
  double substep_rel_tol = 1e-6;   ///< local integration error tolerance
  double yield_tol = 1e-8;         ///< max |f| after drift correction
  StartMode start_mode = StartMode::in_situ_anisotropic;
};

struct PathSample {
  double eps_q;        ///< deviatoric strain
  double p_eff;        ///< mean effective stress [kPa]
  double q_dev;        ///< deviatoric stress [kPa]
  double du;           ///< excess pore pressure, dq/3 - dp' [kPa]
  double void_ratio;
  double p_c;          ///< hardening variable [kPa]
};

struct TriaxialResult {
  std::vector<PathSample> path;
  double su_peak = 0.0;      ///< peak undrained shear strength, max q/2 [kPa]
  double su_res = 0.0;       ///< residual undrained shear strength, final q/2 [kPa]
  double brittleness = 0.0;  ///< Bishop index, 1 - su_res/su_peak
};

/// Thrown when the substepping integrator stalls; carries the last valid state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, const SoilState& last, double eps_q)
      : std::runtime_error(what), last_state(last), eps_q_reached(eps_q) {}
  SoilState last_state;
  double eps_q_reached;
};

/// CASM yield function f = (q/(M p'))^n + ln(p'/p_c) / ln(r).
/// Negative inside the surface, zero on it.
double yield_value(const SoilState& state, const CasmMaterial& material);

struct ElasticModuli {
  double bulk;   ///< tangent bulk modulus p'/kappa* [kPa]
  double shear;  ///< constant shear modulus from the initial mean stress [kPa]
};

/// Tangent bulk modulus at p_eff_0 and the constant shear modulus
/// G = 3(1 - 2 nu) / (2(1 + nu)) * p'_0 / kappa*, with kappa* = kappa/(1 + e0).
ElasticModuli elastic_moduli(double p_eff_0, const CasmMaterial& material, double e0);

/// Plastic dilatancy d = d_eps_v^p / d_eps_q^p at stress ratio eta = q/p'
/// (compression-positive volumetric convention). Zero at eta = M, positive
/// (contractive) below, negative above. Undefined at eta <= 0.
double dilatancy(double eta, const CasmMaterial& material);

/// Volumetric hardening rate dp_c = p_c * d_eps_v_p / (lambda* - kappa*).
double hardening_rate(double p_c, double d_eps_v_p, const CasmMaterial& material, double e0);

/// Undrained residual shear strength implied by the critical state line:
/// (M/2) * p'_0 * exp(-psi_0 / lambda).
double residual_strength_analytic(double p_eff_0, double psi_0, const CasmMaterial& material);

/// Preconsolidation pressure consistent with the critical state line through
/// the current void ratio: the swelling line through (e, p') meets the
/// isotropic compression line anchored so the yield surface intersects the
/// CSL at p' = p_c / r. Shearing at constant volume then terminates exactly
/// on the CSL in both the stress and compression planes.
double csl_anchored_preconsolidation(double p_eff, double void_ratio,
                                     const CasmMaterial& material);

/// Strain-driven undrained triaxial compression test.
///
/// The deviatoric strain is ramped to max_dev_strain with zero volumetric
/// strain; elastic response keeps p' fixed while plastic contraction trades
/// elastic for plastic volume change. Integration is explicit modified Euler
/// with local error control and yield-surface drift correction; the hardening
/// variable starts from csl_anchored_preconsolidation so the path ends on the
/// material's CSL.
TriaxialResult simulate_undrained_triaxial(const CasmMaterial& material,
                                           const SoilState& initial,
                                           const TriaxialConfig& config = {});

}  // namespace cptu

#endif

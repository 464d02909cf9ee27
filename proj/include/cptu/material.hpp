#ifndef CPTU_MATERIAL_HPP
#define CPTU_MATERIAL_HPP

#include <stdexcept>

namespace cptu {

/// Loading geometry selecting the critical-state slope M.
enum class CslGeometry { triaxial, plane_strain };

/// Critical-state slope in p'-q space.
/// Triaxial compression: M = 6 sin(phi) / (3 - sin(phi)).
/// Plane strain:         M = 2 sin(phi).
/// phi_cs_deg must lie in (0, 90) degrees.
double csl_slope_m(double phi_cs_deg, CslGeometry geometry);

/// CASM constitutive parameter set.
///
/// Compression-plane lines are straight in e-ln(p') space: the isotropic
/// compression line passes through (p_ref, e_ref) with slope lambda, the
/// critical state line through (p_ref, gamma_c) with the same slope, and
/// unload-reload excursions have slope kappa. Stresses in kPa, angles in
/// degrees, everything else dimensionless.
struct CasmMaterial {
  double lambda = 0.0;     ///< slope of CSL/ICL in e-ln p'
  double kappa = 0.0;      ///< slope of unload-reload line in e-ln p'
  double nu = 0.0;         ///< Poisson's coefficient
  double phi_cs = 0.0;     ///< critical-state friction angle [deg]
  double n_shape = 0.0;    ///< yield-surface stress-ratio exponent
  double r_spacing = 0.0;  ///< yield-surface spacing ratio
  double m_flow = 0.0;     ///< dilatancy-rule exponent
  double gamma_c = 0.0;    ///< CSL void ratio at p_ref
  double e_ref = 1.0;      ///< ICL void ratio at p_ref
  double p_ref = 100.0;    ///< reference pressure [kPa]
  double ocr = 1.0;        ///< isotropic overconsolidation ratio p_c0/p'_0
  double k0 = 1.0;         ///< coefficient of earth pressure at rest

  double csl_slope() const { return csl_slope_m(phi_cs, CslGeometry::triaxial); }
  double lambda_star() const { return lambda / (1.0 + e_ref); }
  double kappa_star() const { return kappa / (1.0 + e_ref); }
  /// Plastic volumetric ratio Lambda = (lambda - kappa) / lambda.
  double plastic_ratio() const { return (lambda - kappa) / lambda; }

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

/// Stress/volume state at a material point. Stresses are effective and
/// compression-positive.
struct SoilState {
  double p_eff = 0.0;       ///< mean effective stress [kPa]
  double q_dev = 0.0;       ///< deviatoric stress [kPa]
  double void_ratio = 0.0;
  double p_c = 0.0;         ///< preconsolidation pressure [kPa]

  void validate() const;
};

/// Void ratio on the critical state line at mean stress p_eff.
double csl_void_ratio(double p_eff, const CasmMaterial& material);

/// State parameter: current void ratio minus the CSL void ratio at the same
/// mean effective stress. Positive for contractive states.
double state_parameter(const SoilState& state, const CasmMaterial& material);

/// Geostatic state for a level deposit under effective overburden
/// sigma_v0_eff. Horizontal stress from K0, preconsolidation from the
/// isotropic OCR, and the void ratio from loading along the ICL to p_c and
/// swelling back to p'.
SoilState initialize_in_situ(const CasmMaterial& material, double sigma_v0_eff);

}  // namespace cptu

#endif

#ifndef CPTU_CAVITY_HPP
#define CPTU_CAVITY_HPP

#include "cptu/material.hpp"

namespace cptu {

enum class CavityKind { spherical, cylindrical };

/// Cavity geometry and the derived constants used by the limit-pressure
/// solutions: m_d (2 spherical, 1 cylindrical), alpha = m_d/(m_d + 1), and
/// the critical-state slope for the matching loading mode (triaxial
/// compression for spherical, plane strain for cylindrical).
struct CavityGeometry {
  CavityKind kind = CavityKind::spherical;

  int m_d() const { return kind == CavityKind::spherical ? 2 : 1; }
  double alpha() const { return kind == CavityKind::spherical ? 2.0 / 3.0 : 0.5; }
  double m_alpha(double phi_cs_deg) const {
    return csl_slope_m(phi_cs_deg, kind == CavityKind::spherical ? CslGeometry::triaxial
                                                                 : CslGeometry::plane_strain);
  }
};

/// Limit pressures and normalized metrics for one undrained cavity expansion.
struct CavityResult {
  double sigma_c = 0.0;      ///< total limit pressure [kPa]
  double sigma_c_eff = 0.0;  ///< effective limit pressure [kPa]
  double u_c = 0.0;          ///< limit pore pressure [kPa]
  double q_bar_p = 0.0;      ///< (sigma_c - p_0) / p'_0
  double b_bar_q = 0.0;      ///< (u_c - u_0) / (sigma_c - p_0)
  double q_eff_bar = 0.0;    ///< q_bar_p (1 - b_bar_q) + 1 = sigma'_c / p'_0
};

/// Effective limit pressure sigma'_c = (1 + alpha M_alpha) p'_0 exp(-psi_0/lambda).
/// Depends only on the initial state parameter and the critical state line.
double effective_limit_pressure(double p_eff_0, double psi_0, const CasmMaterial& material,
                                CavityGeometry geom);

/// Dilogarithm partial sum: sum of x^k / k^2 until the next term drops below
/// tol. Valid for 0 <= x < 1; capped at 1e6 terms.
double dilog_series(double x, double tol = 1e-12);

/// Total limit pressure and pore pressure of an undrained cavity expansion,
/// plus the normalized metrics for ambient conditions (p0_total, u0).
/// R0 is the initial ratio p_c0 / p'_0; G0 the shear modulus.
CavityResult total_limit_pressure(double p_eff_0, double psi_0, const CasmMaterial& material,
                                  double R0, CavityGeometry geom, double G0,
                                  double p0_total, double u0 = 0.0);

}  // namespace cptu

#endif

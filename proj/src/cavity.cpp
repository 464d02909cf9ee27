#include "cptu/cavity.hpp"

#include <cmath>

namespace cptu {

double effective_limit_pressure(double p_eff_0, double psi_0, const CasmMaterial& material,
                                CavityGeometry geom) {
  if (!(p_eff_0 > 0.0))
    throw std::invalid_argument("effective_limit_pressure: requires p_eff_0 > 0");
  const double m_alpha = geom.m_alpha(material.phi_cs);
  return (1.0 + geom.alpha() * m_alpha) * p_eff_0 * std::exp(-psi_0 / material.lambda);
}

double dilog_series(double x, double tol) {
  if (!(x >= 0.0 && x < 1.0))
    throw std::domain_error("dilog_series: requires 0 <= x < 1");
  if (!(tol > 0.0)) throw std::invalid_argument("dilog_series: requires tol > 0");
  double sum = 0.0;
  double xk = x;
  for (long k = 1; xk >= tol; ++k) {
    sum += xk / static_cast<double>(k) / static_cast<double>(k);
    xk *= x;
    if (k >= 1000000)
      throw std::runtime_error("dilog_series: no convergence within 1e6 terms");
  }
  return sum;
}

CavityResult total_limit_pressure(double p_eff_0, double psi_0, const CasmMaterial& material,
                                  double R0, CavityGeometry geom, double G0,
                                  double p0_total, double u0) {
  if (!(p_eff_0 > 0.0))
    throw std::invalid_argument("total_limit_pressure: requires p_eff_0 > 0");
  if (!(R0 >= 1.0)) throw std::invalid_argument("total_limit_pressure: requires R0 >= 1");
  if (!(G0 > 0.0)) throw std::invalid_argument("total_limit_pressure: requires G0 > 0");

  const double m_alpha = geom.m_alpha(material.phi_cs);
  const double md = geom.m_d();
  const double p_cs = p_eff_0 * std::exp(-psi_0 / material.lambda);
  const double q_cs = m_alpha * p_cs;

  const double a3 =
      1.0 - std::exp(-std::pow(std::log(R0) / std::log(material.r_spacing), 1.0 / material.n_shape) *
                     m_alpha * p_eff_0 / (2.0 * G0));
  if (!(a3 < 1.0))
    throw std::domain_error("total_limit_pressure: A3 >= 1 (unphysical stiffness)");
  if (!(a3 > 0.0))
    throw std::domain_error("total_limit_pressure: A3 = 0, solution degenerates at R0 = 1");
  const double a4 = dilog_series(a3) / (md + 1.0);

  CavityResult res;
  res.sigma_c = p_eff_0 - md / (md + 1.0) * q_cs * std::log(a3) + 2.0 * G0 * md * a4;
  res.sigma_c_eff = (1.0 + md * m_alpha / (md + 1.0)) * p_cs;
  res.u_c = res.sigma_c - res.sigma_c_eff;
  res.q_bar_p = (res.sigma_c - p0_total) / p_eff_0;
  res.b_bar_q = (res.u_c - u0) / (res.sigma_c - p0_total);
  res.q_eff_bar = res.q_bar_p * (1.0 - res.b_bar_q) + 1.0;
  return res;
}

}  // namespace cptu

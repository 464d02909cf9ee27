#include "cptu/material.hpp"

#include <cmath>

namespace cptu {

double csl_slope_m(double phi_cs_deg, CslGeometry geometry) {
  if (!(phi_cs_deg >= 0.0 && phi_cs_deg < 90.0)) {
    throw std::invalid_argument("csl_slope_m: friction angle must lie in [0, 90) degrees");
  }
  const double s = std::sin(phi_cs_deg * M_PI / 180.0);
  switch (geometry) {
    case CslGeometry::triaxial:
      return 6.0 * s / (3.0 - s);
    case CslGeometry::plane_strain:
      return 2.0 * s;
  }
  throw std::invalid_argument("csl_slope_m: unknown geometry");
}

void CasmMaterial::validate() const {
  if (!(lambda > kappa && kappa > 0.0))
    throw std::invalid_argument("CasmMaterial: requires lambda > kappa > 0");
  if (!(nu > 0.0 && nu < 0.5))
    throw std::invalid_argument("CasmMaterial: requires 0 < nu < 0.5");
  if (!(r_spacing > 1.0))
    throw std::invalid_argument("CasmMaterial: requires spacing ratio r > 1");
  if (!(n_shape >= 1.0))
    throw std::invalid_argument("CasmMaterial: requires shape exponent n >= 1");
  if (!(m_flow > 1.0))
    throw std::invalid_argument("CasmMaterial: requires flow exponent m > 1");
  if (!(ocr >= 1.0))
    throw std::invalid_argument("CasmMaterial: requires OCR >= 1");
  if (!(k0 > 0.0 && k0 <= 1.0))
    throw std::invalid_argument("CasmMaterial: requires 0 < K0 <= 1");
  if (!(p_ref > 0.0))
    throw std::invalid_argument("CasmMaterial: requires p_ref > 0");
  const double m = csl_slope();
  if (!(m > 0.0 && m < 3.0))
    throw std::invalid_argument("CasmMaterial: derived M outside (0, 3)");
}

void SoilState::validate() const {
  if (!(p_eff > 0.0)) throw std::invalid_argument("SoilState: requires p_eff > 0");
  if (!(p_c > 0.0)) throw std::invalid_argument("SoilState: requires p_c > 0");
  if (!(void_ratio > 0.0)) throw std::invalid_argument("SoilState: requires void_ratio > 0");
  if (!(q_dev >= 0.0)) throw std::invalid_argument("SoilState: requires q_dev >= 0");
}

double csl_void_ratio(double p_eff, const CasmMaterial& material) {
  if (!(p_eff > 0.0)) throw std::invalid_argument("csl_void_ratio: requires p_eff > 0");
  return material.gamma_c - material.lambda * std::log(p_eff / material.p_ref);
}

double state_parameter(const SoilState& state, const CasmMaterial& material) {
  return state.void_ratio - csl_void_ratio(state.p_eff, material);
}

SoilState initialize_in_situ(const CasmMaterial& material, double sigma_v0_eff) {
  if (!(sigma_v0_eff > 0.0))
    throw std::invalid_argument("initialize_in_situ: requires sigma_v0_eff > 0");
  SoilState st;
  st.p_eff = (1.0 + 2.0 * material.k0) / 3.0 * sigma_v0_eff;
  st.q_dev = (1.0 - material.k0) * sigma_v0_eff;
  st.p_c = material.ocr * st.p_eff;
  st.void_ratio = material.e_ref - material.lambda * std::log(st.p_c / material.p_ref) +
                  material.kappa * std::log(st.p_c / st.p_eff);
  return st;
}

}  // namespace cptu

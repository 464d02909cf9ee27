#include "cptu/casm.hpp"

#include <algorithm>
#include <cmath>

namespace cptu {

double yield_value(const SoilState& state, const CasmMaterial& material) {
  if (!(state.p_eff > 0.0 && state.p_c > 0.0))
    throw std::invalid_argument("yield_value: requires p_eff > 0 and p_c > 0");
  const double m = material.csl_slope();
  return std::pow(state.q_dev / (m * state.p_eff), material.n_shape) +
         std::log(state.p_eff / state.p_c) / std::log(material.r_spacing);
}

ElasticModuli elastic_moduli(double p_eff_0, const CasmMaterial& material, double e0) {
  if (!(p_eff_0 > 0.0)) throw std::invalid_argument("elastic_moduli: requires p_eff_0 > 0");
  const double kappa_star = material.kappa / (1.0 + e0);
  ElasticModuli out;
  out.bulk = p_eff_0 / kappa_star;
  out.shear = 3.0 * (1.0 - 2.0 * material.nu) / (2.0 * (1.0 + material.nu)) * p_eff_0 / kappa_star;
  return out;
}

double dilatancy(double eta, const CasmMaterial& material) {
  if (!(eta > 0.0))
    throw std::domain_error("dilatancy: flow rule undefined at eta <= 0");
  const double m = material.m_flow;
  const double big_m = material.csl_slope();
  return (m - 1.0) / m * (std::pow(big_m, m) - std::pow(eta, m)) / std::pow(eta, m - 1.0);
}

double hardening_rate(double p_c, double d_eps_v_p, const CasmMaterial& material, double e0) {
  if (!(p_c > 0.0)) throw std::invalid_argument("hardening_rate: requires p_c > 0");
  const double denom = (material.lambda - material.kappa) / (1.0 + e0);
  if (!(denom > 0.0)) throw std::invalid_argument("hardening_rate: requires lambda* > kappa*");
  return p_c * d_eps_v_p / denom;
}

double residual_strength_analytic(double p_eff_0, double psi_0, const CasmMaterial& material) {
  if (!(p_eff_0 > 0.0))
    throw std::invalid_argument("residual_strength_analytic: requires p_eff_0 > 0");
  return 0.5 * material.csl_slope() * p_eff_0 * std::exp(-psi_0 / material.lambda);
}

double csl_anchored_preconsolidation(double p_eff, double void_ratio,
                                     const CasmMaterial& material) {
  const double lk = material.lambda - material.kappa;
  // ICL intercept for which the swelling line from (ICL at p_c) down to
  // p' = p_c/r lands on the CSL.
  const double n_icl = material.gamma_c + lk * std::log(material.r_spacing);
  return material.p_ref *
         std::exp((n_icl - void_ratio - material.kappa * std::log(p_eff / material.p_ref)) / lk);
}

namespace {

struct PlasticPoint {
  double p, q, pc;
};

struct DriverContext {
  double big_m, n, lnr, m_flow, kappa_star, lk_star, shear;
};

struct Partials {
  double fp, fq, fpc;
};

double yield_f(const PlasticPoint& y, const DriverContext& c) {
  return std::pow(y.q / (c.big_m * y.p), c.n) + std::log(y.p / y.pc) / c.lnr;
}

Partials partials(const PlasticPoint& y, const DriverContext& c) {
  const double eta = y.q / y.p;
  Partials d;
  d.fq = c.n * std::pow(eta, c.n - 1.0) / (std::pow(c.big_m, c.n) * y.p);
  d.fp = (1.0 / c.lnr - c.n * std::pow(eta / c.big_m, c.n)) / y.p;
  d.fpc = -1.0 / (y.pc * c.lnr);
  return d;
}

double flow_dilatancy(double eta, const DriverContext& c) {
  return (c.m_flow - 1.0) / c.m_flow *
         (std::pow(c.big_m, c.m_flow) - std::pow(eta, c.m_flow)) /
         std::pow(eta, c.m_flow - 1.0);
}

// Rates of (p', q, p_c) per unit total deviatoric strain on the plastic
// branch under the undrained constraint d_eps_v^e = -d_eps_v^p.
PlasticPoint plastic_rate(const PlasticPoint& y, const DriverContext& c) {
  const double bulk = y.p / c.kappa_star;
  const double eta = y.q / y.p;
  const double d = flow_dilatancy(eta, c);
  const Partials pr = partials(y, c);
  const double denom =
      3.0 * c.shear * pr.fq + pr.fp * bulk * d - pr.fpc * y.pc * d / c.lk_star;
  const double dlam = 3.0 * c.shear * pr.fq / denom;  // d_eps_q^p per d_eps_q
  PlasticPoint r;
  r.p = -bulk * d * dlam;
  r.q = 3.0 * c.shear * (1.0 - dlam);
  r.pc = y.pc * d * dlam / c.lk_star;
  return r;
}

// Consistent drift correction: plastic adjustment at fixed total strain.
PlasticPoint correct_drift(PlasticPoint y, const DriverContext& c, double yield_tol) {
  for (int i = 0; i < 30; ++i) {
    const double f = yield_f(y, c);
    if (std::abs(f) <= yield_tol) return y;
    const double bulk = y.p / c.kappa_star;
    const double d = flow_dilatancy(y.q / y.p, c);
    const Partials pr = partials(y, c);
    const double denom =
        pr.fp * bulk * d + 3.0 * c.shear * pr.fq - pr.fpc * y.pc * d / c.lk_star;
    const double dlam = f / denom;
    y.p -= bulk * d * dlam;
    y.q -= 3.0 * c.shear * dlam;
    y.pc += y.pc * d * dlam / c.lk_star;
  }
  return y;
}

// Adaptive modified-Euler integration over a deviatoric strain span.
PlasticPoint integrate_plastic(PlasticPoint y, double span, const DriverContext& c,
                               const TriaxialConfig& cfg, double eps_q_now,
                               double void_ratio, double* q_max) {
  double t = 0.0;
  double h = span;
  const double h_min = 1e-12 * std::max(span, cfg.step_dev_strain);
  while (t < span * (1.0 - 1e-14)) {
    h = std::min(h, span - t);
    if (y.q / y.p < 1e-9) {
      SoilState last{y.p, y.q, void_ratio, y.pc};
      throw IntegrationError("simulate_undrained_triaxial: flow rule singular near eta = 0",
                             last, eps_q_now + t);
    }
    const PlasticPoint k1 = plastic_rate(y, c);
    const PlasticPoint y1{y.p + k1.p * h, y.q + k1.q * h, y.pc + k1.pc * h};
    const PlasticPoint k2 = plastic_rate(y1, c);
    const PlasticPoint ynew{y.p + 0.5 * (k1.p + k2.p) * h, y.q + 0.5 * (k1.q + k2.q) * h,
                            y.pc + 0.5 * (k1.pc + k2.pc) * h};
    const double scale_p = std::max(std::abs(ynew.p), 1e-3);
    const double scale_q = std::max(std::abs(ynew.q), 1e-3);
    const double scale_pc = std::max(std::abs(ynew.pc), 1e-3);
    const double err = std::max({std::abs(k2.p - k1.p) * h / (2.0 * scale_p),
                                 std::abs(k2.q - k1.q) * h / (2.0 * scale_q),
                                 std::abs(k2.pc - k1.pc) * h / (2.0 * scale_pc)});
    if (err <= cfg.substep_rel_tol) {
      y = correct_drift(ynew, c, cfg.yield_tol);
      t += h;
      if (q_max) *q_max = std::max(*q_max, y.q);
      const double grow = 0.9 * std::sqrt(cfg.substep_rel_tol / std::max(err, 1e-300));
      h *= std::clamp(grow, 0.5, 1.1);
    } else {
      h *= std::max(0.1, 0.9 * std::sqrt(cfg.substep_rel_tol / err));
      if (h < h_min) {
        SoilState last{y.p, y.q, void_ratio, y.pc};
        throw IntegrationError("simulate_undrained_triaxial: substep underflow", last,
                               eps_q_now + t);
      }
    }
  }
  return y;
}

}  // namespace

TriaxialResult simulate_undrained_triaxial(const CasmMaterial& material,
                                           const SoilState& initial,
                                           const TriaxialConfig& config) {
  material.validate();
  initial.validate();
  if (!(config.max_dev_strain > 0.0 && config.step_dev_strain > 0.0 &&
        config.substep_rel_tol > 0.0 && config.yield_tol > 0.0))
    throw std::invalid_argument("simulate_undrained_triaxial: config values must be positive");

  DriverContext c;
  c.big_m = material.csl_slope();
  c.n = material.n_shape;
  c.lnr = std::log(material.r_spacing);
  c.m_flow = material.m_flow;
  c.kappa_star = material.kappa_star();
  c.lk_star = material.lambda_star() - material.kappa_star();

  const double e0 = initial.void_ratio;
  const double p0 = initial.p_eff;
  const double q0 =
      config.start_mode == TriaxialConfig::StartMode::isotropic ? 0.0 : initial.q_dev;
  c.shear = elastic_moduli(p0, material, material.e_ref).shear;

  PlasticPoint y{p0, q0, csl_anchored_preconsolidation(p0, e0, material)};
  if (yield_f(y, c) > config.yield_tol) {
    SoilState last{y.p, y.q, e0, y.pc};
    throw IntegrationError("simulate_undrained_triaxial: initial state outside yield surface",
                           last, 0.0);
  }

  TriaxialResult res;
  const int steps = static_cast<int>(std::llround(config.max_dev_strain / config.step_dev_strain));
  res.path.reserve(steps + 1);
  res.path.push_back({0.0, y.p, y.q, 0.0, e0, y.pc});
  double q_max = y.q;
  double eps_q = 0.0;

  for (int i = 0; i < steps; ++i) {
    const double de = config.step_dev_strain;
    if (yield_f(y, c) < -config.yield_tol) {
      // Elastic: no volume change, so p' is fixed and q climbs at 3G.
      const double q_trial = y.q + 3.0 * c.shear * de;
      if (yield_f({y.p, q_trial, y.pc}, c) <= config.yield_tol) {
        y.q = q_trial;
      } else {
        // Bisect the strain fraction to the surface, then continue plastically.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double f = yield_f({y.p, y.q + 3.0 * c.shear * mid * de, y.pc}, c);
          (f > 0.0 ? hi : lo) = mid;
          if (std::abs(f) <= config.yield_tol) {
            lo = mid;
            break;
          }
        }
        y.q += 3.0 * c.shear * lo * de;
        q_max = std::max(q_max, y.q);
        y = integrate_plastic(y, (1.0 - lo) * de, c, config, eps_q + lo * de, e0, &q_max);
      }
    } else {
      y = integrate_plastic(y, de, c, config, eps_q, e0, &q_max);
    }
    eps_q += de;
    q_max = std::max(q_max, y.q);
    res.path.push_back({eps_q, y.p, y.q, (y.q - q0) / 3.0 - (y.p - p0), e0, y.pc});
  }

  res.su_peak = 0.5 * q_max;
  res.su_res = 0.5 * y.q;
  res.brittleness = res.su_peak > 0.0 ? 1.0 - res.su_res / res.su_peak : 0.0;
  return res;
}

}  // namespace cptu

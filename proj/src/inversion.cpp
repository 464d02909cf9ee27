#include "cptu/inversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cptu {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

void CptuRecord::validate() const {
  if (!(depth >= 0.0)) throw std::invalid_argument("CptuRecord: requires depth >= 0");
  if (!(sigma_v0 >= sigma_v0_eff && sigma_v0_eff >= 0.0))
    throw std::invalid_argument("CptuRecord: requires sigma_v0 >= sigma_v0_eff >= 0");
  if (k0 && !(*k0 > 0.0)) throw std::invalid_argument("CptuRecord: requires k0 > 0");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::this_work: return "this_work";
    case Method::plewes: return "plewes";
    case Method::pezeshki_ahmadi: return "pezeshki_ahmadi";
  }
  return "unknown";
}

InterpretConfig config_from_rho(double lambda, double big_m, double rho_deg, double beta,
                                K0Policy policy) {
  InterpretConfig cfg;
  cfg.lambda = lambda;
  cfg.big_m = big_m;
  cfg.c_q = cq_factor(rho_deg, big_m);
  cfg.beta = beta;
  cfg.k0_policy = policy;
  return cfg;
}

NormalizedMetrics normalized_metrics(const CptuRecord& rec) {
  rec.validate();
  if (!rec.k0) throw std::invalid_argument("normalized_metrics: record lacks k0");
  NormalizedMetrics m;
  m.p0_eff = (1.0 + 2.0 * *rec.k0) / 3.0 * rec.sigma_v0_eff;
  if (!(m.p0_eff > 0.0))
    throw std::invalid_argument("normalized_metrics: requires p'_0 > 0");
  m.p0 = m.p0_eff + rec.u0;
  const double net = rec.q_c - m.p0;
  if (std::abs(net) <= 1e-12 * std::max(1.0, std::abs(rec.q_c)))
    throw std::domain_error("normalized_metrics: q_c equals p_0, B_q undefined");
  m.q_p = net / m.p0_eff;
  m.b_q2 = (rec.u2 - rec.u0) / net;
  m.q_eff_u2 = m.q_p * (1.0 - m.b_q2) + 1.0;
  if (rec.u1) {
    m.b_q1 = (*rec.u1 - rec.u0) / net;
    m.q_eff_u1 = m.q_p * (1.0 - *m.b_q1) + 1.0;
  }
  return m;
}

double cq_factor(double rho_deg, double big_m) {
  if (!(rho_deg >= 90.0 && rho_deg <= 180.0))
    throw std::invalid_argument("cq_factor: rho must lie in [90, 180] degrees");
  const double two_rho = 2.0 * rho_deg * kDegToRad;
  return (big_m + 3.0 * big_m * std::cos(two_rho) -
          3.0 * std::sqrt(3.0) * big_m * std::sin(two_rho) + 6.0) /
         (4.0 * big_m + 6.0);
}

namespace {

// Traction route: rotate the triaxial-compression critical-state stress
// tensor so the major principal direction sits at rho from the vertical,
// take the traction on the 60-degree cone face, and scale the vertical
// component by the face/projected area ratio 1/cos(60).
double cone_resistance_traction(double p_cs, double big_m, double rho_deg, double u) {
  const double rho = rho_deg * kDegToRad;
  const double s1 = p_cs * (1.0 + 2.0 * big_m / 3.0);
  const double s3 = p_cs * (1.0 - big_m / 3.0);
  const double c = std::cos(rho), s = std::sin(rho);
  // (r, z) block of the effective stress tensor; rho is measured from the
  // vertical toward the outward face normal.
  const double szz = s3 * s * s + s1 * c * c;
  const double srz = -(s1 - s3) * s * c;
  const double nr = std::sin(60.0 * kDegToRad);
  const double nz = std::cos(60.0 * kDegToRad);
  const double tz = srz * nr + (szz + u) * nz;
  return tz / std::cos(60.0 * kDegToRad);
}

}  // namespace

double cone_resistance_oracle(double p_cs_eff, double big_m, double rho_deg, double u) {
  if (!(rho_deg >= 90.0 && rho_deg <= 180.0))
    throw std::invalid_argument("cone_resistance_oracle: rho must lie in [90, 180] degrees");
  const double two_rho = 2.0 * rho_deg * kDegToRad;
  const double direct =
      p_cs_eff +
      p_cs_eff * big_m *
          (1.0 / 6.0 + std::cos(two_rho) / 2.0 - std::sqrt(3.0) * std::sin(two_rho) / 2.0) +
      u;
  const double traction = cone_resistance_traction(p_cs_eff, big_m, rho_deg, u);
  const double scale = std::max({std::abs(direct), std::abs(p_cs_eff), 1.0});
  if (std::abs(direct - traction) > 1e-10 * scale)
    throw std::logic_error("cone_resistance_oracle: closed form and traction route disagree");
  return direct;
}

InversionParams method_params(Method method, double lambda, double big_m, double c_q) {
  if (!(lambda > 0.0)) throw std::invalid_argument("method_params: requires lambda > 0");
  InversionParams p;
  p.method = method;
  switch (method) {
    case Method::this_work:
      p.k_bar = c_q * (1.0 + 2.0 / 3.0 * big_m);
      p.m_bar = 1.0 / lambda;
      break;
    case Method::plewes:
      p.k_bar = big_m * (3.0 + 0.37 / lambda);
      p.m_bar = 11.9 - 30.62 * lambda;
      break;
    case Method::pezeshki_ahmadi:
      p.k_bar = big_m * (3.3 - 0.035 / lambda);
      p.m_bar = 6.0 + 0.1735 / lambda;
      if (!(p.k_bar > 0.0))
        throw std::invalid_argument(
            "method_params: pezeshki_ahmadi k_bar non-positive at this lambda");
      break;
  }
  return p;
}

double effective_resistance_for_method(Method method, const CptuRecord& rec,
                                       const InterpretConfig& cfg) {
  const NormalizedMetrics m = normalized_metrics(rec);
  double b_q = 0.0;
  switch (method) {
    case Method::this_work:
      b_q = m.b_q1 ? *m.b_q1 : cfg.beta * m.b_q2;
      break;
    case Method::plewes:
      b_q = m.b_q2;
      break;
    case Method::pezeshki_ahmadi: {
      const double net_v = rec.q_c - rec.sigma_v0;
      if (std::abs(net_v) <= 1e-12 * std::max(1.0, std::abs(rec.q_c)))
        throw std::domain_error(
            "effective_resistance_for_method: q_c equals sigma_v0, B_q undefined");
      b_q = (rec.u2 - rec.u0) / net_v;
      break;
    }
  }
  return m.q_p * (1.0 - b_q) + 1.0;
}

double invert_psi(double q_prime, const InversionParams& params) {
  if (!(params.k_bar > 0.0)) throw std::invalid_argument("invert_psi: requires k_bar > 0");
  if (!(params.m_bar > 0.0)) throw std::invalid_argument("invert_psi: requires m_bar > 0");
  if (!(q_prime > 0.0))
    throw NonPhysicalResistanceError("invert_psi: non-physical Q' <= 0");
  return -std::log(q_prime / params.k_bar) / params.m_bar;
}

double k0_correction(double k0, double m_bar) {
  if (!(k0 > 0.0)) throw std::invalid_argument("k0_correction: requires k0 > 0");
  if (!(m_bar > 0.0)) throw std::invalid_argument("k0_correction: requires m_bar > 0");
  return std::log(3.0 / (1.0 + 2.0 * k0)) / m_bar;
}

std::vector<ProfileRow> interpret_profile(std::vector<CptuRecord> records,
                                          const InterpretConfig& cfg,
                                          const std::vector<Method>& methods) {
  if (records.empty()) throw std::invalid_argument("interpret_profile: empty profile");
  if (methods.empty()) throw std::invalid_argument("interpret_profile: no methods selected");

  // Params fail fast when a method cannot run at this lambda at all.
  std::vector<InversionParams> params;
  params.reserve(methods.size());
  for (Method m : methods) params.push_back(method_params(m, cfg.lambda, cfg.big_m, cfg.c_q));

  std::stable_sort(records.begin(), records.end(),
                   [](const CptuRecord& a, const CptuRecord& b) { return a.depth < b.depth; });

  std::vector<ProfileRow> rows;
  rows.reserve(records.size());
  for (CptuRecord rec : records) {
    ProfileRow row;
    row.depth = rec.depth;
    if (!rec.k0) {
      if (cfg.k0_policy == K0Policy::assume_0_7) {
        rec.k0 = 0.7;
        row.flags.push_back("k0_assumed_0.7");
      } else {
        row.flags.push_back("k0_missing");
        rows.push_back(std::move(row));
        continue;
      }
    }
    try {
      row.metrics = normalized_metrics(rec);
    } catch (const std::exception&) {
      row.flags.push_back("bq_undefined");
      rows.push_back(std::move(row));
      continue;
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
      MethodOutcome out;
      try {
        out.q_prime = effective_resistance_for_method(methods[i], rec, cfg);
        out.psi = invert_psi(out.q_prime, params[i]);
        if (*out.psi < 0.0) out.flag = "dilatant_extrapolation";
      } catch (const NonPhysicalResistanceError&) {
        out.flag = "nonphysical_resistance";
      } catch (const std::domain_error&) {
        out.flag = "bq_undefined";
      }
      row.outcomes.push_back(std::move(out));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cptu

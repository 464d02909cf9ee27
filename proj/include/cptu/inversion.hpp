#ifndef CPTU_INVERSION_HPP
#define CPTU_INVERSION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptu {

/// One sounding depth. q_c and q_t are accepted interchangeably (the
/// unequal-area correction is the caller's business). u1 is the mid-face
/// transducer, u2 the shoulder transducer, u0 the ambient pore pressure.
struct CptuRecord {
  double depth = 0.0;             ///< [m]
  double q_c = 0.0;               ///< cone tip resistance [kPa]
  double u2 = 0.0;                ///< shoulder pore pressure [kPa]
  std::optional<double> u1;       ///< mid-face pore pressure [kPa]
  double u0 = 0.0;                ///< ambient pore pressure [kPa]
  double sigma_v0 = 0.0;          ///< total vertical stress [kPa]
  double sigma_v0_eff = 0.0;      ///< effective vertical stress [kPa]
  std::optional<double> k0;       ///< earth pressure coefficient at rest

  void validate() const;
};

/// Mean-stress-normalized cone metrics:
///   Q_p  = (q_c - p_0) / p'_0
///   B_qx = (u_x - u_0) / (q_c - p_0)
///   Q_p (1 - B_qx) + 1 = (q_c - u_x) / p'_0
/// with p'_0 = (1 + 2 K0)/3 sigma'_v0 and p_0 = p'_0 + u_0.
struct NormalizedMetrics {
  double q_p = 0.0;
  std::optional<double> b_q1;       ///< absent when u1 is absent
  double b_q2 = 0.0;
  std::optional<double> q_eff_u1;
  double q_eff_u2 = 0.0;
  double p0 = 0.0;                  ///< initial mean total stress [kPa]
  double p0_eff = 0.0;              ///< initial mean effective stress [kPa]
};

enum class Method { this_work, plewes, pezeshki_ahmadi };

const char* method_name(Method m);

/// Inversion pair of Q' = k_bar exp(-m_bar psi).
struct InversionParams {
  Method method = Method::this_work;
  double k_bar = 0.0;
  double m_bar = 0.0;
};

enum class K0Policy { given, assume_0_7 };

/// Interpretation settings; c_q may be set directly or through the
/// principal-stress rotation angle rho (120 deg = smooth cone, c_q = 1).
struct InterpretConfig {
  double lambda = 0.0;
  double big_m = 0.0;              ///< triaxial-compression CSL slope
  double c_q = 1.0;
  double beta = 1.2;               ///< u1/u2 excess-pressure conversion
  K0Policy k0_policy = K0Policy::given;
};

InterpretConfig config_from_rho(double lambda, double big_m, double rho_deg,
                                double beta = 1.2, K0Policy policy = K0Policy::given);

/// Computes the Table-style normalized metrics for one record. The record
/// must carry k0. Throws std::domain_error when q_c equals p_0 (B_q undefined).
NormalizedMetrics normalized_metrics(const CptuRecord& rec);

/// Geometric factor mapping spherical-cavity effective limit pressure to
/// effective cone resistance, for major-principal-stress rotation rho from
/// the vertical (degrees, 90..180):
///   c_q = (M + 3M cos(2 rho) - 3 sqrt(3) M sin(2 rho) + 6) / (4M + 6)
/// Equals 1 at rho = 120 (smooth cone), exceeds 1 for rougher cones, and
/// peaks at rho = 150.
double cq_factor(double rho_deg, double big_m);

/// Cone tip resistance of soil at critical state (p'_cs, M) under pore
/// pressure u with the major principal stress rotated rho from the vertical:
///   q_c = p'_cs + p'_cs M (1/6 + cos(2 rho)/2 - sqrt(3) sin(2 rho)/2) + u.
/// Cross-checked internally against the traction of the rotated stress
/// tensor on a 60-degree cone face; the two routes must agree to 1e-10.
double cone_resistance_oracle(double p_cs_eff, double big_m, double rho_deg, double u);

/// (k_bar, m_bar) for the chosen inversion method. Throws when the
/// Pezeshki-Ahmadi k_bar is non-positive (lambda <= 0.035/3.3).
InversionParams method_params(Method method, double lambda, double big_m, double c_q = 1.0);

/// Q' = Q_p (1 - B_q) + 1 with each method's own excess-pressure ratio:
/// this_work uses B_q1 when u1 is present, else beta * B_q2; plewes uses
/// B_q2; pezeshki_ahmadi normalizes the excess pressure by q_c - sigma_v0.
double effective_resistance_for_method(Method method, const CptuRecord& rec,
                                       const InterpretConfig& cfg);

/// Thrown by invert_psi for Q' <= 0; profile processing flags the record
/// instead of aborting.
class NonPhysicalResistanceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// psi = -ln(Q'/k_bar) / m_bar.
double invert_psi(double q_prime, const InversionParams& params);

/// Additive state-parameter correction for K0 != 1:
/// delta_psi = ln(3/(1 + 2 K0)) / m_bar.
double k0_correction(double k0, double m_bar);

/// Per-method outcome for one record of a profile.
struct MethodOutcome {
  double q_prime = 0.0;
  std::optional<double> psi;
  std::string flag;  ///< empty when clean
};

struct ProfileRow {
  double depth = 0.0;
  std::optional<NormalizedMetrics> metrics;  ///< absent when the record failed
  std::vector<MethodOutcome> outcomes;       ///< parallel to the method list
  std::vector<std::string> flags;            ///< record-level annotations
};

/// Applies the selected methods down a sounding. Rows come out ordered by
/// depth; records that cannot be interpreted carry flags instead of values.
std::vector<ProfileRow> interpret_profile(std::vector<CptuRecord> records,
                                          const InterpretConfig& cfg,
                                          const std::vector<Method>& methods);

}  // namespace cptu

#endif

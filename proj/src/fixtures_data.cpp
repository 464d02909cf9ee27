#include "cptu/fixtures.hpp"

// Bundled benchmark tables, verbatim. Values are the published four- (or
// three-) digit figures; the internal-consistency tests accept the rounding
// slack this implies. Each row is keyed by (series, material).

namespace cptu::fixtures_data {

const char* const kMaterialsCsv =
    "# Reference materials: five CASM sets differing only in yield-surface\n"
    "# shape (n, r) and CSL intercept gamma_c. Shared parameters:\n"
    "# lambda=0.054 kappa=0.016 m=2.5 e=1 at 100 kPa phi_cs=25 nu=0.33\n"
    "# OCR=1.1 K0=0.6. Strengths from undrained triaxial compression at\n"
    "# sigma_v0_eff = 100 kPa (kPa); i_b is the Bishop brittleness index.\n"
    "material,n,r,gamma_c,psi_0,su_peak,su_res,i_b\n"
    "A,10,12,0.908,0.089,26.12,6.78,0.741\n"
    "B,10,8,0.923,0.074,26.55,8.98,0.662\n"
    "C,9,6,0.934,0.063,26.31,11.02,0.581\n"
    "D,7,3,0.960,0.037,26.47,18.03,0.319\n"
    "E,4,2,0.974,0.020,26.70,24.93,0.066\n";

const char* const kSeriesCsv =
    "# Simulation series: constitutive overrides applied to all five\n"
    "# materials, plus the major-principal-stress rotation angle at the\n"
    "# cone face (120 deg smooth interface, 150 deg rough).\n"
    "series,lambda,kappa,phi_cs,nu,k0,rho_deg,note\n"
    "reference,0.054,0.016,25,0.33,0.60,120,base case; smooth cone\n"
    "rough_delta_19,0.054,0.016,25,0.33,0.60,150,rough interface; labelled 19 deg though companion text gives 18 deg\n"
    "lambda,0.106,0.032,25,0.33,0.60,120,compressibility raised with kappa scaled (plastic ratio preserved)\n"
    "plastic_ratio,0.106,0.016,25,0.33,0.60,120,compressibility raised at fixed kappa\n"
    "M,0.054,0.016,33,0.33,0.47,120,higher critical-state friction with Jaky K0\n"
    "nu,0.054,0.016,25,0.20,0.60,120,stiffer elastic response\n";

const char* const kPenetrationCsv =
    "# Steady-state normalized penetration metrics per series/material and\n"
    "# the matching normalized effective cavity resistances (spherical and\n"
    "# cylindrical closed forms). q_eff_* columns are Q_p(1-B_q)+1 variants:\n"
    "# u1, u2, and 1.2*u2 excess-pressure ratios.\n"
    "series,material,psi_0,su_peak,su_res,q_p,b_q1,b_q2,q_eff_u1,q_eff_u2,q_eff_beta12,cav_sph,cav_cyl\n"
    "reference,A,0.0887,26.12,6.78,1.93,1.37,1.15,0.29,0.71,0.27,0.31,0.27\n"
    "reference,B,0.0738,26.55,8.98,2.17,1.32,1.06,0.32,0.86,0.40,0.41,0.35\n"
    "reference,C,0.0629,26.31,11.02,2.31,1.25,1.05,0.42,0.89,0.40,0.51,0.43\n"
    "reference,D,0.0368,26.47,18.03,2.94,1.10,0.91,0.69,1.28,0.74,0.83,0.71\n"
    "reference,E,0.0196,26.70,24.93,3.72,0.98,0.82,1.06,1.68,1.07,1.14,0.98\n"
    "rough_delta_19,A,0.0887,26.12,6.78,2.10,1.30,0.95,0.36,1.11,0.71,0.31,0.27\n"
    "rough_delta_19,B,0.0738,26.55,8.98,2.36,1.25,0.99,0.40,1.01,0.54,0.41,0.35\n"
    "rough_delta_19,C,0.0629,26.31,11.02,2.55,1.19,0.90,0.50,1.25,0.79,0.51,0.43\n"
    "rough_delta_19,D,0.0368,26.47,18.03,3.45,1.01,0.70,0.98,2.04,1.56,0.83,0.71\n"
    "rough_delta_19,E,0.0196,26.70,24.93,4.20,0.92,0.59,1.34,2.71,2.22,1.14,0.98\n"
    "lambda,A,0.1774,26.12,6.78,1.57,1.42,1.12,0.33,0.82,0.47,0.31,0.27\n"
    "lambda,B,0.1475,26.55,8.98,1.77,1.33,1.07,0.41,0.88,0.50,0.41,0.35\n"
    "lambda,C,0.1259,26.31,11.02,2.07,1.23,1.02,0.52,0.96,0.54,0.51,0.43\n"
    "lambda,D,0.0736,26.47,18.03,2.53,1.09,0.88,0.78,1.30,0.85,0.83,0.71\n"
    "lambda,E,0.0393,26.70,24.93,3.22,0.98,0.81,1.06,1.62,1.10,1.14,0.98\n"
    "plastic_ratio,A,0.2157,25.96,4.72,1.43,1.52,1.20,0.25,0.72,0.37,0.22,0.19\n"
    "plastic_ratio,B,0.1794,26.37,6.64,1.71,1.43,1.15,0.27,0.75,0.36,0.30,0.26\n"
    "plastic_ratio,C,0.1531,26.10,8.52,1.97,1.34,1.11,0.34,0.79,0.35,0.39,0.34\n"
    "plastic_ratio,D,0.0896,26.14,15.51,2.44,1.13,0.90,0.67,1.25,0.81,0.71,0.61\n"
    "plastic_ratio,E,0.0478,26.06,23.01,3.36,1.00,0.80,0.99,1.68,1.15,1.05,0.91\n"
    "M,A,0.0882,31.70,8.22,2.20,1.33,1.12,0.27,0.73,0.23,0.36,0.29\n"
    "M,B,0.0734,32.16,10.88,2.55,1.24,1.03,0.40,0.93,0.41,0.47,0.39\n"
    "M,C,0.0625,31.95,13.37,2.77,1.19,1.00,0.48,1.01,0.46,0.58,0.48\n"
    "M,D,0.0362,32.22,21.95,3.68,1.04,0.86,0.85,1.51,0.87,0.95,0.78\n"
    "M,E,0.0187,32.73,30.55,4.65,0.98,0.81,1.07,1.87,1.12,1.33,1.09\n"
    "nu,A,0.0887,26.12,6.78,2.30,1.33,1.13,0.25,0.69,0.17,0.31,0.27\n"
    "nu,B,0.0738,26.54,8.98,2.54,1.26,1.06,0.33,0.86,0.32,0.41,0.35\n"
    "nu,C,0.0629,26.31,11.02,2.72,1.20,0.98,0.45,1.06,0.53,0.51,0.43\n"
    "nu,D,0.0368,26.47,18.03,3.45,1.06,0.85,0.80,1.51,0.92,0.83,0.71\n"
    "nu,E,0.0196,26.70,24.93,4.31,0.91,0.73,1.38,2.18,1.55,1.14,0.98\n";

// FNV-1a of the strings above; load_fixtures refuses corrupted data.
const std::uint64_t kMaterialsSum = 0ULL;    // filled below by fixtures.cpp constants
const std::uint64_t kPenetrationSum = 0ULL;
const std::uint64_t kSeriesSum = 0ULL;

}  // namespace cptu::fixtures_data

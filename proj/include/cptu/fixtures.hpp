#ifndef CPTU_FIXTURES_HPP
#define CPTU_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cptu/material.hpp"

namespace cptu {

/// One simulation series of the bundled benchmark set: the constitutive
/// overrides applied to every material, plus the cone-interface rotation
/// angle (120 deg smooth, 150 deg rough).
struct FixtureSeries {
  std::string id;
  double lambda = 0.0, kappa = 0.0, phi_cs = 0.0, nu = 0.0, k0 = 0.0, rho_deg = 120.0;
  std::string note;
  bool smooth() const { return rho_deg == 120.0; }
};

/// Reference material row: CASM parameters plus the element-test benchmarks.
struct FixtureMaterialRow {
  std::string series;
  char material = '?';
  CasmMaterial mat;
  double psi_0 = 0.0, su_peak = 0.0, su_res = 0.0, i_b = 0.0;
};

/// Penetration benchmark row: normalized cone metrics and the matching
/// normalized effective cavity resistances.
struct FixtureCptuRow {
  std::string series;
  char material = '?';
  double psi_0 = 0.0, su_peak = 0.0, su_res = 0.0;
  double q_p = 0.0, b_q1 = 0.0, b_q2 = 0.0;
  double q_eff_u1 = 0.0, q_eff_u2 = 0.0, q_eff_beta = 0.0;
  double cav_sph = 0.0, cav_cyl = 0.0;
};

struct Fixtures {
  std::vector<FixtureSeries> series;
  std::vector<FixtureMaterialRow> materials;  ///< 5 rows
  std::vector<FixtureCptuRow> cptu;           ///< 30 rows (6 series x 5 materials)
};

/// Parses the embedded benchmark tables; verifies their checksums and row
/// counts and throws std::runtime_error on corruption.
Fixtures load_fixtures();

/// Raw CSV text of the bundled tables (for the CLI dump).
std::string_view materials_csv();
std::string_view penetration_csv();
std::string_view series_csv();

const FixtureSeries& find_series(const Fixtures& fx, std::string_view series_id);

/// Material for one series/material cell: the base parameter set with the
/// series overrides applied.
CasmMaterial series_material(const Fixtures& fx, std::string_view series_id, char material_id);

namespace detail {
std::uint64_t fnv1a(std::string_view text);
Fixtures parse_fixtures(std::string_view materials, std::string_view penetration,
                        std::string_view series, std::uint64_t materials_sum,
                        std::uint64_t penetration_sum, std::uint64_t series_sum);
}  // namespace detail

}  // namespace cptu

#endif

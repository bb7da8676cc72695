#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ratvec/characterization.hpp"

namespace ratvec {

/// One end-to-end pipeline run: random quartic -> ratio vector -> membership
/// checks -> reconstruction -> comparison with the normalized quartic.
struct CampaignRow {
  std::array<double, 4> roots;
  double u, v, w;
  double R_residual;
  RegionLabel region;
  double k;
  double canon_r, canon_s;
  double rec_r, rec_s;
  double round_trip_error;  // max relative error of (rec_r, rec_s) vs canonical
  std::vector<std::string> violations;
};

struct CampaignSummary {
  std::size_t count = 0;
  double max_abs_R = 0;
  double max_round_trip_error = 0;
  std::size_t z1 = 0, z2 = 0, z3 = 0, other = 0;
  std::size_t violation_count = 0;
};

struct CampaignConfig {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double tol = 1e-12;       // bisection tolerance
  double R_tol = 1e-8;      // surface residual threshold
  double rt_tol = 1e-6;     // relative round-trip threshold
  std::optional<std::array<double, 4>> fixed_roots;  // bypass sampling
};

struct CampaignResult {
  std::vector<CampaignRow> rows;
  CampaignSummary summary;
};

/// Runs the seeded campaign.  Row randomness depends only on (seed, row
/// index): identical configs give identical results regardless of execution
/// order.  Throws std::invalid_argument when count < 1.
CampaignResult sample_campaign(const CampaignConfig& config);

/// Fixed-column CSV (17 significant digits) in CampaignRow field order.
void write_campaign_csv(std::ostream& out, const std::vector<CampaignRow>& rows);

void write_campaign_summary(std::ostream& out, const CampaignSummary& summary);

}  // namespace ratvec

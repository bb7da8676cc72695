#include "ratvec/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ratvec/quartic.hpp"
#include "ratvec/reconstruction.hpp"

namespace ratvec {

namespace {

// splitmix64; platform-independent, so campaign output is reproducible
// byte for byte.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [-1, 1)
  double uniform_pm1() { return 2.0 * ((next() >> 11) * 0x1.0p-53) - 1.0; }
};

std::array<double, 4> draw_roots(std::uint64_t seed, std::size_t row) {
  SplitMix64 rng{seed ^ (0x2545f4914f6cdd1dULL * (row + 1))};
  for (;;) {
    std::array<double, 4> roots{rng.uniform_pm1(), rng.uniform_pm1(), rng.uniform_pm1(),
                                rng.uniform_pm1()};
    std::sort(roots.begin(), roots.end());
    double min_gap = std::min({roots[1] - roots[0], roots[2] - roots[1], roots[3] - roots[2]});
    if (min_gap >= 1e-3) return roots;
  }
}

const char* kCsvHeader =
    "r1,r2,r3,r4,u,v,w,R_residual,region,k,canon_r,canon_s,rec_r,rec_s,round_trip_error,violations";

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

CampaignResult sample_campaign(const CampaignConfig& config) {
  if (config.count < 1) throw std::invalid_argument("count must be >= 1");
  CampaignResult result;
  result.rows.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    CampaignRow row{};
    row.roots = config.fixed_roots ? *config.fixed_roots : draw_roots(config.seed, i);
    QuarticRoots<double> roots{row.roots[0], row.roots[1], row.roots[2], row.roots[3]};

    RatioVector<double> rv = forward_ratio_vector(roots, config.tol);
    row.u = rv.u;
    row.v = rv.v;
    row.w = rv.w;
    row.R_residual = eval_R(rv.u, rv.v, rv.w);
    row.region = classify_region(rv.u, rv.v, rv.w);
    row.k = eval_k(rv.u, rv.v, rv.w);

    auto [canon, map] = normalize_roots(roots);
    row.canon_r = canon.r;
    row.canon_s = canon.s;

    auto checks = [&] {
      if (std::abs(row.R_residual) > config.R_tol) row.violations.push_back("R_residual");
      if (row.region != RegionLabel::Z1 && row.region != RegionLabel::Z2 &&
          row.region != RegionLabel::Z3)
        row.violations.push_back("region");
      if (!(row.k > 0)) row.violations.push_back("k_positive");
      if (!(0.25 < rv.u && rv.u < 0.5 && 1.0 / 3.0 < rv.v && rv.v < 2.0 / 3.0 && 0.5 < rv.w &&
            rv.w < 0.75))
        row.violations.push_back("peyser");
      if (!(rv.u < rv.v && rv.v < rv.w)) row.violations.push_back("monotonicity");
      for (const auto& bc : l1_bounds(rv.u, rv.v, rv.w))
        if (!bc.satisfied) row.violations.push_back("l1_" + bc.name);
    };
    checks();

    try {
      auto rec = reconstruct(rv.u, rv.v, rv.w, /*unchecked=*/false, config.R_tol);
      row.rec_r = rec.r;
      row.rec_s = rec.s;
      row.round_trip_error = std::max(std::abs(rec.r - row.canon_r) / std::abs(row.canon_r),
                                      std::abs(rec.s - row.canon_s) / std::abs(row.canon_s));
      if (row.round_trip_error > config.rt_tol) row.violations.push_back("round_trip");
    } catch (const std::exception&) {
      row.rec_r = row.rec_s = std::nan("");
      row.round_trip_error = std::nan("");
      row.violations.push_back("reconstruct_failed");
    }

    auto& s = result.summary;
    s.count += 1;
    s.max_abs_R = std::max(s.max_abs_R, std::abs(row.R_residual));
    if (std::isfinite(row.round_trip_error))
      s.max_round_trip_error = std::max(s.max_round_trip_error, row.round_trip_error);
    switch (row.region) {
      case RegionLabel::Z1: s.z1++; break;
      case RegionLabel::Z2: s.z2++; break;
      case RegionLabel::Z3: s.z3++; break;
      default: s.other++; break;
    }
    if (!row.violations.empty()) s.violation_count++;
    result.rows.push_back(std::move(row));
  }
  return result;
}

void write_campaign_csv(std::ostream& out, const std::vector<CampaignRow>& rows) {
  out << kCsvHeader << "\n";
  for (const auto& row : rows) {
    out << fmt17(row.roots[0]) << ',' << fmt17(row.roots[1]) << ',' << fmt17(row.roots[2]) << ','
        << fmt17(row.roots[3]) << ',' << fmt17(row.u) << ',' << fmt17(row.v) << ','
        << fmt17(row.w) << ',' << fmt17(row.R_residual) << ',' << to_string(row.region) << ','
        << fmt17(row.k) << ',' << fmt17(row.canon_r) << ',' << fmt17(row.canon_s) << ','
        << fmt17(row.rec_r) << ',' << fmt17(row.rec_s) << ',' << fmt17(row.round_trip_error)
        << ',';
    for (std::size_t i = 0; i < row.violations.size(); ++i) {
      if (i) out << ';';
      out << row.violations[i];
    }
    out << "\n";
  }
}

void write_campaign_summary(std::ostream& out, const CampaignSummary& s) {
  out << "rows=" << s.count << " max_abs_R=" << fmt17(s.max_abs_R)
      << " max_round_trip_error=" << fmt17(s.max_round_trip_error) << " regions{Z1=" << s.z1
      << ",Z2=" << s.z2 << ",Z3=" << s.z3 << ",other=" << s.other << "}"
      << " violations=" << s.violation_count << "\n";
}

}  // namespace ratvec

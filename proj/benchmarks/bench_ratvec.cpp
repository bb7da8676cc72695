#include <benchmark/benchmark.h>

#include "ratvec/campaign.hpp"
#include "ratvec/characterization.hpp"
#include "ratvec/identities.hpp"
#include "ratvec/quartic.hpp"
#include "ratvec/reconstruction.hpp"

using namespace ratvec;

static void BM_eval_R_double(benchmark::State& state) {
  double u = 0.30126, v = 0.44812, w = 0.59684;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_R(u, v, w));
  }
}
BENCHMARK(BM_eval_R_double);

static void BM_eval_R_rational(benchmark::State& state) {
  Rational u(9, 32), v(4, 9), w(7, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_R(u, v, w));
  }
}
BENCHMARK(BM_eval_R_rational);

static void BM_forward_float(benchmark::State& state) {
  QuarticRoots<double> roots{1.0, 1.5, 1.625, 1.75};
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_ratio_vector(roots, 1e-12));
  }
}
BENCHMARK(BM_forward_float);

static void BM_membership_float(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        is_ratio_vector(0.30126037552281559, 0.44811901100138128, 0.59683948690735632));
  }
}
BENCHMARK(BM_membership_float);

static void BM_membership_exact(benchmark::State& state) {
  Rational u(3, 10), v(1, 2), w(7, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ratio_vector(u, v, w));
  }
}
BENCHMARK(BM_membership_exact);

static void BM_reconstruct_exact(benchmark::State& state) {
  Rational u(3, 10), v(1, 2), w(7, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(u, v, w));
  }
}
BENCHMARK(BM_reconstruct_exact);

static void BM_solve_w_surd(benchmark::State& state) {
  Rational u(15, 32), v(5, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_w(u, v));
  }
}
BENCHMARK(BM_solve_w_surd);

static void BM_identity_suite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all_identities());
  }
}
BENCHMARK(BM_identity_suite);

static void BM_campaign_100(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.count = 100;
  cfg.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_campaign(cfg));
  }
}
BENCHMARK(BM_campaign_100);

BENCHMARK_MAIN();

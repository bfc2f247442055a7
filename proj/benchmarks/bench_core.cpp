#include <benchmark/benchmark.h>

#include "wqe/checkers.hpp"
#include "wqe/instances.hpp"
#include "wqe/kernels.hpp"
#include "wqe/quad.hpp"
#include "wqe/tensor.hpp"

namespace {

using namespace wqe;

void BM_hermitian_eig(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(RngStream{1, 0});
  const Hermitian a = sample_hermitian(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(a));
  }
}
BENCHMARK(BM_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_weighted_entropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(RngStream{2, 0});
  const DensityMatrix rho = sample_density(d, d, rng);
  const Weight phi = sample_weight(d, rng, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_entropy(rho, phi));
  }
}
BENCHMARK(BM_weighted_entropy)->Arg(4)->Arg(8)->Arg(16);

void BM_partial_trace(benchmark::State& state) {
  Rng rng(RngStream{3, 0});
  const SubsystemShape shape({4, 4, 4});
  const DensityMatrix rho = sample_density(64, 64, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho.mat(), shape, {1}));
  }
}
BENCHMARK(BM_partial_trace);

void BM_lieb_t_closed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(RngStream{4, 0});
  const Hermitian a = campaign_pd_hermitian(d, rng);
  const Hermitian b = sample_hermitian(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lieb_t(a, b));
  }
}
BENCHMARK(BM_lieb_t_closed)->Arg(4)->Arg(8);

void BM_lieb_t_quadrature(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(RngStream{4, 0});
  const Hermitian a = campaign_pd_hermitian(d, rng);
  const Hermitian b = sample_hermitian(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_oracle_lieb_t(a.mat(), b.mat(), 1e-9));
  }
}
BENCHMARK(BM_lieb_t_quadrature)->Arg(4);

void BM_purify(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(RngStream{5, 0});
  const DensityMatrix rho = sample_density(d, d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(purify(rho));
  }
}
BENCHMARK(BM_purify)->Arg(4)->Arg(6);

void BM_check_gibbs_instance(benchmark::State& state) {
  InstanceOptions opts;
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_instance(TheoremId::gibbs, SubsystemShape({4}), opts, RngStream{6, i++}));
  }
}
BENCHMARK(BM_check_gibbs_instance);

void BM_check_ssa_instance(benchmark::State& state) {
  InstanceOptions opts;
  opts.identity_weights = true;
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_instance(TheoremId::ssa, SubsystemShape({2, 2, 2}), opts, RngStream{7, i++}));
  }
}
BENCHMARK(BM_check_ssa_instance);

void BM_check_araki_lieb_instance(benchmark::State& state) {
  InstanceOptions opts;
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_instance(TheoremId::araki_lieb, SubsystemShape({2, 2}),
                                          opts, RngStream{8, i++}));
  }
}
BENCHMARK(BM_check_araki_lieb_instance);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "standby/coherent.hpp"
#include "standby/optimizer.hpp"
#include "standby/orders.hpp"
#include "standby/realization.hpp"
#include "standby/rng.hpp"

using namespace standby;

namespace {

ActiveLifetimes random_lifetimes(std::size_t n, std::uint64_t stream) {
  RngStream rng(99, stream);
  ActiveLifetimes t(n);
  for (auto& v : t) v = rng.next_uniform() * 10.0 + 1e-9;
  return t;
}

void BM_SystemLifetime(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const WearModel wear = WearModel::linear(0.5);
  const auto t = random_lifetimes(n, 0);
  const ActivationPlan plan = ActivationPlan::ascending_by(t);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        system_lifetime(t, plan, wear, Convention::VirtualAge).lifetime);
}
BENCHMARK(BM_SystemLifetime)->Arg(2)->Arg(5)->Arg(10)->Arg(50);

void BM_SystemLifetimePower(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const WearModel wear = WearModel::power(1.0, 2.0);
  const auto t = random_lifetimes(n, 1);
  const ActivationPlan plan = ActivationPlan::ascending_by(t);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        system_lifetime(t, plan, wear, Convention::DurationRescale).lifetime);
}
BENCHMARK(BM_SystemLifetimePower)->Arg(5)->Arg(50);

void BM_CoupledSp(benchmark::State& state) {
  const std::vector<DistributionSpec> dists{DistributionSpec::exponential(2.0),
                                            DistributionSpec::exponential(1.0)};
  const ActivationPlan asc({0, 1});
  const ActivationPlan desc({1, 0});
  const WearModel wear = WearModel::linear(0.5);
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(coupled_system_sp(dists, asc, desc, wear,
                                               Convention::VirtualAge, n, 42, threads)
                                 .p_hat);
}
BENCHMARK(BM_CoupledSp)
    ->Args({10000, 1})
    ->Args({100000, 1})
    ->Args({100000, 4})
    ->Args({100000, 8});

void BM_BruteForce(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto t = random_lifetimes(n, 2);
  const WearModel wear = WearModel::linear(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        brute_force_best_plan(t, wear, Convention::VirtualAge).best.lifetime);
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(6)->Arg(8);

void BM_CoherentLifetime(benchmark::State& state) {
  const auto sys = PathSetSystem::bridge();
  const auto t = random_lifetimes(sys.component_count(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_lifetime(sys, t));
}
BENCHMARK(BM_CoherentLifetime);

}  // namespace

BENCHMARK_MAIN();

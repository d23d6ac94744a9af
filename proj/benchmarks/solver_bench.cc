#include <benchmark/benchmark.h>

#include <random>

#include "nomacr/admission.hpp"
#include "nomacr/maxmin.hpp"
#include "nomacr/montecarlo.hpp"
#include "nomacr/units.hpp"

namespace {

nomacr::Scenario random_scenario(std::size_t users, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  nomacr::RawScenario r;
  for (std::size_t n = 0; n < users; ++n) {
    r.su_gains.push_back(std::pow(10.0, 4.0 * u(gen) - 2.0));
    r.su_noise.push_back(std::pow(10.0, 3.0 * u(gen) - 2.0));
    r.su_thresholds.push_back(nomacr::db_to_linear(25.0 * u(gen)));
  }
  r.p_max = 1.0;
  return nomacr::sort_users(r);
}

void BM_Admit(benchmark::State& state) {
  const auto users = static_cast<std::size_t>(state.range(0));
  const nomacr::Scenario s = random_scenario(users, 1);
  const double budget = nomacr::required_prefix_power(s, users);
  for (auto _ : state) benchmark::DoNotOptimize(nomacr::admit(s, budget));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Admit)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oN);

template <nomacr::Solver kSolver>
void BM_Solve(benchmark::State& state) {
  const auto users = static_cast<std::size_t>(state.range(0));
  const nomacr::Scenario s = random_scenario(users, 2);
  const double budget = nomacr::required_prefix_power(s, users) * 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nomacr::solve(kSolver, s, budget, nomacr::kDefaultEpsilon));
  }
}
BENCHMARK(BM_Solve<nomacr::Solver::bisection>)->Arg(2)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Solve<nomacr::Solver::waterfill>)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_DrawScenario(benchmark::State& state) {
  nomacr::ChannelModel m;
  m.num_sus = static_cast<std::size_t>(state.range(0));
  m.num_pus = 2;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nomacr::draw_scenario(m, ++seed));
}
BENCHMARK(BM_DrawScenario)->Arg(5)->Arg(15);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The fpbqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fpbqkd/bb84.hpp"
#include "fpbqkd/fpb_probe.hpp"
#include "fpbqkd/qnd.hpp"
#include "fpbqkd/quantum_core.hpp"

namespace {

void BM_ApplyAttackUnitary(benchmark::State& state) {
  const auto u = fpbqkd::attack_unitary();
  auto s = fpbqkd::TwoQubitState::product(fpbqkd::Qubit::plus45(), fpbqkd::Qubit::right());
  for (auto _ : state) {
    s = fpbqkd::apply(u, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyAttackUnitary);

void BM_Intercept(benchmark::State& state) {
  const fpbqkd::FpbProbe probe(fpbqkd::ProbeParams(1.0 / 3.0));
  fpbqkd::RandomStream rng(7);
  const auto s = fpbqkd::TwoQubitState::product(fpbqkd::Qubit::vertical(), fpbqkd::Qubit::right());
  for (auto _ : state) {
    auto hit = probe.intercept(s, rng);
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(BM_Intercept);

void BM_Session(benchmark::State& state) {
  fpbqkd::SessionConfig cfg;
  cfg.n_intervals = static_cast<std::uint64_t>(state.range(0));
  cfg.p_e = 0.1;
  for (auto _ : state) {
    auto stats = fpbqkd::run_session_stats(cfg);
    benchmark::DoNotOptimize(stats);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Session)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_QndTrials(benchmark::State& state) {
  const fpbqkd::QndParams q(0.003, 1e6);
  for (auto _ : state) {
    auto s = fpbqkd::run_qnd_trials(q, 100000, 3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_QndTrials)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

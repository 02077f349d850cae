// Copyright 2026 The qconf Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "qconf/adversary.hpp"
#include "qconf/codebook.hpp"
#include "qconf/engine.hpp"
#include "qconf/pauli.hpp"
#include "qconf/state.hpp"

namespace {

using namespace qconf;

void BM_word_product(benchmark::State& state) {
  PauliWord a = PauliWord::parse("X.iY.Z.I.X.iY.Z.I");
  PauliWord b = PauliWord::parse("Z.Z.X.X.iY.iY.I.I");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_word_product);

void BM_enumerate_order4_len2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_subgroups(2, 4));
  }
}
BENCHMARK(BM_enumerate_order4_len2);

void BM_apply_word_cluster(benchmark::State& state) {
  StateVector seed = prepare_state("cluster4");
  PauliWord w = PauliWord::parse("X.iY");
  std::vector<int> travel{0, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_word(seed, w, travel));
  }
}
BENCHMARK(BM_apply_word_cluster);

void BM_codebook_build(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_preset("table2-3p-2b-cluster", 2));
  }
}
BENCHMARK(BM_codebook_build);

void BM_conference_run_p2(benchmark::State& state) {
  ConferenceConfig cfg{make_preset("table2-3p-1b", 2), {{1}, {0}, {1}}};
  cfg.seed = 7;
  for (auto _ : state) {
    RunOutcome out = run_conference(cfg);
    benchmark::DoNotOptimize(out.completed);
  }
}
BENCHMARK(BM_conference_run_p2);

void BM_intercept_resend_10k(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_intercept_resend(1.0, 10000, 42));
  }
}
BENCHMARK(BM_intercept_resend_10k);

}  // namespace

BENCHMARK_MAIN();

// SPDX-License-Identifier: Apache-2.0
//
// wpc-lab: simulation and optimization laboratory for wirelessly powered communications
// Copyright (C) 2026 The wpc-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <benchmark/benchmark.h>

#include "wpc/wpc.hpp"

namespace {

void BM_MultisineDc(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const wpc::ToneLayout layout = wpc::narrowband_layout(n);
    const auto spec = wpc::MultisineSpec::equal_power(n, 1.0, layout.base_frequency, layout.tone_spacing);
    const wpc::RectennaParams diode;
    for (auto _ : state)
    {
        const wpc::Waveform w = wpc::sample_multisine(spec, layout.sample_rate);
        benchmark::DoNotOptimize(wpc::dc_output(w, diode));
    }
}
BENCHMARK(BM_MultisineDc)->RangeMultiplier(2)->Range(2, 32);

void BM_AmplitudeDesign(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    wpc::RandomSource rng(3);
    wpc::WaveformDesignProblem prob;
    prob.n_tones = n;
    for (std::size_t i = 0; i < n; ++i)
    {
        prob.channel_phases.push_back(rng.uniform(0.0, wpc::kTwoPi));
        prob.channel_magnitudes.push_back(rng.uniform(0.2, 1.0));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(wpc::optimize_amplitudes(prob, wpc::RectennaParams()).dc);
}
BENCHMARK(BM_AmplitudeDesign)->Arg(4)->Arg(8);

void BM_DecoupleTrial(benchmark::State &state)
{
    wpc::NearFarScenario scn;
    scn.samples = static_cast<std::size_t>(state.range(0));
    wpc::RandomSource rng(5);
    const wpc::NearFarSignals signals = wpc::generate_signals(scn, rng);
    const std::vector<double> errors(scn.n_rx, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpc::decouple(scn, signals, errors).sqnr_decoupled_db);
}
BENCHMARK(BM_DecoupleTrial)->Arg(512)->Arg(2048);

void BM_HotspotField(benchmark::State &state)
{
    const auto ua = wpc::UAConfig::spherical(static_cast<std::size_t>(state.range(0)), 100.0, 1.0);
    const auto grid = wpc::radial_grid(wpc::Point3::Zero(), 2.0, 20.0, 8, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpc::hotspot_field(ua, wpc::Point3::Zero(), grid).values.data());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()) * state.range(0));
}
BENCHMARK(BM_HotspotField)->Arg(1024)->Arg(8192);

void BM_ObservationProfile(benchmark::State &state)
{
    const auto ua = wpc::UAConfig::spherical(1024, 50.0, 1.0);
    const auto grid = wpc::planar_grid(wpc::Point3::Zero(), 4.0, 4.0, 0.25);
    wpc::RandomSource rng(7);
    const wpc::ComplexVector obs = wpc::simulate_observation(ua, {wpc::Point3(0.3, -1.1, 0.0)}, 20.0, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(wpc::observation_profile(ua, obs, grid).values.data());
}
BENCHMARK(BM_ObservationProfile);

void BM_RetroGain(benchmark::State &state)
{
    wpc::RandomSource rng(9);
    const auto h = wpc::rayleigh_matrix(static_cast<std::size_t>(state.range(0)), 1, rng).gains.col(0).eval();
    for (auto _ : state)
        benchmark::DoNotOptimize(wpc::retrodirective_gain(h, 1000, rng).gain);
}
BENCHMARK(BM_RetroGain)->Arg(8)->Arg(64);

} // namespace

BENCHMARK_MAIN();

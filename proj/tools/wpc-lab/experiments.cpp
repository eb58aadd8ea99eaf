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


#include "wpc-lab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wpc/wpc.hpp"

namespace wpc::lab {

namespace {

std::size_t trials_of(const ScenarioConfig &cfg)
{
    return cfg.trials > 0 ? cfg.trials : find_experiment(cfg.experiment)->default_trials;
}

std::size_t positive_size(const std::string &key, std::int64_t v)
{
    if (v < 1)
        throw ConfigError("config key '" + key + "': must be >= 1");
    return static_cast<std::size_t>(v);
}

Point3 point_from(const std::string &key, const std::vector<double> &xyz, double scale)
{
    if (xyz.size() != 3)
        throw ConfigError("config key '" + key + "': expected three coordinates");
    return scale * Point3(xyz[0], xyz[1], xyz[2]);
}

// ---- waveform -------------------------------------------------------------

ResultTable run_waveform(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    const RectennaParams diode(p.real("k2"), p.real("k4"));
    const double power = p.real("power");
    const std::size_t trials = trials_of(cfg);
    const RandomSource root(cfg.seed);

    ResultTable table({"n_tones", "phase_policy", "papr_db", "dc_output", "dc_ratio_vs_cw"});
    for (std::int64_t n_raw : p.integer_list("n_tones"))
    {
        const std::size_t n = positive_size("n_tones", n_raw);
        const ToneLayout layout = narrowband_layout(n);
        const double cw_dc = compare_multisine_vs_cw(n, power, diode).cw_dc;
        for (const std::string &policy : p.string_list("phase_policy"))
        {
            double papr_db = 0.0, dc = 0.0;
            if (policy == "aligned")
            {
                const Waveform w = sample_multisine(
                    MultisineSpec::equal_power(n, power, layout.base_frequency, layout.tone_spacing),
                    layout.sample_rate);
                papr_db = to_db(papr(w));
                dc = dc_output(w, diode);
            }
            else if (policy == "random")
            {
                RandomSource rng = root.substream(n);
                for (std::size_t t = 0; t < trials; ++t)
                {
                    std::vector<double> phases(n);
                    for (double &ph : phases)
                        ph = rng.uniform(0.0, kTwoPi);
                    const Waveform w = sample_multisine(
                        MultisineSpec::equal_power(n, power, layout.base_frequency, layout.tone_spacing, phases),
                        layout.sample_rate);
                    papr_db += to_db(papr(w));
                    dc += dc_output(w, diode);
                }
                papr_db /= static_cast<double>(trials);
                dc /= static_cast<double>(trials);
            }
            else
            {
                throw ConfigError("config key 'phase_policy': unknown policy '" + policy + "' (aligned, random)");
            }
            table.add_row({static_cast<std::int64_t>(n), policy, papr_db, dc, dc / cw_dc});
        }
    }
    return table;
}

// ---- decouple -------------------------------------------------------------

ResultTable run_decouple(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    NearFarScenario scn;
    scn.n_rx = positive_size("n_rx", p.integer("n_rx"));
    scn.m_bs = positive_size("m_bs", p.integer("m_bs"));
    scn.samples = positive_size("samples", p.integer("samples"));
    scn.samples_per_symbol = positive_size("samples_per_symbol", p.integer("samples_per_symbol"));
    scn.info_split_fraction = p.real("info_split_fraction");
    scn.seed = cfg.seed;
    const std::vector<double> stds = p.real_list("phase_err_std");
    const std::size_t trials = trials_of(cfg);

    ResultTable table({"ratio_db", "adc_bits", "phase_err_std", "sqnr_mixed_db", "sqnr_decoupled_db",
                       "sqnr_it_alone_db", "residual_db", "effective_rank"});
    for (double ratio : p.real_list("ratio_db"))
        for (std::int64_t bits : p.integer_list("adc_bits"))
        {
            scn.swipt_to_it_power_ratio_db = ratio;
            scn.adc_bits = static_cast<int>(positive_size("adc_bits", bits));
            for (const RobustnessPoint &r : robustness_sweep(scn, stds, trials))
                table.add_row({ratio, static_cast<std::int64_t>(scn.adc_bits), r.phase_error_std,
                               r.mean_sqnr_mixed_db, r.mean_sqnr_decoupled_db, r.mean_sqnr_it_alone_db,
                               r.mean_residual_db, static_cast<std::int64_t>(r.min_effective_rank)});
        }
    return table;
}

// ---- backscatter ----------------------------------------------------------

ResultTable run_backscatter(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    BackscatterConfig base;
    base.incident_power = p.real("incident_power");
    base.harvest_efficiency = p.real("harvest_efficiency");
    base.symbol_rate = p.real("symbol_rate");
    base.block_duration = p.real("block_duration");
    const double snr = from_db(p.real("snr_db"));
    const std::string &family = p.string("constellation");
    if (family != "family" && family != "psk")
        throw ConfigError("config key 'constellation': unknown constellation '" + family + "' (family, psk)");

    std::vector<double> duty = p.real_list("duty_cycles");
    std::sort(duty.begin(), duty.end());
    std::vector<std::size_t> sizes;
    for (std::int64_t m : p.integer_list("constellation_sizes"))
        sizes.push_back(positive_size("constellation_sizes", m));
    std::sort(sizes.begin(), sizes.end());

    std::vector<EnergyRatePoint> points;
    std::vector<double> reflection;
    for (std::size_t m : sizes)
    {
        BackscatterConfig c = base;
        c.constellation = family == "psk" ? psk_constellation(m, p.real("psk_radius"))
                                          : constellation_family(m, p.real("min_distance"));
        for (double d : duty)
        {
            c.duty_cycle = d;
            points.push_back({harvested_energy(c), backscatter_rate(c, snr), d, m});
            reflection.push_back(c.mean_reflection_power());
        }
    }
    const std::vector<EnergyRatePoint> front = pareto_front(points);

    ResultTable table({"duty_cycle", "constellation_size", "mean_reflection_power", "harvested_energy", "rate",
                       "on_frontier"});
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        const auto &pt = points[i];
        const bool on = std::any_of(front.begin(), front.end(), [&](const EnergyRatePoint &f) {
            return f.duty_cycle == pt.duty_cycle && f.constellation_size == pt.constellation_size;
        });
        table.add_row({pt.duty_cycle, static_cast<std::int64_t>(pt.constellation_size), reflection[i],
                       pt.harvested_energy, pt.rate, static_cast<std::int64_t>(on ? 1 : 0)});
    }
    return table;
}

// ---- retro ----------------------------------------------------------------

ResultTable run_retro(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    const double lambda = p.real("wavelength");
    const Point3 target = point_from("target", p.real_list("target"), lambda);
    const std::string &channel = p.string("channel");
    if (channel != "free_space" && channel != "rayleigh")
        throw ConfigError("config key 'channel': unknown channel '" + channel + "' (free_space, rayleigh)");
    const std::size_t draws = trials_of(cfg);
    const RandomSource root(cfg.seed);

    ResultTable table({"n_antennas", "retro_power", "mean_random_power", "max_random_power", "gain",
                       "gain_per_antenna"});
    for (std::int64_t n_raw : p.integer_list("array_sizes"))
    {
        const std::size_t n = positive_size("array_sizes", n_raw);
        RandomSource rng = root.substream(n);
        ComplexVector h;
        if (channel == "rayleigh")
            h = rayleigh_matrix(n, 1, rng).gains.col(0);
        else
            h = steering_vector(ArrayGeometry::uniform_linear(n, p.real("element_spacing") * lambda, lambda), target);
        const RetroGain g = retrodirective_gain(h, draws, rng);
        table.add_row({static_cast<std::int64_t>(n), g.retro_power, g.mean_random_power, g.max_random_power, g.gain,
                       g.gain / static_cast<double>(n)});
    }
    return table;
}

// ---- ua-hotspot -----------------------------------------------------------

ResultTable run_ua_hotspot(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    const double lambda = p.real("wavelength");
    const UAConfig ua = UAConfig::spherical(positive_size("elements", p.integer("elements")),
                                            p.real("radius_wavelengths") * lambda, lambda);
    const Point3 target = point_from("target", p.real_list("target"), lambda);
    const double r_min = p.real("r_min"), r_max = p.real("r_max");

    const auto grid = radial_grid(target, r_min * lambda, r_max * lambda,
                                  positive_size("radii", p.integer("radii")),
                                  positive_size("directions", p.integer("directions")));
    const FieldMap map = hotspot_field(ua, target, grid);
    const DecayFit fit = decay_exponent(map, target, r_min, r_max, positive_size("bins", p.integer("bins")));
    const double peak = field_power(ua, hotspot_weights(ua, target), target);

    ResultTable table({"quantity", "distance_wavelengths", "value"});
    table.add_row({std::string("peak_power"), 0.0, peak});
    for (std::size_t b = 0; b < fit.bin_radii.size(); ++b)
        table.add_row({std::string("relative_power_db"), fit.bin_radii[b], to_db(fit.bin_power[b] / peak)});
    table.add_row({std::string("decay_exponent"), std::monostate{}, fit.exponent});

    const Point3 direction = point_from("leakage_direction", p.real_list("leakage_direction"), 1.0);
    for (const LeakagePoint &l :
         interference_vs_separation(ua, target, direction, p.real_list("separations"),
                                    positive_size("leakage_window", p.integer("leakage_window"))))
        table.add_row({std::string("leakage_db"), l.separation_wavelengths, l.leakage_db});
    return table;
}

// ---- ua-locate ------------------------------------------------------------

ResultTable run_ua_locate(const ScenarioConfig &cfg)
{
    const ParamSet &p = cfg.params;
    const double lambda = p.real("wavelength");
    const UAConfig ua = UAConfig::spherical(positive_size("elements", p.integer("elements")),
                                            p.real("radius_wavelengths") * lambda, lambda);
    const std::size_t mobiles = positive_size("mobiles", p.integer("mobiles"));
    if (mobiles > 2)
        throw ConfigError("config key 'mobiles': 1 or 2 mobiles are supported");
    const double sep = p.real("mobile_separation") * lambda;
    const double region = p.real("region_half_width") * lambda;
    const double margin = p.real("search_margin") * lambda;
    const double spacing = p.real("grid_spacing") * lambda;
    if (!(spacing > 0.0) || !(region >= 0.0) || !(margin > 0.0))
        throw ConfigError("ua-locate: grid_spacing and search_margin must be positive, region_half_width >= 0");
    const PeakSearchOptions peaks{p.real("suppression_radius") * lambda, p.real("neighbor_radius") * lambda};
    const double extra_x = mobiles == 2 ? 0.5 * sep : 0.0;
    const std::vector<Point3> grid = planar_grid(Point3::Zero(), region + extra_x + margin, region + margin, spacing);
    const std::size_t trials = trials_of(cfg);
    const RandomSource root(cfg.seed);

    ResultTable table({"snr_db", "mobiles", "trials", "mean_error_wavelengths", "max_error_wavelengths",
                       "fraction_within_half_wavelength"});
    for (double snr : p.real_list("snr_db"))
    {
        double total = 0.0, worst = 0.0;
        std::size_t within = 0, count = 0;
        for (std::size_t t = 0; t < trials; ++t)
        {
            // common random numbers: trial t sees the same placement and unit noise at every SNR
            RandomSource place = root.substream(t).substream(0);
            RandomSource noise = root.substream(t).substream(1);
            const Point3 centre(place.uniform(-region, region), place.uniform(-region, region), 0.0);
            std::vector<Point3> truth;
            if (mobiles == 1)
                truth = {centre};
            else
                truth = {centre - Point3(0.5 * sep, 0.0, 0.0), centre + Point3(0.5 * sep, 0.0, 0.0)};
            const ComplexVector obs = simulate_observation(ua, truth, snr, noise);
            const auto est = locate_peaks(observation_profile(ua, obs, grid), mobiles, peaks);
            for (const Point3 &m : truth)
            {
                double e = std::numeric_limits<double>::infinity();
                for (const Point3 &q : est)
                    e = std::min(e, (q - m).norm() / lambda);
                total += e;
                worst = std::max(worst, e);
                within += e <= 0.5 ? 1 : 0;
                ++count;
            }
        }
        table.add_row({snr, static_cast<std::int64_t>(mobiles), static_cast<std::int64_t>(trials),
                       total / static_cast<double>(count), worst,
                       static_cast<double>(within) / static_cast<double>(count)});
    }
    return table;
}

} // namespace

const std::vector<Experiment> &experiments()
{
    using K = ParamKind;
    static const std::vector<Experiment> list = {
        {"waveform",
         "DC output and PAPR of equal-power multisines against a CW of the same power",
         {{"n_tones", K::integer_list, "1,2,4,8,16", "tone counts to sweep"},
          {"phase_policy", K::string_list, "aligned,random", "aligned (all tones in phase) and/or random"},
          {"k2", K::real, "1", "second-order diode coefficient"},
          {"k4", K::real, "1", "fourth-order diode coefficient"},
          {"power", K::real, "1", "average received power"}},
         100,
         "random phase draws per row",
         run_waveform},
        {"decouple",
         "near-far SQNR with and without Hadamard decoupling, phase-error robustness",
         {{"ratio_db", K::real_list, "90", "SWIPT-to-IT received power ratio (dB)"},
          {"adc_bits", K::integer_list, "10", "ADC resolutions"},
          {"phase_err_std", K::real_list, "0,0.001,0.01,0.1", "phase compensation error std (rad)"},
          {"n_rx", K::integer, "4", "receive antennas at the SWIPT receiver"},
          {"m_bs", K::integer, "8", "base-station antennas"},
          {"samples", K::integer, "2048", "samples per trial"},
          {"samples_per_symbol", K::integer, "16", "oversampling of the SWIPT keying"},
          {"info_split_fraction", K::real, "0.01", "power fraction routed to the information branch"}},
         50,
         "Monte Carlo trials per row",
         run_decouple},
        {"backscatter",
         "energy-rate tradeoff of a passive backscatter device over duty cycle and constellation size",
         {{"duty_cycles", K::real_list, "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1", "backscatter duty cycles"},
          {"constellation_sizes", K::integer_list, "2,4,8,16", "reflection constellation sizes"},
          {"constellation", K::string, "family", "family (fixed minimum distance) or psk"},
          {"min_distance", K::real, "0.5", "minimum distance of the constellation family"},
          {"psk_radius", K::real, "1", "reflection magnitude of the psk constellation"},
          {"snr_db", K::real, "20", "composite backscatter link SNR (dB)"},
          {"incident_power", K::real, "1", "incident RF power (W)"},
          {"harvest_efficiency", K::real, "1", "RF-to-DC efficiency"},
          {"symbol_rate", K::real, "1000", "symbols per second"},
          {"block_duration", K::real, "1", "block length (s)"}},
         1,
         "unused",
         run_backscatter},
        {"retro",
         "retrodirective (pilot-conjugate) beamforming gain against random unit-norm weights",
         {{"array_sizes", K::integer_list, "1,2,4,8,16,32", "antenna counts"},
          {"channel", K::string, "free_space", "free_space (half-wave ULA to target) or rayleigh"},
          {"target", K::real_list, "7,23,-3", "target position in wavelengths"},
          {"element_spacing", K::real, "0.5", "ULA spacing in wavelengths"},
          {"wavelength", K::real, "1", "wavelength (m)"}},
         10000,
         "random weight draws per row",
         run_retro},
        {"ua-hotspot",
         "hotspot decay law and inter-user leakage of a spherical ubiquitous array",
         {{"elements", K::integer, "32768", "array elements on the sphere"},
          {"radius_wavelengths", K::real, "100", "sphere radius"},
          {"wavelength", K::real, "1", "wavelength (m)"},
          {"target", K::real_list, "0,0,0", "hotspot position in wavelengths"},
          {"r_min", K::real, "2", "decay fit lower radius (wavelengths)"},
          {"r_max", K::real, "20", "decay fit upper radius (wavelengths)"},
          {"radii", K::integer, "40", "log-spaced radii sampled"},
          {"directions", K::integer, "64", "directions sampled per radius"},
          {"bins", K::integer, "10", "log-distance bins of the fit"},
          {"separations", K::real_list, "2,4,8,16,32,1000", "second-user separations (wavelengths)"},
          {"leakage_direction", K::real_list, "1,0,0", "direction toward the second user"},
          {"leakage_window", K::integer, "16", "samples in the half-wavelength leakage window"}},
         1,
         "unused",
         run_ua_hotspot},
        {"ua-locate",
         "blind localization from the channel observation profile",
         {{"elements", K::integer, "1024", "array elements on the sphere"},
          {"radius_wavelengths", K::real, "50", "sphere radius"},
          {"wavelength", K::real, "1", "wavelength (m)"},
          {"snr_db", K::real_list, "inf,20,10", "per-element SNR (dB); inf is noiseless"},
          {"mobiles", K::integer, "1", "simultaneous mobiles (1 or 2)"},
          {"mobile_separation", K::real, "30", "separation of two mobiles (wavelengths)"},
          {"region_half_width", K::real, "3", "mobiles are placed uniformly in this square (wavelengths)"},
          {"search_margin", K::real, "1", "hypothesis grid margin around the placement region (wavelengths)"},
          {"grid_spacing", K::real, "0.25", "hypothesis grid spacing (wavelengths)"},
          {"suppression_radius", K::real, "2", "minimum separation of reported peaks (wavelengths)"},
          {"neighbor_radius", K::real, "0.4", "local-maximum neighborhood (wavelengths)"}},
         100,
         "Monte Carlo trials per SNR",
         run_ua_locate},
    };
    return list;
}

const Experiment *find_experiment(const std::string &name)
{
    for (const auto &e : experiments())
        if (e.name == name)
            return &e;
    return nullptr;
}

ScenarioConfig default_config(const std::string &experiment)
{
    const Experiment *e = find_experiment(experiment);
    if (!e)
        throw ConfigError("unknown experiment '" + experiment + "'");
    return ScenarioConfig{experiment, ParamSet(e->schema), 1, {}, 0};
}

ResultTable run_experiment(const ScenarioConfig &config)
{
    const Experiment *e = find_experiment(config.experiment);
    if (!e)
        throw ConfigError("unknown experiment '" + config.experiment + "'");
    ResultTable table = e->run(config);
    table.add_metadata("tool", std::string("wpc-lab ") + kToolVersion);
    table.add_metadata("experiment", e->name);
    table.add_metadata("seed", std::to_string(config.seed));
    table.add_metadata("trials", std::to_string(config.trials > 0 ? config.trials : e->default_trials));
    for (const auto &[key, value] : config.params.values())
        table.add_metadata("param " + key, value);
    return table;
}

} // namespace wpc::lab

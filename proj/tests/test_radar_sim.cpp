// SPDX-License-Identifier: Apache-2.0
//
// risradar: RIS-assisted OFDM radar interference mitigation toolkit
// Copyright (C) 2026 The risradar authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "risradar/error.hpp"
#include "risradar/radar_sim.hpp"
#include "risradar/seed.hpp"
#include "risradar/synthesis.hpp"

using namespace risradar;

namespace {

SimulationInput single_element(const OfdmParams& p, double range_m, double velocity = 0.0) {
    SimulationInput in;
    in.params = p;
    in.geometry = ArrayGeometry::colocated(1);
    in.config = RisConfig::from_vector(std::vector<cd>{{1, 0}});
    in.target.range_m = range_m;
    in.target.velocity_mps = velocity;
    in.symbols = generate_symbols(p, 7);
    return in;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected risradar::Error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("QPSK symbols") {
    OfdmParams p;
    const auto a = generate_symbols(p, 123);
    const auto b = generate_symbols(p, 123);
    CHECK(a.symbols == b.symbols);
    CHECK(a.seed == 123);
    CHECK(generate_symbols(p, 124).symbols != a.symbols);
    for (Eigen::Index i = 0; i < a.symbols.size(); ++i)
        REQUIRE(std::abs(std::abs(a.symbols(i)) - 1.0) < 1e-15);

    OfdmParams big = p;
    big.num_subcarriers = 1000;
    big.num_symbols = 1000;
    const auto s = generate_symbols(big, 99);
    std::array<double, 4> counts{};
    for (Eigen::Index i = 0; i < s.symbols.size(); ++i) {
        const cd z = s.symbols(i);
        const double ang = std::arg(z);
        // quadrant index of pi/4, 3pi/4, -3pi/4, -pi/4
        const int q = ang > 0 ? (ang < kPi / 2 ? 0 : 1) : (ang < -kPi / 2 ? 2 : 3);
        CHECK(std::abs(std::abs(ang) - (q == 0 || q == 3 ? kPi / 4 : 3 * kPi / 4)) < 1e-15);
        counts[static_cast<std::size_t>(q)] += 1.0;
    }
    double chi2 = 0.0;
    for (double c : counts) {
        CHECK(std::abs(c / 1e6 - 0.25) < 0.01 * 0.25);
        chi2 += (c - 2.5e5) * (c - 2.5e5) / 2.5e5;
    }
    CHECK(chi2 < 16.27); // 3 dof, p = 0.001
}

TEST_CASE("simulate_received examples") {
    OfdmParams p;
    SUBCASE("stationary target at zero range gives a constant grid") {
        const auto y = simulate_received(single_element(p, 0.0));
        for (Eigen::Index i = 0; i < y.size(); ++i)
            REQUIRE(std::abs(y(i) - cd{1, 0}) < 1e-15);
    }
    SUBCASE("R = 30 m peaks at range bin 40") {
        const auto y = simulate_received(single_element(p, 30.0));
        // dense inverse-transform oracle over one symbol column
        std::size_t best = 0;
        long double best_mag = -1;
        const int dense = 8000;
        for (int k = 0; k < dense; ++k) {
            oracle::cld acc{0, 0};
            for (int n = 0; n < 100; ++n)
                acc += oracle::cld(y(n, 0).real(), y(n, 0).imag()) *
                       std::polar(1.0L, 2.0L * oracle::kPiL * n * k / dense);
            if (std::abs(acc) > best_mag) {
                best_mag = std::abs(acc);
                best = static_cast<std::size_t>(k);
            }
        }
        CHECK(static_cast<double>(best) * 100.0 / dense == doctest::Approx(40.0));
        const auto est = estimate_target(rv_map(y, p));
        CHECK(est.range_bin == 40);
        CHECK(est.range_m == 30.0);
        CHECK(range_error(30.0, est.range_m) == 0.0);
    }
    SUBCASE("one velocity bin of Doppler lands on velocity bin 1") {
        const double v = p.velocity_bin_size();
        CHECK(v == doctest::Approx(kSpeedOfLight / (2 * p.carrier_freq_hz * 50 * p.total_symbol_time())));
        const auto est = estimate_target(rv_map(simulate_received(single_element(p, 30.0, v)), p));
        CHECK(est.velocity_bin == 1);
        CHECK(est.range_bin == 40);
        CHECK(est.velocity_mps == doctest::Approx(v));
        const auto neg = estimate_target(rv_map(simulate_received(single_element(p, 30.0, -2 * v)), p));
        CHECK(neg.velocity_bin == 48);
        CHECK(neg.velocity_mps == doctest::Approx(-2 * v));
    }
    SUBCASE("delay and Doppler are separable") {
        const double v = 3 * p.velocity_bin_size();
        for (int shift = 0; shift < 5; ++shift) {
            const double R = 12.0 + 0.75 * shift;
            const auto est = estimate_target(rv_map(simulate_received(single_element(p, R, v)), p));
            CHECK(est.range_bin == 16 + static_cast<std::size_t>(shift));
            CHECK(est.velocity_bin == 3);
        }
    }
    SUBCASE("linearity in target and interferer") {
        SimulationInput in;
        in.params = p;
        in.geometry = ArrayGeometry::colocated(6);
        std::mt19937_64 rng(4);
        in.config = RisConfig::from_vector(oracle::random_vector(rng, 6));
        in.target = TargetParams{21.3, 7.0, 1.1, cd{0.5, -0.2}};
        in.symbols = generate_symbols(p, 11);
        for (auto mode : {SubcarrierMode::CarrierOnly, SubcarrierMode::AllSubcarriers}) {
            in.mode = mode;
            InterferenceParams itf{1.3e-7, 2e-8, 0.6, cd{3.0, 1.0}, 77};
            SimulationInput both = in;
            both.interference = itf;
            SimulationInput target_only = in;
            SimulationInput itf_only = both;
            itf_only.target.amplitude = 0.0;
            const ComplexGrid sum = simulate_received(target_only) + simulate_received(itf_only);
            CHECK((simulate_received(both) - sum).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("model equation at one sample") {
        SimulationInput in = single_element(p, 17.0, 5.0);
        in.geometry = ArrayGeometry::colocated(3);
        const std::vector<cd> c{{1, 0}, {0, 1}, {0.5, 0.5}};
        in.config = RisConfig::from_vector(c);
        in.target.angle_rad = 1.3;
        in.target.amplitude = cd{0.3, 0.4};
        in.mode = SubcarrierMode::AllSubcarriers;
        const auto y = simulate_received(in);
        const int n = 37, m = 21;
        const long double fn = 77e9L + n * 2e6L;
        const long double T = 5.625e-7L;
        const long double tau = 2 * 17.0L / oracle::kC, nu = 2 * 5.0L / oracle::kC;
        const oracle::cld g = oracle::pattern(c, 1.3L, fn / 77e9L);
        const oracle::cld ref = oracle::cld(0.3L, 0.4L) * g *
                                std::polar(1.0L, -2 * oracle::kPiL * n * 2e6L * tau) *
                                std::polar(1.0L, 2 * oracle::kPiL * 77e9L * nu * m * T);
        CHECK(std::abs(y(n, m) - cd(static_cast<double>(ref.real()), static_cast<double>(ref.imag()))) < 1e-9);
    }
    SUBCASE("time-varying configuration uses one column per symbol") {
        SimulationInput in = single_element(p, 0.0);
        Eigen::MatrixXcd slots(1, 50);
        for (int m = 0; m < 50; ++m)
            slots(0, m) = cd{static_cast<double>(m), 0};
        in.config = RisConfig(slots);
        const auto y = simulate_received(in);
        CHECK(y(3, 7) == cd{7, 0});
    }
    SUBCASE("errors") {
        SimulationInput in = single_element(p, 30.0);
        in.geometry = ArrayGeometry::colocated(2);
        CHECK(code_of([&] { simulate_received(in); }) == ErrorCode::Shape);
        in = single_element(p, 80.0);
        CHECK(code_of([&] { simulate_received(in); }) == ErrorCode::InputDomain);
        in = single_element(p, 30.0);
        in.config = RisConfig(Eigen::MatrixXcd::Ones(1, 3));
        CHECK(code_of([&] { simulate_received(in); }) == ErrorCode::Shape);
        in = single_element(p, 30.0);
        in.noise.variance = -1.0;
        CHECK(code_of([&] { simulate_received(in); }) == ErrorCode::InputDomain);
    }
}

TEST_CASE("frame difference") {
    OfdmParams p;
    SimulationInput in = single_element(p, 30.0, 20.0);
    in.geometry = ArrayGeometry::colocated(4);
    std::mt19937_64 rng(8);
    in.config = RisConfig::from_vector(oracle::random_vector(rng, 4));
    in.interference = InterferenceParams{1e-7, 0.0, 0.8, cd{2, 0}, 5};
    const ComplexGrid ris_path = simulate_received(in);

    ComplexGrid zero = ComplexGrid::Zero(100, 50);
    CHECK((simulate_frame_pair(in, zero) - ris_path).cwiseAbs().maxCoeff() == 0.0);

    ComplexGrid junk(100, 50);
    SplitMix64 g(3);
    for (Eigen::Index i = 0; i < junk.size(); ++i)
        junk(i) = cd{1e3 * g.normal(), 1e3 * g.normal()};
    CHECK((simulate_frame_pair(in, junk) - ris_path).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(code_of([&] { frame_difference(zero, ComplexGrid::Zero(3, 3)); }) == ErrorCode::Shape);
    CHECK(code_of([&] { simulate_frame_pair(in, ComplexGrid::Zero(3, 3)); }) == ErrorCode::Shape);

    SUBCASE("noise variance halves") {
        OfdmParams small = p;
        small.num_subcarriers = 10;
        small.num_symbols = 10;
        SimulationInput nin = single_element(small, 0.0);
        nin.target.amplitude = 0.0;
        nin.noise.variance = 2.0;
        double ss = 0.0;
        std::size_t count = 0;
        for (std::uint64_t t = 0; t < 10000; ++t) {
            nin.noise.seed = derive_seed(17, {t});
            const auto d = simulate_frame_pair(nin, ComplexGrid::Zero(10, 10));
            ss += d.squaredNorm();
            count += static_cast<std::size_t>(d.size());
        }
        CHECK(ss / static_cast<double>(count) == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("rv-map") {
    OfdmParams p;
    SUBCASE("constant grid") {
        const auto map = rv_map(ComplexGrid::Ones(100, 50), p);
        const auto est = estimate_target(map);
        CHECK(est.range_bin == 0);
        CHECK(est.velocity_bin == 0);
        CHECK(std::abs(map.values(0, 0)) == doctest::Approx(5000.0));
        CHECK(map.range_bin_m == 0.75);
    }
    SUBCASE("matches the direct transform, with padding") {
        OfdmParams small = p;
        small.num_subcarriers = 12;
        small.num_symbols = 6;
        ComplexGrid y(12, 6);
        SplitMix64 g(5);
        for (Eigen::Index i = 0; i < y.size(); ++i)
            y(i) = cd{g.normal(), g.normal()};
        for (std::size_t pr : {1u, 2u, 4u})
            for (std::size_t pv : {1u, 3u}) {
                const auto map = rv_map(y, small, pr, pv);
                REQUIRE(map.range_bins() == 12 * pr);
                REQUIRE(map.velocity_bins() == 6 * pv);
                for (std::size_t k = 0; k < map.range_bins(); ++k)
                    for (std::size_t q = 0; q < map.velocity_bins(); ++q) {
                        const auto ref = oracle::rv_bin(y, k, q, pr, pv);
                        const cd got = map.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(q));
                        REQUIRE(std::abs(got - cd(static_cast<double>(ref.real()), static_cast<double>(ref.imag()))) <
                                1e-10);
                    }
                CHECK(map.range_bin_m == doctest::Approx(small.range_bin_size() / pr));
            }
    }
    SUBCASE("Parseval") {
        SimulationInput in = single_element(p, 30.0, 11.0);
        in.interference = InterferenceParams{2e-7, 1e-8, 0.5, cd{4, 0}, 9};
        in.noise = NoiseParams{0.3, 4};
        const auto y = simulate_received(in);
        for (std::size_t pad : {1u, 4u}) {
            const auto map = rv_map(y, p, pad, pad);
            const double norm = static_cast<double>(pad * 100) * static_cast<double>(pad * 50);
            CHECK(map.values.squaredNorm() / norm == doctest::Approx(y.squaredNorm()).epsilon(1e-9));
        }
    }
    SUBCASE("coherent peak magnitude") {
        SimulationInput in = single_element(p, 30.0);
        in.geometry = ArrayGeometry::colocated(5);
        in.config = analytic_peak(in.target.angle_rad, 5);
        const auto map = rv_map(simulate_received(in), p);
        CHECK(std::abs(map.values(40, 0)) == doctest::Approx(5000.0 * 5.0).epsilon(1e-12));
    }
    SUBCASE("interferer-only grids spread like noise") {
        int exceed = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            SimulationInput in = single_element(p, 30.0);
            in.symbols = generate_symbols(p, derive_seed(seed, {1}));
            in.target.amplitude = 0.0;
            in.interference = InterferenceParams{1e-7, 0.0, 0.3, cd{1, 0}, derive_seed(seed, {2})};
            const auto map = rv_map(simulate_received(in), p);
            const double bound = 5000.0 * 1.0 / std::sqrt(5000.0) * 10.0;
            if (map.values.cwiseAbs().maxCoeff() > bound)
                ++exceed;
        }
        CHECK(exceed <= 2);
    }
    SUBCASE("ties go to the lowest bins") {
        RvMap map;
        map.values = ComplexGrid::Zero(4, 4);
        map.values(2, 3) = 1.0;
        map.values(2, 1) = cd{0, 1};
        map.values(3, 0) = -1.0;
        map.range_bin_m = 1.0;
        map.velocity_bin_mps = 1.0;
        const auto est = estimate_target(map);
        CHECK(est.range_bin == 2);
        CHECK(est.velocity_bin == 1);
        CHECK(map.velocity_of_bin(3) == -1.0);
        CHECK(map.velocity_of_bin(1) == 1.0);
    }
    CHECK(code_of([&] { rv_map(ComplexGrid::Ones(100, 50), p, 0, 1); }) == ErrorCode::InputDomain);
    CHECK(code_of([&] { rv_map(ComplexGrid::Ones(10, 50), p); }) == ErrorCode::Shape);
    CHECK(code_of([&] { estimate_target(RvMap{}); }) == ErrorCode::Shape);
}

TEST_CASE("range error metric") {
    CHECK(range_error(30.0, 30.0) == 0.0);
    CHECK(range_error(30.0, 30.75) == 0.75);
    CHECK(range_error(30.0, 29.25) == 0.75);

    SUBCASE("null suppression of the interference path") {
        OfdmParams p;
        const double tt = 2 * kPi / 5, ti = kPi / 4;
        const auto peak = analytic_peak(tt, 200);
        const auto comb = combine_normalized(peak, notch_config(ti));
        auto itf_only = [&](const RisConfig& cfg) {
            SimulationInput in = single_element(p, 30.0);
            in.geometry = ArrayGeometry::colocated(cfg.num_elements());
            in.config = cfg;
            in.target.amplitude = 0.0;
            in.interference = InterferenceParams{1e-7, 0.0, ti, cd{1, 0}, 3};
            return simulate_received(in);
        };
        const auto mitigated = itf_only(comb), plain = itf_only(peak);
        for (Eigen::Index i = 0; i < plain.size(); ++i)
            REQUIRE(std::norm(mitigated(i)) <= 1e-8 * std::norm(plain(i)));
    }

    SUBCASE("error grows with interference power under high leakage") {
        // single element: no spatial suppression at all
        OfdmParams p;
        p.num_symbols = 8;
        std::vector<double> means;
        for (double ratio_db : {10.0, 20.0, 25.0, 30.0}) {
            double sum = 0.0;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                SimulationInput in = single_element(p, 30.0);
                in.symbols = generate_symbols(p, derive_seed(seed, {1}));
                in.interference = InterferenceParams{1e-7, 0.0, 0.5, cd{std::pow(10.0, ratio_db / 20.0), 0.0},
                                                     derive_seed(seed, {2})};
                const auto est = estimate_target(rv_map(simulate_received(in), p));
                sum += range_error(30.0, est.range_m);
            }
            means.push_back(sum / 100.0);
        }
        INFO("means " << means[0] << " " << means[1] << " " << means[2] << " " << means[3]);
        CHECK(means[1] > 0.0);
        for (std::size_t i = 1; i < means.size(); ++i)
            CHECK(means[i] > means[i - 1]);
    }
}

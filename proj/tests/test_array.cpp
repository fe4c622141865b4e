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

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "risradar/array.hpp"
#include "risradar/error.hpp"
#include "risradar/synthesis.hpp"

using namespace risradar;

namespace {

cd as_cd(oracle::cld v) { return cd{static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected risradar::Error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("OfdmParams derived quantities") {
    OfdmParams p;
    CHECK(p.subcarrier_spacing() == doctest::Approx(2e6));
    CHECK(p.symbol_time() == doctest::Approx(5e-7));
    CHECK(p.total_symbol_time() == doctest::Approx(5.625e-7));
    CHECK(p.wavelength() == doctest::Approx(3e8 / 77e9));
    CHECK(p.subcarrier_wavelength(10) == doctest::Approx(3e8 / (77e9 + 10 * 2e6)));
    CHECK(p.range_bin_size() == 0.75);
    CHECK(p.unambiguous_range() == doctest::Approx(75.0));
    CHECK(p.velocity_bin_size() == doctest::Approx(3e8 / (2 * 77e9 * 50 * 5.625e-7)));
    CHECK_NOTHROW(p.validate());

    OfdmParams bad = p;
    bad.num_symbols = 0;
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidScenario);
    bad = p;
    bad.cp_ratio = 1.0;
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidScenario);
}

TEST_CASE("steering vector examples") {
    OfdmParams p;
    SUBCASE("single element") {
        for (double th : {0.0, 0.7, kPi}) {
            auto sv = steering_vector(ArrayGeometry::colocated(1), p, 17, th);
            REQUIRE(sv.values.size() == 1);
            CHECK(std::abs(sv.values(0) - cd{1.0, 0.0}) < 1e-15);
        }
    }
    SUBCASE("broadside") {
        for (std::size_t n : {0u, 50u, 99u}) {
            auto sv = steering_vector(ArrayGeometry::colocated(2), p, n, kPi / 2);
            CHECK(std::abs(sv.values(0) - 1.0) < 1e-15);
            CHECK(std::abs(sv.values(1) - 1.0) < 1e-15);
        }
    }
    SUBCASE("L=4 at pi/3, carrier only") {
        auto sv = steering_vector(ArrayGeometry::colocated(4), p, 5, kPi / 3, SubcarrierMode::CarrierOnly);
        const cd expected[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        for (int l = 0; l < 4; ++l)
            CHECK(std::abs(sv.values(l) - expected[l]) < 1e-12);
    }
    SUBCASE("subcarrier wavelength and offsets") {
        ArrayGeometry g{3, 0.5, {0.0, 1e-3, -2e-3}};
        const std::size_t n = 42;
        const double th = 1.234;
        auto sv = steering_vector(g, p, n, th, SubcarrierMode::AllSubcarriers);
        const long double fn = 77e9L + 42.0L * 2e6L;
        for (int l = 0; l < 3; ++l) {
            const long double ph = -2.0L * oracle::kPiL * 0.5L * (fn / 77e9L) * l * std::cos(1.234L) -
                                   2.0L * oracle::kPiL * g.element_offsets_m[l] * fn / oracle::kC;
            CHECK(std::abs(sv.values(l) - as_cd(std::polar(1.0L, ph))) < 1e-9);
        }
    }
    SUBCASE("unit magnitude") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> ang(0.0, kPi);
        for (int t = 0; t < 50; ++t) {
            auto sv = steering_vector(ArrayGeometry::colocated(64), p, static_cast<std::size_t>(t), ang(rng));
            for (Eigen::Index l = 0; l < sv.values.size(); ++l)
                CHECK(std::abs(std::abs(sv.values(l)) - 1.0) < 1e-12);
        }
    }
    SUBCASE("domain errors") {
        auto g = ArrayGeometry::colocated(2);
        CHECK(code_of([&] { steering_vector(g, p, 100, 1.0); }) == ErrorCode::InputDomain);
        CHECK(code_of([&] { steering_vector(g, p, 0, std::nan("")); }) == ErrorCode::InputDomain);
        CHECK(code_of([&] { steering_vector(g, p, 0, -0.1); }) == ErrorCode::InputDomain);
        CHECK(code_of([&] { steering_vector(g, p, 0, 3.2); }) == ErrorCode::InputDomain);
        ArrayGeometry bad{3, 0.5, {0.0, 1.0}};
        CHECK(code_of([&] { steering_vector(bad, p, 0, 1.0); }) == ErrorCode::Shape);
    }
}

TEST_CASE("pattern_value examples") {
    OfdmParams p;
    auto g2 = ArrayGeometry::colocated(2);
    const std::vector<cd> diff{{1, 0}, {-1, 0}};
    const std::vector<cd> sum{{1, 0}, {1, 0}};
    CHECK(std::abs(pattern_value(g2, diff, p, 0, kPi / 2)) < 1e-15);
    CHECK(std::abs(pattern_value(g2, sum, p, 0, kPi / 2) - cd{2.0, 0.0}) < 1e-15);

    std::mt19937_64 rng(11);
    auto c = oracle::random_vector(rng, 8);
    auto g8 = ArrayGeometry::colocated(8);
    CHECK(std::abs(pattern_value(g8, c, p, 0, 1.1) - as_cd(oracle::pattern(c, 1.1L))) < 1e-12);
    CHECK(std::abs(carrier_pattern(c, 1.1) - as_cd(oracle::pattern(c, 1.1L))) < 1e-12);
    const long double ratio = (77e9L + 63.0L * 2e6L) / 77e9L;
    CHECK(std::abs(pattern_value(g8, c, p, 63, 1.1, SubcarrierMode::AllSubcarriers) -
                   as_cd(oracle::pattern(c, 1.1L, ratio))) < 1e-11);

    CHECK(code_of([&] { pattern_value(g2, c, p, 0, 1.0); }) == ErrorCode::Shape);
}

TEST_CASE("power_pattern examples") {
    OfdmParams p;
    const auto grid = angle_grid(181);

    SUBCASE("all ones is L^2 per slot at broadside") {
        const std::size_t L = 7;
        Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(L, 3);
        const double broadside[] = {kPi / 2};
        auto pw = power_pattern(ArrayGeometry::colocated(L), RisConfig(ones), p, broadside, SubcarrierMode::CarrierOnly);
        CHECK(pw[0] == doctest::Approx(3.0 * L * L).epsilon(1e-14));
        auto pw2 = power_pattern(RisConfig(ones), broadside);
        CHECK(pw2[0] == doctest::Approx(3.0 * L * L).epsilon(1e-14));
    }
    SUBCASE("notch vanishes at its angle") {
        const double th = 0.9;
        const double at[] = {th};
        auto pw = power_pattern(ArrayGeometry::colocated(2), notch_config(th), p, at, SubcarrierMode::CarrierOnly);
        CHECK(pw[0] <= 1e-24);
    }
    SUBCASE("brute-force triple sum") {
        std::mt19937_64 rng(5);
        Eigen::MatrixXcd C(6, 3);
        for (Eigen::Index m = 0; m < 3; ++m) {
            auto v = oracle::random_vector(rng, 6);
            for (Eigen::Index l = 0; l < 6; ++l)
                C(l, m) = v[static_cast<std::size_t>(l)];
        }
        OfdmParams small = p;
        small.num_subcarriers = 16;
        small.bandwidth_hz = 4e9; // wide band so the subcarrier term matters
        const auto g6 = ArrayGeometry::colocated(6);
        for (bool all : {false, true}) {
            auto pw = power_pattern(g6, RisConfig(C), small, grid,
                                    all ? SubcarrierMode::AllSubcarriers : SubcarrierMode::CarrierOnly);
            for (std::size_t a = 0; a < grid.size(); ++a) {
                const long double ref = oracle::power(C, grid[a], 77e9L, small.subcarrier_spacing(), 16, all);
                CHECK(std::abs(pw[a] - static_cast<double>(ref)) <= 1e-10 * std::max(1.0L, ref));
            }
        }
    }
    SUBCASE("global phase invariance") {
        std::mt19937_64 rng(9);
        auto c = oracle::random_vector(rng, 12);
        const auto cfg = RisConfig::from_vector(c);
        const auto base = power_pattern(cfg, grid);
        std::uniform_real_distribution<double> psi(0.0, 2 * kPi);
        for (int t = 0; t < 100; ++t) {
            const auto rot = power_pattern(cfg.scaled(std::polar(1.0, psi(rng))), grid);
            for (std::size_t a = 0; a < grid.size(); ++a)
                REQUIRE(std::abs(rot[a] - base[a]) <= 1e-12 * std::max(1.0, base[a]));
        }
    }
    SUBCASE("real configs are symmetric about broadside") {
        std::mt19937_64 rng(10);
        std::normal_distribution<double> g(0.0, 1.0);
        std::vector<cd> c(9);
        for (auto& x : c)
            x = cd{g(rng), 0.0};
        const auto cfg = RisConfig::from_vector(c);
        for (double th : {0.1, 0.4, 1.0, 1.5}) {
            const double a[] = {th, kPi - th};
            auto pw = power_pattern(cfg, a);
            CHECK(pw[0] == doctest::Approx(pw[1]).epsilon(1e-12));
        }
    }
    SUBCASE("all-subcarrier sum dominates any single subcarrier") {
        std::mt19937_64 rng(12);
        const auto cfg = RisConfig::from_vector(oracle::random_vector(rng, 10));
        const auto g10 = ArrayGeometry::colocated(10);
        const auto all = power_pattern(g10, cfg, p, grid, SubcarrierMode::AllSubcarriers);
        for (std::size_t n : {0u, 37u, 99u})
            for (std::size_t a = 0; a < grid.size(); a += 7)
                CHECK(all[a] >= subcarrier_power(g10, cfg, p, n, grid[a]));
    }
    SUBCASE("errors") {
        const auto cfg = RisConfig::from_vector(std::vector<cd>{{1, 0}});
        CHECK(code_of([&] { power_pattern(cfg, std::span<const double>{}); }) == ErrorCode::Shape);
        CHECK(code_of([&] {
                  power_pattern(ArrayGeometry::colocated(2), cfg, p, grid, SubcarrierMode::CarrierOnly);
              }) == ErrorCode::Shape);
    }
}

TEST_CASE("normalize_pattern_db examples") {
    auto a = normalize_pattern_db(std::vector<double>{1, 10});
    CHECK(a[0] == doctest::Approx(-10.0).epsilon(1e-15));
    CHECK(a[1] == 0.0);
    auto b = normalize_pattern_db(std::vector<double>{5, 5});
    CHECK(b[0] == 0.0);
    CHECK(b[1] == 0.0);
    auto c = normalize_pattern_db(std::vector<double>{4, 2, 0}, -300.0);
    CHECK(c[0] == 0.0);
    // 10 log10(1/2) = -3.010299956639812...
    CHECK(std::abs(c[1] - (-3.0102999566398120)) < 1e-14);
    CHECK(c[2] == -300.0);
    auto d = normalize_pattern_db(std::vector<double>{1.0, 1e-40}, -300.0);
    CHECK(d[1] == -300.0); // -400 dB clamps to the floor

    CHECK(code_of([] { normalize_pattern_db(std::vector<double>{0, 0}); }) == ErrorCode::DegenerateInput);
    CHECK(code_of([] { normalize_pattern_db(std::vector<double>{1, -1}); }) == ErrorCode::InputDomain);
}

TEST_CASE("angle grid and RisConfig basics") {
    auto g = angle_grid();
    REQUIRE(g.size() == 721);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == kPi);
    CHECK(rad_to_deg(g[1]) == doctest::Approx(0.25));
    CHECK(code_of([] { angle_grid(1); }) == ErrorCode::InputDomain);

    Eigen::MatrixXcd m(2, 2);
    m << cd{1, 0}, cd{1, 0}, cd{2, 0}, cd{2, 0};
    RisConfig cfg(m);
    CHECK(cfg.is_static());
    CHECK(cfg.num_elements() == 2);
    CHECK(cfg.num_slots() == 2);
    CHECK(cfg.negated().coefficients()(1, 0) == cd{-2, 0});
    m(0, 1) = cd{0, 1};
    CHECK_FALSE(RisConfig(m).is_static());
    m(0, 0) = cd{std::numeric_limits<double>::infinity(), 0};
    CHECK(code_of([&] { RisConfig bad(m); }) == ErrorCode::InputDomain);
}

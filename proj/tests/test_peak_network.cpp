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

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "risradar/error.hpp"
#include "risradar/peak_network.hpp"
#include "risradar/synthesis.hpp"

using namespace risradar;

TEST_CASE("network shape and parameter round trip") {
    PeakNetSpec spec;
    spec.num_layers = 3;
    spec.hidden_width = 8;
    PeakNetwork net(spec, 5);
    // 2->8, 8->8, 8->10
    CHECK(net.parameter_count() == (16 + 8) + (64 + 8) + (80 + 10));
    Eigen::VectorXd p = net.parameters();
    CHECK(p.cwiseAbs().maxCoeff() <= 1.0 / std::sqrt(2.0));
    p(3) += 0.25;
    net.set_parameters(p);
    CHECK(net.parameters() == p);
    CHECK_THROWS_AS(net.set_parameters(Eigen::VectorXd::Zero(3)), Error);

    const auto cfg = net.configuration(1.0);
    REQUIRE(cfg.num_elements() == 5);
    for (const cd& c : cfg.column_vector())
        CHECK(std::abs(std::abs(c) - 1.0) < 1e-14);
    CHECK(net.loss(1.0) ==
          doctest::Approx(1.0 / static_cast<double>(std::norm(oracle::pattern(cfg.column_vector(), 1.0L)))));
}

TEST_CASE("gradient matches central finite differences") {
    PeakNetSpec spec;
    spec.num_layers = 3;
    spec.hidden_width = 8;
    spec.init_seed = 42;
    for (double theta : {0.4, 2 * kPi / 5, 2.5}) {
        PeakNetwork net(spec, 6);
        Eigen::VectorXd grad;
        net.loss_and_gradient(theta, grad);
        const Eigen::VectorXd p0 = net.parameters();
        Eigen::VectorXd fd(p0.size());
        const double h = 1e-5;
        for (Eigen::Index i = 0; i < p0.size(); ++i) {
            Eigen::VectorXd p = p0;
            p(i) = p0(i) + h;
            net.set_parameters(p);
            const double up = net.loss(theta);
            p(i) = p0(i) - h;
            net.set_parameters(p);
            const double down = net.loss(theta);
            fd(i) = (up - down) / (2 * h);
        }
        net.set_parameters(p0);
        const double rel = (grad - fd).norm() / std::max(fd.norm(), 1e-300);
        INFO("theta=" << theta << " rel=" << rel);
        CHECK(rel < 1e-4);
    }
}

TEST_CASE("single element trains to gain ratio one") {
    PeakNetSpec spec;
    spec.num_layers = 3;
    spec.hidden_width = 4;
    spec.num_iterations = 5;
    auto r = train_peak_network(1.0, 1, spec);
    CHECK(r.gain_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.loss_history.size() == 6);
    CHECK(r.best_loss == doctest::Approx(1.0));
}

TEST_CASE("untrained network has incoherent gain") {
    PeakNetSpec spec;
    spec.num_iterations = 0;
    double sum = 0.0, worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        spec.init_seed = seed;
        auto r = train_peak_network(2 * kPi / 5, 200, spec);
        CHECK(r.loss_history.size() == 1);
        sum += r.gain_ratio;
        worst = std::max(worst, r.gain_ratio);
    }
    const double mean = sum / 100.0;
    INFO("mean untrained gain " << mean << ", max " << worst);
    // independent unit phasors give E|sum|/L = sqrt(pi/(4L)) ~ 0.063 for L=200
    CHECK(mean < 5.0 / std::sqrt(200.0));
    CHECK(mean > 0.2 / std::sqrt(200.0));
    CHECK(worst < 0.5);
}

TEST_CASE("short training improves and reports the best iterate") {
    PeakNetSpec spec;
    spec.hidden_width = 32;
    spec.num_iterations = 300;
    auto r = train_peak_network(2 * kPi / 5, 40, spec);
    REQUIRE(r.loss_history.size() == 301);
    CHECK(r.best_loss == *std::min_element(r.loss_history.begin(), r.loss_history.end()));
    CHECK(r.loss_history[r.best_iteration] == r.best_loss);
    CHECK(r.best_loss < r.loss_history.front());
    CHECK(r.gain_ratio == doctest::Approx(peak_gain_ratio(r.config, 2 * kPi / 5)));
    CHECK(1.0 / std::sqrt(r.best_loss) / 40.0 == doctest::Approx(r.gain_ratio).epsilon(1e-9));
    // best-so-far envelope is non-increasing over the final 10%
    double env = r.loss_history.front();
    std::vector<double> envelope;
    for (double l : r.loss_history)
        envelope.push_back(env = std::min(env, l));
    for (std::size_t i = 270; i < envelope.size(); ++i)
        CHECK(envelope[i] <= envelope[i - 1]);
    for (auto& l : r.loss_history)
        CHECK(l > 0.0);
}

TEST_CASE("training is deterministic per seed") {
    PeakNetSpec spec;
    spec.hidden_width = 16;
    spec.num_iterations = 50;
    auto a = train_peak_network(1.1, 20, spec);
    auto b = train_peak_network(1.1, 20, spec);
    CHECK(a.loss_history == b.loss_history);
    CHECK(a.config.coefficients() == b.config.coefficients());
    spec.init_seed = 2;
    auto c = train_peak_network(1.1, 20, spec);
    CHECK(c.loss_history != a.loss_history);
}

TEST_CASE("training errors") {
    PeakNetSpec spec;
    spec.num_iterations = 3;
    CHECK_THROWS_AS(train_peak_network(-1.0, 10, spec), Error);
    CHECK_THROWS_AS(train_peak_network(1.0, 0, spec), Error);
    spec.num_layers = 1;
    CHECK_THROWS_AS(train_peak_network(1.0, 10, spec), Error);
    spec.num_layers = 3;
    spec.learning_rate = 0.0;
    CHECK_THROWS_AS(train_peak_network(1.0, 10, spec), Error);

    spec.learning_rate = 1e308;
    spec.hidden_width = 8;
    spec.num_iterations = 20;
    try {
        train_peak_network(1.0, 10, spec);
        FAIL("expected divergence");
    } catch (const TrainingError& e) {
        CHECK(e.code() == ErrorCode::TrainingFailure);
        CHECK(e.iteration() > 0);
        CHECK(e.iteration() <= 20);
    }
}

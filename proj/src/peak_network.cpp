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

#include "risradar/peak_network.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "risradar/error.hpp"
#include "risradar/seed.hpp"
#include "risradar/synthesis.hpp"

namespace risradar {

void PeakNetSpec::validate() const {
    if (num_layers < 2)
        throw Error(ErrorCode::InvalidScenario, "network.num_layers must be at least 2");
    if (hidden_width == 0)
        throw Error(ErrorCode::InvalidScenario, "network.hidden_width must be positive");
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
        throw Error(ErrorCode::InvalidScenario, "network.learning_rate must be positive");
}

PeakNetwork::PeakNetwork(const PeakNetSpec& spec, std::size_t num_elements) : num_elements_(num_elements) {
    spec.validate();
    if (num_elements == 0)
        throw Error(ErrorCode::InputDomain, "peak network: need at least one element");

    std::vector<Eigen::Index> sizes;
    sizes.push_back(2);
    for (std::size_t i = 0; i + 1 < spec.num_layers; ++i)
        sizes.push_back(static_cast<Eigen::Index>(spec.hidden_width));
    sizes.push_back(static_cast<Eigen::Index>(2 * num_elements));

    SplitMix64 rng(spec.init_seed);
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(sizes[i]));
        Eigen::MatrixXd w(sizes[i + 1], sizes[i]);
        for (Eigen::Index r = 0; r < w.rows(); ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c)
                w(r, c) = bound * (2.0 * rng.uniform() - 1.0);
        Eigen::VectorXd b(sizes[i + 1]);
        for (Eigen::Index r = 0; r < b.size(); ++r)
            b(r) = bound * (2.0 * rng.uniform() - 1.0);
        weights_.push_back(std::move(w));
        biases_.push_back(std::move(b));
    }
}

std::size_t PeakNetwork::parameter_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        n += static_cast<std::size_t>(weights_[i].size() + biases_[i].size());
    return n;
}

PeakNetwork::Activations PeakNetwork::forward(double theta) const {
    Activations act;
    Eigen::VectorXd x(2);
    x << std::cos(theta), std::sin(theta);
    act.a.push_back(std::move(x));
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        Eigen::VectorXd z = weights_[i] * act.a.back() + biases_[i];
        if (i + 1 < weights_.size())
            z = z.array().tanh();
        act.a.push_back(std::move(z));
    }
    return act;
}

std::vector<cd> PeakNetwork::phasors(const Eigen::VectorXd& out) const {
    std::vector<cd> c(num_elements_);
    for (std::size_t l = 0; l < num_elements_; ++l) {
        const cd z{out(static_cast<Eigen::Index>(2 * l)), out(static_cast<Eigen::Index>(2 * l + 1))};
        const double r = std::abs(z);
        c[l] = r > 0.0 ? z / r : cd{1.0, 0.0};
    }
    return c;
}

RisConfig PeakNetwork::configuration(double theta) const {
    const auto act = forward(theta);
    return RisConfig::from_vector(phasors(act.a.back()));
}

double PeakNetwork::loss(double theta_t) const {
    const auto act = forward(theta_t);
    return 1.0 / std::norm(carrier_pattern(phasors(act.a.back()), theta_t));
}

double PeakNetwork::loss_and_gradient(double theta_t, Eigen::VectorXd& gradient) const {
    const auto act = forward(theta_t);
    const Eigen::VectorXd& out = act.a.back();
    const auto c = phasors(out);

    const double step = -kPi * std::cos(theta_t);
    cd s{0.0, 0.0};
    std::vector<cd> steer(num_elements_);
    for (std::size_t l = 0; l < num_elements_; ++l) {
        steer[l] = std::polar(1.0, step * static_cast<double>(l));
        s += c[l] * steer[l];
    }
    const double power = std::norm(s);
    const double loss = 1.0 / power;

    // dL/d(re c_l) + j dL/d(im c_l) = -2 S conj(b_l) / |S|^4, then through the
    // normalization z -> z/|z| (tangential projection divided by |z|).
    Eigen::VectorXd delta(out.size());
    const double scale = -2.0 / (power * power);
    for (std::size_t l = 0; l < num_elements_; ++l) {
        const cd gc = scale * s * std::conj(steer[l]);
        const cd z{out(static_cast<Eigen::Index>(2 * l)), out(static_cast<Eigen::Index>(2 * l + 1))};
        const double r = std::abs(z);
        cd gz{0.0, 0.0};
        if (r > 0.0)
            gz = (gc - c[l] * std::real(std::conj(c[l]) * gc)) / r;
        delta(static_cast<Eigen::Index>(2 * l)) = gz.real();
        delta(static_cast<Eigen::Index>(2 * l + 1)) = gz.imag();
    }

    gradient.resize(static_cast<Eigen::Index>(parameter_count()));
    std::vector<Eigen::Index> offsets(weights_.size());
    {
        Eigen::Index off = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            offsets[i] = off;
            off += weights_[i].size() + biases_[i].size();
        }
    }
    for (std::size_t i = weights_.size(); i-- > 0;) {
        const Eigen::VectorXd& input = act.a[i];
        const Eigen::MatrixXd gw = delta * input.transpose();
        Eigen::Index off = offsets[i];
        for (Eigen::Index r = 0; r < gw.rows(); ++r)
            for (Eigen::Index col = 0; col < gw.cols(); ++col)
                gradient(off++) = gw(r, col);
        gradient.segment(off, delta.size()) = delta;
        if (i > 0) {
            Eigen::VectorXd back = weights_[i].transpose() * delta;
            delta = back.array() * (1.0 - input.array().square());
        }
    }
    return loss;
}

Eigen::VectorXd PeakNetwork::parameters() const {
    Eigen::VectorXd flat(static_cast<Eigen::Index>(parameter_count()));
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        for (Eigen::Index r = 0; r < weights_[i].rows(); ++r)
            for (Eigen::Index c = 0; c < weights_[i].cols(); ++c)
                flat(off++) = weights_[i](r, c);
        flat.segment(off, biases_[i].size()) = biases_[i];
        off += biases_[i].size();
    }
    return flat;
}

void PeakNetwork::set_parameters(const Eigen::VectorXd& flat) {
    if (static_cast<std::size_t>(flat.size()) != parameter_count())
        throw Error(ErrorCode::Shape, "peak network: parameter vector has wrong length");
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        for (Eigen::Index r = 0; r < weights_[i].rows(); ++r)
            for (Eigen::Index c = 0; c < weights_[i].cols(); ++c)
                weights_[i](r, c) = flat(off++);
        biases_[i] = flat.segment(off, biases_[i].size());
        off += biases_[i].size();
    }
}

TrainingResult train_peak_network(double theta_t, std::size_t num_elements, const PeakNetSpec& spec) {
    if (!std::isfinite(theta_t) || theta_t < 0.0 || theta_t > kPi)
        throw Error(ErrorCode::InputDomain, "train_peak_network: target angle outside [0, pi]");
    PeakNetwork net(spec, num_elements);

    constexpr double kBeta1 = 0.9, kBeta2 = 0.999;
    // Loss gradients shrink like 1/|S|^3; keep epsilon well below them.
    constexpr double kEps = 1e-12;

    Eigen::VectorXd params = net.parameters();
    Eigen::VectorXd m = Eigen::VectorXd::Zero(params.size());
    Eigen::VectorXd v = Eigen::VectorXd::Zero(params.size());
    Eigen::VectorXd grad;

    TrainingResult result;
    result.loss_history.reserve(spec.num_iterations + 1);
    result.best_loss = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_params = params;

    double b1t = 1.0, b2t = 1.0;
    for (std::size_t it = 0;; ++it) {
        const double loss = net.loss_and_gradient(theta_t, grad);
        if (!std::isfinite(loss) || !grad.allFinite())
            throw TrainingError(it, "peak network training diverged at iteration " + std::to_string(it));
        result.loss_history.push_back(loss);
        if (loss < result.best_loss) {
            result.best_loss = loss;
            result.best_iteration = it;
            best_params = params;
        }
        if (it == spec.num_iterations)
            break;

        b1t *= kBeta1;
        b2t *= kBeta2;
        m = kBeta1 * m + (1.0 - kBeta1) * grad;
        v = kBeta2 * v + (1.0 - kBeta2) * grad.cwiseAbs2();
        const double lr = spec.learning_rate * std::sqrt(1.0 - b2t) / (1.0 - b1t);
        params.array() -= lr * m.array() / (v.array().sqrt() + kEps);
        net.set_parameters(params);
    }

    net.set_parameters(best_params);
    result.config = net.configuration(theta_t);
    result.gain_ratio = peak_gain_ratio(result.config, theta_t);
    return result;
}

} // namespace risradar

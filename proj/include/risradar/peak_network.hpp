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

// Fully connected tanh network that maps a target angle to a phase-only RIS
// configuration with a beampattern peak at that angle. Trained by minimizing
// 1 / |C^T b(theta_t)|^2 with hand-written backpropagation.
//
// Layout for num_layers = k:
//   [cos t, sin t] -> H -> ... -> H -> 2 L_p      (k linear layers, tanh between)
// The 2 L_p outputs are read as (re, im) pairs z_l; the coefficient is the
// unit-modulus phasor c_l = z_l / |z_l|.

#ifndef RISRADAR_PEAK_NETWORK_HPP
#define RISRADAR_PEAK_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "risradar/array.hpp"

namespace risradar {

struct PeakNetSpec {
    std::size_t num_layers = 6;
    std::size_t hidden_width = 128;
    double learning_rate = 1e-2;
    std::size_t num_iterations = 5000;
    std::uint64_t init_seed = 1;

    void validate() const;
};

class PeakNetwork {
public:
    PeakNetwork(const PeakNetSpec& spec, std::size_t num_elements);

    std::size_t num_elements() const { return num_elements_; }
    std::size_t parameter_count() const;

    RisConfig configuration(double theta) const;
    double loss(double theta_t) const;
    /// Loss and its exact gradient with respect to parameters(), in that order.
    double loss_and_gradient(double theta_t, Eigen::VectorXd& gradient) const;

    /// All weights then biases, layer by layer (row-major weights).
    Eigen::VectorXd parameters() const;
    void set_parameters(const Eigen::VectorXd& flat);

private:
    struct Activations {
        std::vector<Eigen::VectorXd> a; // a[0] input, a[k] output of layer k (tanh or linear)
    };
    Activations forward(double theta) const;
    std::vector<cd> phasors(const Eigen::VectorXd& out) const;

    std::size_t num_elements_;
    std::vector<Eigen::MatrixXd> weights_;
    std::vector<Eigen::VectorXd> biases_;
};

struct TrainingResult {
    RisConfig config;                 // best configuration seen during training
    std::vector<double> loss_history; // loss at iteration 0..num_iterations
    std::size_t best_iteration = 0;
    double best_loss = 0.0;
    double gain_ratio = 0.0;          // versus analytic_peak of the same size
};

/// Full-batch Adam on the single input theta_t. Throws TrainingError carrying
/// the iteration index if the loss becomes non-finite.
TrainingResult train_peak_network(double theta_t, std::size_t num_elements, const PeakNetSpec& spec);

} // namespace risradar

#endif

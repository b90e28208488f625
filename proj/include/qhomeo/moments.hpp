// Copyright 2026 The qhomeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qhomeo/ensembles.hpp"

namespace qhomeo {

struct DistanceEstimate {
    double distance = 0.0;
    /// Bootstrap standard error of the linearized statistic
    /// (1/2) tr(S (J_A - J_B)), S = sign(J_A - J_B).
    double stderr_ = 0.0;
    std::size_t samples = 0;
};

struct DistanceOptions {
    std::size_t bootstrap = 200;
    /// Use exact_moment_choi for the second spec instead of sampling it.
    bool exact_b = false;
};

/// ||J_A - J_B||_1 / 2 between Monte Carlo Choi states of the k-fold channels.
/// The Choi distance lower-bounds the diamond distance.
DistanceEstimate choi_trace_distance(const EnsembleSpec &a, const EnsembleSpec &b, std::size_t k,
                                     std::size_t samples, Rng &rng, const DistanceOptions &opts = {});

struct DecayRow {
    std::size_t t = 0;
    double distance = 0.0;
    double stderr_ = 0.0;
    /// 47 * 2^{2k - t}.
    double bound = 0.0;
    bool above_floor = false;
};

struct DecayResult {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t samples = 0;
    std::vector<DecayRow> rows;
    /// Distance of a sampled Haar Choi state from the exact one at the same
    /// sample count, and the floor null + 3 sigma_null.
    double null_distance = 0.0;
    double null_stderr = 0.0;
    double floor = 0.0;
    /// Every pair t < t' with t' above the floor has d_t' <= d_t + 3 sigma.
    bool monotone = true;
    /// d_t <= 47 * 2^{2k-t} + 3 sigma_t for every t.
    bool within_bound = true;
    /// Least-squares slope of log2 d_t over rows above the floor (needs two).
    std::optional<double> slope;
    std::size_t fit_points = 0;
};

/// Homeopathy(n, t, Haar(t)) against exact Haar(n) for every t in t_list.
DecayResult decay_experiment(std::size_t n, std::size_t k, const std::vector<std::size_t> &t_list,
                             std::size_t samples, Rng &rng, std::size_t bootstrap = 200);

/// ||E Psi_U(V) - E Psi_U(V)||_1 / 2 for fixed queries on n + n_ancilla qubits.
DistanceEstimate adaptive_distance(const EnsembleSpec &a, const EnsembleSpec &b, std::size_t n_ancilla,
                                   const std::vector<CMatrix> &queries, std::size_t samples, Rng &rng,
                                   std::size_t bootstrap = 200);

/// Exact k-th frame potential of Homeopathy(n, t, Haar(t)) from the Clifford
/// commutant: F = tr((G^+ A)^2) with A the Gram-normalized matrix of the
/// inner Haar twirl between monomials. t = 0 means no injected block.
double homeopathy_frame_potential(std::size_t n, std::size_t t, std::size_t k);

struct FrameDecayRow {
    std::size_t t = 0;
    double frame_potential = 0.0;
    /// F(E_t) - F(Haar(n)).
    double excess = 0.0;
};

/// homeopathy_frame_potential for each t, plus the Haar value at t = n.
std::vector<FrameDecayRow> frame_potential_decay(std::size_t n, std::size_t k,
                                                 const std::vector<std::size_t> &t_list);

/// Least-squares slope of log2(y) against x.
double log2_slope(const std::vector<double> &x, const std::vector<double> &y);

} // namespace qhomeo

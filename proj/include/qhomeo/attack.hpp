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
#include <functional>
#include <vector>

#include "qhomeo/clifford.hpp"
#include "qhomeo/densesim.hpp"

namespace qhomeo {

/// Fresh i.i.d. state per call.
using StateSource = std::function<StateVector(Rng &)>;

/// C (phi_t (x) |0>^{n-t}) with C uniform over the Clifford group and phi_t
/// Haar on t qubits. t = 0 gives a random stabilizer state, t = n a Haar state.
StateVector make_compressible(std::size_t n, std::size_t t, Rng &rng);

StateSource compressible_source(std::size_t n, std::size_t t);
StateSource haar_source(std::size_t n);
/// Uniform draw from a fixed list.
StateSource list_source(std::vector<StateVector> states);

/// Clifford C with C psi = phi (x) |0>^{m}, m the number of generators; each
/// generator must stabilize psi (expectation +1 within 1e-9).
CliffordOp compress(const StateVector &psi, const StabilizerGroup &group);

struct DistinguishOptions {
    double epsilon_t = 0.5;
    /// Report 1{tr^2 >= epsilon_t} instead of the raw statistic.
    bool thresholded = false;
    /// 0: exact tr^2(P psi). Otherwise the mean of this many +-1 outcomes of
    /// P (x) P on psi^{(x) 2}, clamped to [0, 1].
    std::size_t shots = 0;
    BellPath path = BellPath::Measurement;
};

struct AttackReport {
    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t trials = 0;
    double epsilon_t = 0.5;
    bool thresholded = false;
    std::size_t shots = 0;
    std::vector<double> statistics;
    /// dim S per trial.
    std::vector<std::size_t> span_dims;
    double mean = 0.0;
    double stderr_ = 0.0;
    /// Fraction of trials with S != {0}.
    double nontrivial_fraction = 0.0;

    /// 4l copies for the Bell difference samples plus 2 for the estimate.
    [[nodiscard]] std::size_t copies() const { return 4 * l + 2; }
};

/// The Bell-difference distinguisher: l samples x_j, S = span(X) cap X^perp,
/// a uniform nonzero element P of S, statistic tr^2(P psi) (0 when S = {0}).
/// Trial i draws from substream(seed, i) with the seed taken from rng.
AttackReport distinguish(const StateSource &source, std::size_t n, std::size_t l, std::size_t trials, Rng &rng,
                         const DistinguishOptions &opts = {});

struct AdvantageRow {
    std::size_t t = 0;
    std::size_t l = 0;
    std::size_t copies = 0;
    AttackReport compressible;
    AttackReport haar;
    double advantage = 0.0;
    double stderr_ = 0.0;
    /// n >= t + 2, as the lower-bound argument requires.
    bool meets_condition = false;
};

/// Advantage (compressible mean - Haar mean) at l = 3t + 2 for each t.
std::vector<AdvantageRow> advantage_curve(const std::vector<std::size_t> &t_list, std::size_t n,
                                          std::size_t trials, Rng &rng, const DistinguishOptions &opts = {});

} // namespace qhomeo

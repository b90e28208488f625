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
#include "qhomeo/attack.hpp"

#include <algorithm>
#include <cmath>

#include "qhomeo/errors.hpp"

namespace qhomeo {

StateVector make_compressible(std::size_t n, std::size_t t, Rng &rng) {
    if (n == 0 || n > 8 || t > n) {
        throw ValidationError("make_compressible: need 0 <= t <= n <= 8");
    }
    StateVector base = t == 0 ? StateVector(n) : haar_state(t, rng);
    if (t > 0 && t < n) {
        base = base.tensor(StateVector(n - t));
    }
    return base.evolve(clifford_to_matrix(random_clifford(n, rng)));
}

StateSource compressible_source(std::size_t n, std::size_t t) {
    if (n == 0 || n > 8 || t > n) {
        throw ValidationError("compressible_source: need 0 <= t <= n <= 8");
    }
    return [n, t](Rng &rng) { return make_compressible(n, t, rng); };
}

StateSource haar_source(std::size_t n) {
    if (n == 0 || n > limits::kMaxStateQubits) {
        throw ValidationError("haar_source: n out of range");
    }
    return [n](Rng &rng) { return haar_state(n, rng); };
}

StateSource list_source(std::vector<StateVector> states) {
    if (states.empty()) {
        throw ValidationError("list_source: empty list");
    }
    return [states = std::move(states)](Rng &rng) {
        std::uniform_int_distribution<std::size_t> pick(0, states.size() - 1);
        return states[pick(rng)];
    };
}

CliffordOp compress(const StateVector &psi, const StabilizerGroup &group) {
    const std::size_t n = psi.num_qubits();
    if (group.num_qubits != n) {
        throw ValidationError("compress: group acts on a different qubit count");
    }
    for (const auto &g : group.generators) {
        if (std::abs(expectation(psi, g) - 1.0) > 1e-9) {
            throw ValidationError("compress: generator " + g.to_string() + " does not stabilize psi");
        }
    }
    const std::size_t m = group.generators.size();
    if (m == 0) {
        return CliffordOp::identity(n);
    }
    return clifford_mapping_to_z(group.generators, n - m);
}

namespace {

double trial_statistic(const StateVector &psi, std::size_t l, Rng &rng, const DistinguishOptions &opts,
                       std::size_t &span_dim) {
    const std::size_t n = psi.num_qubits();
    BellDifferenceSampler sampler(psi, opts.path);
    std::vector<f2::BinVec> xs;
    for (std::size_t j = 0; j < l; ++j) {
        xs.push_back(sampler.sample(rng).symplectic());
    }
    const auto span = f2::rref_basis(xs);
    const auto perp = f2::symplectic_complement(xs, 2 * n);
    const auto s = f2::span_intersect(span, perp);
    span_dim = s.size();
    if (s.empty()) {
        return 0.0;
    }
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << s.size()) - 1);
    const std::uint64_t coeffs = pick(rng);
    f2::BinVec v(2 * n);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((coeffs >> i) & 1u) {
            v ^= s[i];
        }
    }
    const double e = expectation(psi, PauliString::from_symplectic(v));
    double stat = e * e;
    if (opts.shots > 0) {
        // P (x) P on psi (x) psi reads +1 with probability (1 + tr^2) / 2
        std::bernoulli_distribution plus((1.0 + stat) / 2.0);
        double sum = 0.0;
        for (std::size_t i = 0; i < opts.shots; ++i) {
            sum += plus(rng) ? 1.0 : -1.0;
        }
        stat = std::clamp(sum / static_cast<double>(opts.shots), 0.0, 1.0);
    }
    if (opts.thresholded) {
        stat = stat >= opts.epsilon_t ? 1.0 : 0.0;
    }
    return stat;
}

} // namespace

AttackReport distinguish(const StateSource &source, std::size_t n, std::size_t l, std::size_t trials, Rng &rng,
                         const DistinguishOptions &opts) {
    if (l == 0) {
        throw ValidationError("distinguish: l must be at least 1");
    }
    if (trials == 0) {
        throw ValidationError("distinguish: need at least one trial");
    }
    if (n == 0 || n > 6) {
        throw ValidationError("distinguish: Bell sampling is limited to n <= 6");
    }
    AttackReport rep;
    rep.n = n;
    rep.l = l;
    rep.trials = trials;
    rep.epsilon_t = opts.epsilon_t;
    rep.thresholded = opts.thresholded;
    rep.shots = opts.shots;
    const std::uint64_t seed = rng();
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng trial_rng = substream(seed, i);
        const StateVector psi = source(trial_rng);
        if (psi.num_qubits() != n) {
            throw ValidationError("distinguish: source emitted a state of the wrong size");
        }
        std::size_t dim = 0;
        rep.statistics.push_back(trial_statistic(psi, l, trial_rng, opts, dim));
        rep.span_dims.push_back(dim);
        nontrivial += dim > 0;
    }
    double sum = 0.0;
    for (double s : rep.statistics) {
        sum += s;
    }
    rep.mean = sum / static_cast<double>(trials);
    double var = 0.0;
    for (double s : rep.statistics) {
        var += (s - rep.mean) * (s - rep.mean);
    }
    rep.stderr_ = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
    rep.nontrivial_fraction = static_cast<double>(nontrivial) / static_cast<double>(trials);
    return rep;
}

std::vector<AdvantageRow> advantage_curve(const std::vector<std::size_t> &t_list, std::size_t n,
                                          std::size_t trials, Rng &rng, const DistinguishOptions &opts) {
    std::vector<AdvantageRow> rows;
    for (std::size_t t : t_list) {
        AdvantageRow row;
        row.t = t;
        row.l = 3 * t + 2;
        row.copies = 4 * row.l + 2;
        row.meets_condition = n >= t + 2;
        row.compressible = distinguish(compressible_source(n, t), n, row.l, trials, rng, opts);
        row.haar = distinguish(haar_source(n), n, row.l, trials, rng, opts);
        row.advantage = row.compressible.mean - row.haar.mean;
        row.stderr_ = std::hypot(row.compressible.stderr_, row.haar.stderr_);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qhomeo

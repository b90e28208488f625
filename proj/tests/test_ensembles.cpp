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
#include <cmath>

#include "commutant_oracle.hpp"
#include "doctest.h"
#include "qhomeo/ensembles.hpp"
#include "qhomeo/errors.hpp"

using namespace qhomeo;

namespace {

double max_abs(const CMatrix &a) { return a.cwiseAbs().maxCoeff(); }

bool within(const Estimate &e, double target, double sigmas = 3.0) {
    return std::abs(e.value - target) <= sigmas * e.stderr_;
}

// exact Clifford frame potential: U^dag V is uniform over the group
double clifford_frame_potential(std::size_t n, std::size_t k) {
    const auto g = oracle::clifford_group_matrices(n);
    double sum = 0.0;
    for (const auto &u : g.symplectic_reps) {
        for (const auto &p : g.paulis) {
            sum += std::pow(std::norm((u * p).trace()), double(k));
        }
    }
    return sum / double(g.symplectic_reps.size() * g.paulis.size());
}

} // namespace

TEST_CASE("spec construction, validation and JSON") {
    const auto h = EnsembleSpec::homeopathy(5, 2, EnsembleSpec::haar(2));
    CHECK(h.describe() == "Homeopathy(5,2,Haar(2))");
    const auto back = EnsembleSpec::from_json(h.to_json());
    CHECK(back.describe() == h.describe());
    CHECK(back.to_json() == h.to_json());

    Rng rng(31);
    const auto fl = EnsembleSpec::fixed_list({haar_unitary(4, rng), CMatrix::Identity(4, 4)});
    CHECK(fl.n == 2);
    const auto fl2 = EnsembleSpec::from_json(fl.to_json());
    CHECK(max_abs(fl2.unitaries[0] - fl.unitaries[0]) == 0.0);

    CHECK_THROWS_AS(EnsembleSpec::homeopathy(3, 4, EnsembleSpec::haar(4)), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::homeopathy(3, 2, EnsembleSpec::haar(1)), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::clifford_enumerated(3), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::fixed_list({CMatrix::Ones(2, 2)}), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::from_json("{\"kind\":\"Nope\",\"n\":1}"), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::from_json("not json"), ValidationError);
    CHECK_THROWS_AS(EnsembleSpec::haar(0), ValidationError);
}

TEST_CASE("samples are unitary") {
    Rng rng(32);
    for (const auto &spec : {EnsembleSpec::haar(3), EnsembleSpec::clifford_uniform(3),
                             EnsembleSpec::clifford_enumerated(2),
                             EnsembleSpec::homeopathy(4, 2, EnsembleSpec::haar(2))}) {
        const EnsembleSampler s(spec);
        for (int i = 0; i < 20; ++i) {
            const CMatrix u = s.sample(rng);
            CHECK(u.rows() == static_cast<Eigen::Index>(spec.dim()));
            CHECK(is_unitary(u, 1e-12));
        }
    }
    CHECK(clifford_group_table(1).size() == 24);
}

TEST_CASE("homeopathy block sits on the first t qubits") {
    Rng rng(33);
    const CMatrix u1 = haar_unitary(2, rng);
    const auto spec = EnsembleSpec::homeopathy(3, 1, EnsembleSpec::fixed_list({u1}));
    const CMatrix u = sample(spec, rng);
    Rng replay(33);
    haar_unitary(2, replay);
    const CMatrix c2 = clifford_to_matrix(random_clifford(3, replay));
    const CMatrix c1 = clifford_to_matrix(random_clifford(3, replay));
    CHECK(max_abs(u - c1 * kron(u1, CMatrix::Identity(4, 4)) * c2) < 1e-12);
}

TEST_CASE("frame potentials at n=2") {
    Rng rng(34);
    const auto haar2 = frame_potential(EnsembleSpec::haar(2), 2, 20000, rng);
    CHECK(within(haar2, 2.0));
    const auto cl2 = frame_potential(EnsembleSpec::clifford_uniform(2), 2, 20000, rng);
    CHECK(within(cl2, 2.0));
    CHECK(clifford_frame_potential(2, 2) == doctest::Approx(2.0));
    // d = 2 < k = 3: the Haar value is the Catalan number 5, matched by the 3-design
    CHECK(clifford_frame_potential(1, 3) == doctest::Approx(5.0).epsilon(1e-12));

    const double exact4 = clifford_frame_potential(2, 4);
    CHECK(exact4 > 24.0);
    const auto cl4 = frame_potential(EnsembleSpec::clifford_uniform(2), 4, 200000, rng);
    CHECK(within(cl4, exact4));
    const auto en4 = frame_potential(EnsembleSpec::clifford_enumerated(2), 4, 200000, rng);
    CHECK(within(en4, exact4));
    // homeopathy with a trivial seed is the Clifford group
    const auto id4 = frame_potential(
        EnsembleSpec::homeopathy(2, 1, EnsembleSpec::fixed_list({CMatrix::Identity(2, 2)})), 4, 200000, rng);
    CHECK(within(id4, exact4));
    const auto haar4 = frame_potential(EnsembleSpec::haar(2), 4, 200000, rng);
    CHECK(within(haar4, 24.0));
    CHECK(cl4.value - haar4.value > 3.0 * std::hypot(cl4.stderr_, haar4.stderr_));
}

TEST_CASE("homeopathy invariances") {
    Rng rng(35);
    const auto full = frame_potential(EnsembleSpec::homeopathy(2, 2, EnsembleSpec::haar(2)), 2, 20000, rng);
    CHECK(within(full, 2.0));

    const auto spec = EnsembleSpec::homeopathy(2, 1, EnsembleSpec::haar(1));
    const EnsembleSampler s(spec);
    const CMatrix fixed = clifford_to_matrix(random_clifford(2, rng));
    const UnitarySampler shifted = [&](Rng &r) { return CMatrix(fixed * s.sample(r)); };
    const auto base = frame_potential(spec, 4, 100000, rng);
    const auto moved = frame_potential(shifted, 4, 100000, rng);
    CHECK(std::abs(base.value - moved.value) <= 3.0 * std::hypot(base.stderr_, moved.stderr_));
    const auto haar4 = frame_potential(EnsembleSpec::haar(2), 4, 100000, rng);
    CHECK(base.value >= haar4.value - 3.0 * std::hypot(base.stderr_, haar4.stderr_));
}

TEST_CASE("moment Choi states") {
    Rng rng(36);
    const CMatrix u = haar_unitary(4, rng);
    const CMatrix pure = moment_choi(EnsembleSpec::fixed_list({u}), 2, 5, rng);
    const CVector v = choi_vector(u, 2);
    CHECK(max_abs(pure - v * v.adjoint()) < 1e-12);
    CHECK(std::abs(pure.trace() - Complex(1.0)) < 1e-9);
    CHECK(max_abs(exact_moment_choi(EnsembleSpec::fixed_list({u}), 2) - v * v.adjoint()) < 1e-12);

    // identity channel Choi is the maximally entangled state
    const CVector vi = choi_vector(CMatrix::Identity(4, 4), 1);
    CHECK(max_abs(vi * vi.adjoint() - max_entangled_density(4)) < 1e-15);

    // Monte Carlo vs exact, entrywise 5 sigma
    const auto spec = EnsembleSpec::haar(2);
    const CMatrix exact = exact_moment_choi(spec, 2);
    CHECK(std::abs(exact.trace() - Complex(1.0)) < 1e-9);
    constexpr std::size_t kSamples = 10000;
    Rng a(37);
    const CMatrix mc = moment_choi(spec, 2, kSamples, a);
    CHECK(std::abs(mc.trace() - Complex(1.0)) < 1e-9);
    CHECK(is_hermitian(mc, 1e-12));
    Rng b(37);
    const EnsembleSampler sampler(spec);
    CMatrix sum = CMatrix::Zero(256, 256);
    RMatrix sq = RMatrix::Zero(256, 256);
    for (std::size_t s = 0; s < kSamples; ++s) {
        const CVector w = choi_vector(sampler.sample(b), 2);
        const CMatrix r = w * w.adjoint();
        sum += r;
        sq += r.cwiseAbs2();
    }
    const CMatrix mean = sum / double(kSamples);
    CHECK(max_abs(mean - mc) < 1e-12);
    int outside = 0;
    for (Eigen::Index i = 0; i < 256; ++i) {
        for (Eigen::Index j = 0; j < 256; ++j) {
            const double var = std::max(sq(i, j) / kSamples - std::norm(mean(i, j)), 0.0);
            const double se = std::sqrt(var / kSamples);
            outside += std::abs(mean(i, j) - exact(i, j)) > 5.0 * se + 1e-12;
        }
    }
    CHECK(outside == 0);
    CHECK_THROWS_AS(moment_choi(EnsembleSpec::haar(4), 2, 10, rng), ValidationError);
}

TEST_CASE("exact moment Choi: Clifford designs") {
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(max_abs(exact_moment_choi(EnsembleSpec::clifford_enumerated(1), k) -
                      exact_moment_choi(EnsembleSpec::haar(1), k)) < 1e-8);
    }
    CHECK(max_abs(exact_moment_choi(EnsembleSpec::clifford_enumerated(1), 4) -
                  exact_moment_choi(EnsembleSpec::haar(1), 4)) > 1e-3);
    CHECK(max_abs(exact_moment_choi(EnsembleSpec::clifford_enumerated(1), 4) -
                  exact_moment_choi(EnsembleSpec::clifford_uniform(1), 4)) < 1e-10);
    CHECK(max_abs(exact_moment_choi(EnsembleSpec::clifford_enumerated(2), 2) -
                  exact_moment_choi(EnsembleSpec::clifford_uniform(2), 2)) < 1e-10);
    CHECK(has_exact_moment_choi(EnsembleSpec::homeopathy(2, 2, EnsembleSpec::haar(2)), 2));
    CHECK_FALSE(has_exact_moment_choi(EnsembleSpec::homeopathy(2, 1, EnsembleSpec::haar(1)), 2));
    CHECK_THROWS_AS(exact_moment_choi(EnsembleSpec::homeopathy(2, 1, EnsembleSpec::haar(1)), 2), ValidationError);
}

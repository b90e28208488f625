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
#include <set>

#include "doctest.h"
#include "qhomeo/attack.hpp"
#include "qhomeo/errors.hpp"

using namespace qhomeo;

TEST_CASE("make_compressible examples") {
    Rng rng(51);
    for (int s = 0; s < 5; ++s) {
        const auto stab = make_compressible(4, 0, rng);
        CHECK(stabilizer_group_of(stab).size() == 16);
        const auto one = make_compressible(4, 1, rng);
        CHECK(stabilizer_group_of(one, 1).size() >= 8);
        const auto full = make_compressible(3, 3, rng);
        CHECK(full.num_qubits() == 3);
    }
    CHECK_THROWS_AS(make_compressible(3, 4, rng), ValidationError);
}

TEST_CASE("compress maps compressible states to product form") {
    Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const std::size_t t = trial % 3 < n ? trial % 3 : 0;
        const auto psi = make_compressible(n, t, rng);
        const auto group = stabilizer_group_of(psi, t);
        const auto c = compress(psi, group);
        const auto out = psi.evolve(clifford_to_matrix(c));
        const std::size_t m = group.generators.size();
        CHECK(m >= n - t);
        CHECK(prob_trailing_zeros(out, n - m) >= 1.0 - 1e-9);
        const auto after = stabilizer_group_of(out);
        for (std::size_t q = n - m; q < n; ++q) {
            const auto z = PauliString::single(n, q, 'Z');
            bool found = false;
            for (const auto &p : after.elements) {
                found = found || p == z;
            }
            CHECK(found);
        }
    }
    // full stabilizer group: C psi = |0...0> up to phase
    const auto stab = make_compressible(3, 0, rng);
    const auto c = compress(stab, stabilizer_group_of(stab));
    CHECK(std::abs(std::abs(stab.evolve(clifford_to_matrix(c))[0]) - 1.0) < 1e-9);
    // generators that do not stabilize are rejected
    const auto other = make_compressible(3, 0, rng);
    auto g = stabilizer_group_of(stab);
    if (std::abs(expectation(other, g.generators[0]) - 1.0) > 1e-6) {
        CHECK_THROWS_AS(compress(other, g), ValidationError);
    }
}

TEST_CASE("Bell difference samples of stabilizer states lie in the group") {
    Rng rng(53);
    const auto psi = make_compressible(4, 0, rng);
    const auto group = stabilizer_group_of(psi);
    std::set<std::string> support;
    for (const auto &p : group.elements) {
        support.insert(p.phaseless().to_string());
    }
    for (int s = 0; s < 300; ++s) {
        CHECK(support.count(bell_difference_sample(psi, rng).to_string()) == 1);
    }
}

TEST_CASE("product-state samples factor independently") {
    Rng rng(54);
    const auto psi = haar_state(1, rng).tensor(StateVector(2));
    constexpr int kSamples = 20000;
    double table[4][4] = {};
    for (int s = 0; s < kSamples; ++s) {
        const auto p = bell_difference_sample(psi, rng);
        const int head = (p.x().get(0) ? 1 : 0) + (p.z().get(0) ? 2 : 0);
        const int tail = (p.z().get(1) ? 2 : 0) + (p.z().get(2) ? 1 : 0);
        CHECK_FALSE(p.x().get(1));
        CHECK_FALSE(p.x().get(2));
        table[head][tail] += 1.0;
    }
    double rows[4] = {};
    double cols[4] = {};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            rows[i] += table[i][j];
            cols[j] += table[i][j];
        }
    }
    double chi2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double expect = rows[i] * cols[j] / kSamples;
            if (expect > 0.0) {
                chi2 += (table[i][j] - expect) * (table[i][j] - expect) / expect;
            }
        }
    }
    CHECK(chi2 < 27.88); // 9 dof, p = 0.001
}

TEST_CASE("distinguisher on stabilizer and Haar sources") {
    Rng rng(55);
    const auto stab = distinguish(compressible_source(5, 0), 5, 2, 100, rng);
    CHECK(stab.copies() == 10);
    for (std::size_t i = 0; i < stab.trials; ++i) {
        if (stab.span_dims[i] > 0) {
            CHECK(stab.statistics[i] == doctest::Approx(1.0).epsilon(1e-9));
        } else {
            CHECK(stab.statistics[i] == 0.0);
        }
    }
    CHECK(stab.mean >= 0.9);
    const auto haar = distinguish(haar_source(5), 5, 2, 100, rng);
    CHECK(haar.mean <= 0.1);
    for (double s : haar.statistics) {
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
    }
    // Haar with many samples: S is trivial once X has full rank 2n. At l = 2n
    // a rank-deficient X spans a hyperplane, which contains its symplectic
    // complement, so a margin beyond 2n is needed.
    const auto many = distinguish(haar_source(4), 4, 16, 100, rng);
    CHECK(many.nontrivial_fraction <= 0.05);
    const auto edge = distinguish(haar_source(4), 4, 8, 200, rng);
    CHECK(edge.nontrivial_fraction > 0.5);

    DistinguishOptions noisy;
    noisy.shots = 50;
    const auto shot = distinguish(compressible_source(4, 0), 4, 2, 50, rng, noisy);
    for (double s : shot.statistics) {
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
    }
    DistinguishOptions thr;
    thr.thresholded = true;
    const auto th = distinguish(haar_source(4), 4, 2, 50, rng, thr);
    for (double s : th.statistics) {
        CHECK((s == 0.0 || s == 1.0));
    }
    CHECK_THROWS_AS(distinguish(haar_source(4), 4, 0, 10, rng), ValidationError);
}

TEST_CASE("distinguisher is reproducible from the seed") {
    Rng a(56);
    Rng b(56);
    const auto ra = distinguish(compressible_source(4, 1), 4, 5, 20, a);
    const auto rb = distinguish(compressible_source(4, 1), 4, 5, 20, b);
    CHECK(ra.statistics == rb.statistics);
}

TEST_CASE("nontrivial-S frequency for compressible sources") {
    Rng rng(57);
    const std::size_t n = 5;
    const std::size_t t = 1;
    const std::size_t l = 3 * t + 2;
    const auto rep = distinguish(compressible_source(n, t), n, l, 200, rng);
    const double bound = 1.0 - std::exp2(-double(n - t)) - std::pow(4.0, double(t)) * std::pow(5.0 / 8.0, double(l));
    const double se = std::sqrt(rep.nontrivial_fraction * (1 - rep.nontrivial_fraction) / 200.0);
    CHECK(rep.nontrivial_fraction >= bound - 3.0 * se);
}

TEST_CASE("advantage curve rows") {
    Rng rng(58);
    const auto rows = advantage_curve({0, 1}, 4, 60, rng);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].l == 2);
    CHECK(rows[1].l == 5);
    CHECK(rows[1].copies == 22);
    CHECK(rows[0].meets_condition);
    CHECK(rows[0].advantage >= 0.125);
}

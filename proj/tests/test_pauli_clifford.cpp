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
#include <map>
#include <random>

#include "doctest.h"
#include "qhomeo/clifford.hpp"
#include "qhomeo/errors.hpp"

using namespace qhomeo;

namespace {

PauliString random_pauli(std::size_t n, Rng &rng) {
    return pauli_from_index(n, rng() & ((std::uint64_t{1} << (2 * n)) - 1));
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("pauli_mul single-qubit table and phases") {
    const auto x = PauliString::from_string("X");
    const auto y = PauliString::from_string("Y");
    const auto z = PauliString::from_string("Z");
    // X Z = -i Y
    CHECK(pauli_mul(x, z).to_string() == "-iY");
    CHECK(pauli_mul(z, x).to_string() == "+iY");
    CHECK(pauli_mul(x, y).to_string() == "+iZ");
    for (const auto &p : {x, y, z}) {
        const auto sq = pauli_mul(p, p);
        CHECK(sq.is_identity());
        CHECK(sq.hermitian_phase() == 0);
    }
    const auto prod = pauli_mul(PauliString::from_string("XZ"), PauliString::from_string("ZZ"));
    CHECK(prod.to_string() == "-iYI");
    CHECK_THROWS_AS(pauli_mul(x, PauliString::from_string("XX")), ValidationError);
}

TEST_CASE("pauli_mul matches dense matrix products") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        p = PauliString(p.x(), p.z(), static_cast<unsigned>(rng() % 4));
        const CMatrix expected = pauli_matrix(p) * pauli_matrix(q);
        CHECK(max_abs_diff(pauli_matrix(pauli_mul(p, q)), expected) < 1e-12);
    }
}

TEST_CASE("labels and hermiticity") {
    const auto p = PauliString::from_string("-XYZI");
    CHECK(p.to_string() == "-XYZI");
    CHECK(p.is_hermitian());
    CHECK(p.weight() == 3);
    CHECK(PauliString::from_string("+iX").is_hermitian() == false);
    CHECK(pauli_matrix(PauliString::from_string("Y")).isApprox(
        (CMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished()));
    CHECK_THROWS_AS(PauliString::from_string("XQ"), ValidationError);
}

TEST_CASE("chi examples and properties") {
    CHECK(chi(PauliString::from_string("X"), PauliString::from_string("Z")) == -1);
    CHECK(chi(PauliString::from_string("XX"), PauliString::from_string("ZZ")) == 1);
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        CHECK(chi(PauliString(n), q) == 1);
        CHECK(chi(p, q) == chi(q, p));
        CHECK(chi(p, q) == (f2::symplectic_product(p.symplectic(), q.symplectic()) ? -1 : 1));
        // chi(P, Q) = tr(P Q P^dag Q^dag) / d
        const CMatrix mp = pauli_matrix(p);
        const CMatrix mq = pauli_matrix(q);
        const Complex tr = (mp * mq * mp.adjoint() * mq.adjoint()).trace() / double(mp.rows());
        CHECK(tr.real() == doctest::Approx(chi(p, q)));
    }
}

TEST_CASE("Clifford gates act as defined") {
    const auto h = CliffordOp::hadamard(2, 0);
    CHECK(h.conjugate(PauliString::from_string("XI")).to_string() == "+ZI");
    CHECK(h.conjugate(PauliString::from_string("ZI")).to_string() == "+XI");
    CHECK(h.conjugate(PauliString::from_string("YI")).to_string() == "-YI");
    const auto id = CliffordOp::identity(3);
    const auto p = PauliString::from_string("-XYZ");
    CHECK(id.conjugate(p) == p);

    const CMatrix cnot = clifford_to_matrix(CliffordOp::cnot(2, 0, 1));
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = expected(2, 3) = expected(3, 2) = 1.0;
    CHECK(max_abs_diff(cnot, expected) < 1e-12);
    CHECK(max_abs_diff(clifford_to_matrix(CliffordOp::identity(3)), CMatrix::Identity(8, 8)) < 1e-12);

    CMatrix hm(2, 2);
    hm << 1, 1, 1, -1;
    hm /= std::sqrt(2.0);
    const CMatrix got = clifford_to_matrix(CliffordOp::hadamard(1, 0));
    CHECK(max_abs_diff(got, hm) < 1e-12);
}

TEST_CASE("invalid symplectic data is rejected") {
    CHECK_THROWS_AS(CliffordOp(f2::BinMat(2, 2), f2::BinVec(2)), ValidationError);
    CHECK_THROWS_AS(CliffordOp::cnot(2, 1, 1), ValidationError);
}

TEST_CASE("random Cliffords: symplectic, commutation preserving, dense conjugation agrees") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto c = random_clifford(n, rng);
        CHECK(f2::is_symplectic(c.symplectic()));
        const CMatrix u = clifford_to_matrix(c);
        CHECK(is_unitary(u, 1e-12));
        for (int k = 0; k < 5; ++k) {
            auto p = random_pauli(n, rng);
            if (k % 2 == 1) {
                p = p.negated();
            }
            const auto q = random_pauli(n, rng);
            const auto cp = c.conjugate(p);
            CHECK(chi(cp, c.conjugate(q)) == chi(p, q));
            CHECK(cp.is_hermitian());
            CHECK(max_abs_diff(u * pauli_matrix(p) * u.adjoint(), pauli_matrix(cp)) < 1e-10);
        }
    }
}

TEST_CASE("conjugation is a group action and inverse undoes it") {
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto c1 = random_clifford(n, rng);
        const auto c2 = random_clifford(n, rng);
        const auto both = compose(c2, c1);
        for (int k = 0; k < 5; ++k) {
            const auto p = random_pauli(n, rng);
            CHECK(c2.conjugate(c1.conjugate(p)) == both.conjugate(p));
        }
        CHECK(compose(c1.inverse(), c1) == CliffordOp::identity(n));
        CHECK(compose(c1, c1.inverse()) == CliffordOp::identity(n));
    }
}

TEST_CASE("Clifford enumeration sizes") {
    CHECK(enumerate_cliffords(1).size() == 24);
    const auto two = enumerate_cliffords(2);
    CHECK(two.size() == 11520);
    CHECK_THROWS_AS(enumerate_cliffords(3), ValidationError);
}

TEST_CASE("random_clifford(1) is uniform over the 24 cosets") {
    const auto all = enumerate_cliffords(1);
    std::map<std::pair<std::string, std::string>, std::size_t> slot;
    for (std::size_t i = 0; i < all.size(); ++i) {
        slot[{all[i].symplectic().to_string(), all[i].signs().to_string()}] = i;
    }
    REQUIRE(slot.size() == 24);
    Rng rng(7);
    constexpr std::size_t kSamples = 100000;
    std::vector<double> counts(24, 0.0);
    for (std::size_t s = 0; s < kSamples; ++s) {
        const auto c = random_clifford(1, rng);
        counts[slot.at({c.symplectic().to_string(), c.signs().to_string()})] += 1;
    }
    const double expected = kSamples / 24.0;
    double chi2 = 0.0;
    for (double c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
        // every class within 4 sigma of the binomial mean
        CHECK(std::abs(c - expected) < 4.0 * std::sqrt(expected * (23.0 / 24.0)));
    }
    // chi-square, 23 dof, p = 0.001 critical value
    CHECK(chi2 < 49.73);
}

TEST_CASE("stabilizer_group_of examples") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto g = stabilizer_group_of(StateVector(n));
        CHECK(g.size() == (std::size_t{1} << n));
        for (const auto &p : g.elements) {
            CHECK(p.x().is_zero());
            CHECK(p.hermitian_phase() == 0);
        }
    }
    Rng rng(8);
    const auto haar = stabilizer_group_of(haar_state(4, rng));
    CHECK(haar.size() == 1);
    CHECK(haar.compression() == 4);

    const auto phi = haar_state(1, rng);
    const auto product = phi.tensor(StateVector(3));
    const auto g = stabilizer_group_of(product, 1);
    CHECK(g.size() == 8);
    CHECK_THROWS_AS(stabilizer_group_of(haar_state(3, rng), 1), ValidationError);
}

TEST_CASE("stabilizer states of random Cliffords have full groups") {
    Rng rng(9);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto c = random_clifford(n, rng);
            const auto psi = StateVector(n).evolve(clifford_to_matrix(c));
            const auto g = stabilizer_group_of(psi);
            CHECK(g.size() == (std::size_t{1} << n));
            for (const auto &p : g.elements) {
                CHECK(expectation(psi, p) == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("clifford_mapping_to_z sends generators to trailing Z") {
    Rng rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const std::size_t m = 1 + rng() % n;
        const auto c = random_clifford(n, rng);
        // images of -Z_j for the last m qubits form a commuting independent set
        std::vector<PauliString> gens;
        for (std::size_t j = n - m; j < n; ++j) {
            gens.push_back(c.conjugate(PauliString::single(n, j, 'Z').negated()));
        }
        const auto map = clifford_mapping_to_z(gens, n - m);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(map.conjugate(gens[i]) == PauliString::single(n, n - m + i, 'Z'));
        }
    }
    CHECK_THROWS_AS(clifford_mapping_to_z({PauliString::from_string("XI"), PauliString::from_string("ZI")}, 0),
                    ValidationError);
}

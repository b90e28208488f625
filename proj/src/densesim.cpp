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
#include "qhomeo/densesim.hpp"

#include <bit>
#include <cmath>

#include "qhomeo/errors.hpp"

namespace qhomeo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_state_qubits(std::size_t n) {
    if (n > limits::kMaxStateQubits) {
        throw ValidationError("state on " + std::to_string(n) +
                              " qubits exceeds the dense limit of " +
                              std::to_string(limits::kMaxStateQubits));
    }
}

CVector gaussian_vector(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = Complex(re, im);
    }
    return v;
}

} // namespace

Rng substream(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t mixed = splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(mixed),
                      static_cast<std::uint32_t>(mixed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(seed)};
    return Rng(seq);
}

StateVector::StateVector(std::size_t n) : n_(n) {
    check_state_qubits(n);
    amps_ = CVector::Zero(Eigen::Index{1} << n);
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, CVector amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_state_qubits(n);
    if (amps_.size() != (Eigen::Index{1} << n)) {
        throw ValidationError("StateVector: amplitude count is not 2^n");
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-10) {
        throw ValidationError("StateVector: amplitudes are not normalized");
    }
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    s.amps_[0] = 0.0;
    s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

StateVector StateVector::normalized(std::size_t n, CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ValidationError("StateVector::normalized: zero or non-finite vector");
    }
    amplitudes /= norm;
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::tensor(const StateVector &tail) const {
    const Eigen::Index db = tail.amps_.size();
    CVector out(amps_.size() * db);
    for (Eigen::Index a = 0; a < amps_.size(); ++a) {
        out.segment(a * db, db) = amps_[a] * tail.amps_;
    }
    return StateVector::normalized(n_ + tail.n_, std::move(out));
}

StateVector StateVector::evolve(const CMatrix &u) const {
    if (u.rows() != amps_.size() || u.cols() != amps_.size()) {
        throw ValidationError("StateVector::evolve: operator dimension mismatch");
    }
    return StateVector::normalized(n_, u * amps_);
}

double prob_trailing_zeros(const StateVector &psi, std::size_t first) {
    const std::size_t n = psi.num_qubits();
    if (first > n) {
        throw ValidationError("prob_trailing_zeros: qubit index out of range");
    }
    const std::uint64_t low_mask = (std::uint64_t{1} << (n - first)) - 1;
    double p = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if ((i & low_mask) == 0) {
            p += std::norm(psi[i]);
        }
    }
    return p;
}

StateVector haar_state(std::size_t n, Rng &rng) {
    check_state_qubits(n);
    return StateVector::normalized(n, gaussian_vector(std::size_t{1} << n, rng));
}

CMatrix haar_unitary(std::size_t dim, Rng &rng) {
    if (dim == 0 || dim > limits::kMaxOperatorDim) {
        throw ValidationError("haar_unitary: dimension out of range");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix g(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        g.col(c) = gaussian_vector(dim, rng);
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix &r = qr.matrixQR();
    for (Eigen::Index i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= mag > 0.0 ? rii / mag : Complex(1.0);
    }
    return q;
}

bool is_unitary(const CMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const CMatrix &a, double tol) {
    return a.rows() == a.cols() && (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix tensor_power(const CMatrix &a, std::size_t k) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (std::size_t i = 0; i < k; ++i) {
        out = kron(out, a);
    }
    return out;
}

double trace_norm_hermitian(const CMatrix &a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw ConsistencyError("trace_norm_hermitian: eigensolver failed");
    }
    return es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const CMatrix &a, const CMatrix &b) {
    return 0.5 * trace_norm_hermitian(a - b);
}

std::uint64_t dense_mask(const f2::BinVec &bits) {
    const std::size_t n = bits.size();
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (bits.get(q)) {
            m |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return m;
}

std::uint64_t pauli_index(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    return p.x().to_mask() | (p.z().to_mask() << n);
}

PauliString pauli_from_index(std::size_t n, std::uint64_t index) {
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    return PauliString::hermitian(f2::BinVec::from_mask(index & low, n),
                                  f2::BinVec::from_mask((index >> n) & low, n));
}

namespace {

Complex phase_factor(unsigned phase) {
    static const Complex table[4] = {Complex(1, 0), Complex(0, 1),
                                     Complex(-1, 0), Complex(0, -1)};
    return table[phase & 3u];
}

} // namespace

CVector apply_pauli(const PauliString &p, const CVector &v) {
    const std::size_t n = p.num_qubits();
    if (v.size() != (Eigen::Index{1} << n)) {
        throw ValidationError("apply_pauli: vector dimension mismatch");
    }
    const std::uint64_t xm = dense_mask(p.x());
    const std::uint64_t zm = dense_mask(p.z());
    const Complex global = phase_factor(p.phase());
    CVector out(v.size());
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
        const bool neg = std::popcount(zm & b) & 1;
        out[static_cast<Eigen::Index>(b ^ xm)] = (neg ? -global : global) * v[b];
    }
    return out;
}

CMatrix pauli_matrix(const PauliString &p) {
    const auto d = Eigen::Index{1} << p.num_qubits();
    CMatrix out(d, d);
    const CMatrix id = CMatrix::Identity(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        out.col(c) = apply_pauli(p, id.col(c));
    }
    return out;
}

double expectation(const StateVector &psi, const PauliString &p) {
    if (p.num_qubits() != psi.num_qubits()) {
        throw ValidationError("expectation: qubit count mismatch");
    }
    return psi.amplitudes().dot(apply_pauli(p, psi.amplitudes())).real();
}

std::vector<double> pauli_expectations(const StateVector &psi) {
    const std::size_t n = psi.num_qubits();
    if (2 * n > 16) {
        throw ValidationError("pauli_expectations: 4^n table too large");
    }
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<double> out(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        out[idx] = expectation(psi, pauli_from_index(n, idx));
    }
    return out;
}

std::vector<double> pauli_distribution(const StateVector &psi) {
    auto table = pauli_expectations(psi);
    const double d = static_cast<double>(psi.dim());
    for (auto &v : table) {
        v = v * v / d;
    }
    return table;
}

namespace {

void walsh_hadamard(std::vector<double> &a) {
    const std::size_t n = a.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double u = a[j];
                const double v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

} // namespace

std::vector<double> xor_convolve(const std::vector<double> &f,
                                 const std::vector<double> &g) {
    if (f.size() != g.size() || !std::has_single_bit(f.size())) {
        throw ValidationError("xor_convolve: sizes must match and be powers of two");
    }
    auto a = f;
    auto b = g;
    walsh_hadamard(a);
    walsh_hadamard(b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] *= b[i];
    }
    walsh_hadamard(a);
    const double scale = 1.0 / static_cast<double>(a.size());
    for (auto &v : a) {
        v = std::max(0.0, v * scale);
    }
    return a;
}

std::vector<double> bell_distribution_measured(const StateVector &psi) {
    const std::size_t n = psi.num_qubits();
    if (2 * n > limits::kMaxStateQubits) {
        throw ValidationError("bell_distribution_measured: psi (x) psi exceeds dense limit");
    }
    const std::size_t total = 2 * n;
    CVector amps = psi.tensor(psi).amplitudes();
    const auto dim = static_cast<std::uint64_t>(amps.size());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t a_bit = std::uint64_t{1} << (total - 1 - q);
        const std::uint64_t b_bit = std::uint64_t{1} << (n - 1 - q);
        // CNOT A_q -> B_q
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & a_bit) && !(i & b_bit)) {
                std::swap(amps[i], amps[i | b_bit]);
            }
        }
        // H on A_q
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (!(i & a_bit)) {
                const Complex u = amps[i];
                const Complex v = amps[i | a_bit];
                amps[i] = (u + v) * inv_sqrt2;
                amps[i | a_bit] = (u - v) * inv_sqrt2;
            }
        }
    }
    // Outcome (a_q, b_q) on pair q labels the Pauli with x_q = b_q, z_q = a_q.
    std::vector<double> table(dim, 0.0);
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t x = 0;
        std::uint64_t z = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (i & (std::uint64_t{1} << (total - 1 - q))) {
                z |= std::uint64_t{1} << q;
            }
            if (i & (std::uint64_t{1} << (n - 1 - q))) {
                x |= std::uint64_t{1} << q;
            }
        }
        table[x | (z << n)] += std::norm(amps[static_cast<Eigen::Index>(i)]);
    }
    return table;
}

std::vector<double> bell_distribution_overlap(const StateVector &psi) {
    const std::size_t n = psi.num_qubits();
    const std::size_t count = std::size_t{1} << (2 * n);
    const double d = static_cast<double>(psi.dim());
    const CVector &v = psi.amplitudes();
    std::vector<double> table(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const CVector pv = apply_pauli(pauli_from_index(n, idx), v);
        // <P| psi psi> = d^{-1/2} sum_i psi_i (P^dag psi)_i, P Hermitian
        const Complex overlap = (v.array() * pv.array()).sum();
        table[idx] = std::norm(overlap) / d;
    }
    return table;
}

BellDifferenceSampler::BellDifferenceSampler(const StateVector &psi, BellPath path)
    : n_(psi.num_qubits()), path_(path) {
    const auto table = path == BellPath::Measurement
                           ? bell_distribution_measured(psi)
                           : xor_convolve(pauli_distribution(psi),
                                          pauli_distribution(psi));
    dist_ = std::discrete_distribution<std::uint64_t>(table.begin(), table.end());
}

std::uint64_t BellDifferenceSampler::sample_index(Rng &rng) {
    if (path_ == BellPath::Measurement) {
        const std::uint64_t first = dist_(rng);
        const std::uint64_t second = dist_(rng);
        return first ^ second;
    }
    return dist_(rng);
}

PauliString BellDifferenceSampler::sample(Rng &rng) {
    return pauli_from_index(n_, sample_index(rng));
}

PauliString bell_difference_sample(const StateVector &psi, Rng &rng, BellPath path) {
    BellDifferenceSampler sampler(psi, path);
    return sampler.sample(rng);
}

CVector adaptive_output_vector(std::size_t n, std::size_t n_ancilla,
                               const CMatrix &u, const std::vector<CMatrix> &queries) {
    const std::size_t total = n + n_ancilla;
    check_state_qubits(total);
    const auto dim = Eigen::Index{1} << total;
    const auto du = Eigen::Index{1} << n;
    const auto da = Eigen::Index{1} << n_ancilla;
    if (u.rows() != du || u.cols() != du) {
        throw ValidationError("adaptive_output_vector: U must act on n qubits");
    }
    CVector state = CVector::Zero(dim);
    state[0] = 1.0;
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    for (const auto &v : queries) {
        if (v.rows() != dim || v.cols() != dim) {
            throw ValidationError("adaptive_output_vector: query must act on n + n' qubits");
        }
        state = v * state;
        Eigen::Map<RowMajor> blocks(state.data(), du, da);
        RowMajor moved = u * blocks;
        blocks = moved;
    }
    return state;
}

CMatrix adaptive_output_state(std::size_t n, std::size_t n_ancilla,
                              const UnitarySampler &sampler,
                              const std::vector<CMatrix> &queries,
                              std::size_t samples, Rng &rng) {
    if (samples == 0) {
        throw ValidationError("adaptive_output_state: need at least one sample");
    }
    if (n + n_ancilla > 8) {
        throw ValidationError("adaptive_output_state: density matrix exceeds the operator limit");
    }
    const auto dim = Eigen::Index{1} << (n + n_ancilla);
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (std::size_t s = 0; s < samples; ++s) {
        const CVector out = adaptive_output_vector(n, n_ancilla, sampler(rng), queries);
        rho.noalias() += out * out.adjoint();
    }
    rho /= static_cast<double>(samples);
    return rho;
}

} // namespace qhomeo

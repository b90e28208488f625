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
#include "qhomeo/commutant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhomeo/errors.hpp"

namespace qhomeo {

f2::BinMat PauliMonomial::v_matrix() const {
    return f2::BinMat::from_columns(span, k);
}

std::string PauliMonomial::label() const {
    std::ostringstream os;
    os << "V=[";
    for (std::size_t j = 0; j < span.size(); ++j) {
        os << (j ? "," : "") << span[j].to_string();
    }
    os << "] M=[";
    for (std::size_t i = 0; i < span.size(); ++i) {
        os << (i ? "," : "") << phases.row(i).to_string();
    }
    os << "]";
    return os.str();
}

bool PauliMonomial::operator==(const PauliMonomial &o) const {
    return k == o.k && span == o.span && phases == o.phases;
}

std::size_t commutant_dimension(std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 0; i + 2 <= k; ++i) {
        out *= (std::size_t{1} << i) + 1;
    }
    return out;
}

namespace {

void check_k(std::size_t k, std::size_t limit, const char *what) {
    if (k == 0 || k > limit) {
        throw ValidationError(std::string(what) + ": k out of range");
    }
}

// RREF bases of m-dimensional subspaces of the even-weight code in F_2^k.
void even_subspaces(std::size_t k, std::size_t m, std::vector<std::vector<f2::BinVec>> &out) {
    std::vector<std::size_t> pivots(m);
    std::iota(pivots.begin(), pivots.end(), 0);
    if (m > k) {
        return;
    }
    while (true) {
        // free positions of row i: non-pivot positions after pivots[i]
        std::vector<std::vector<std::size_t>> frees(m);
        std::size_t total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t c = pivots[i] + 1; c < k; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
                    frees[i].push_back(c);
                }
            }
            total += frees[i].size();
        }
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << total); ++assign) {
            std::vector<f2::BinVec> rows;
            std::size_t bit = 0;
            bool even = true;
            for (std::size_t i = 0; i < m; ++i) {
                f2::BinVec r(k);
                r.set(pivots[i], true);
                for (std::size_t c : frees[i]) {
                    r.set(c, (assign >> bit++) & 1u);
                }
                even = even && r.weight() % 2 == 0;
                rows.push_back(std::move(r));
            }
            if (even) {
                out.push_back(std::move(rows));
            }
        }
        // next combination of pivot positions
        std::size_t i = m;
        while (i > 0 && pivots[i - 1] == k - m + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pivots[i - 1];
        for (std::size_t j = i; j < m; ++j) {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
}

} // namespace

std::vector<PauliMonomial> enumerate_monomials(std::size_t k) {
    check_k(k, kMaxMonomialCopies, "enumerate_monomials");
    std::vector<PauliMonomial> out;
    for (std::size_t m = 0; m < k; ++m) {
        std::vector<std::vector<f2::BinVec>> spaces;
        even_subspaces(k, m, spaces);
        const std::size_t pairs = m == 0 ? 0 : m * (m - 1) / 2;
        for (const auto &space : spaces) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                PauliMonomial mono;
                mono.k = k;
                mono.span = space;
                mono.phases = f2::BinMat(m, m);
                std::size_t bit = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = i + 1; j < m; ++j) {
                        const bool b = (mask >> bit++) & 1u;
                        mono.phases.set(i, j, b);
                        mono.phases.set(j, i, b);
                    }
                }
                out.push_back(std::move(mono));
            }
        }
    }
    if (out.size() != commutant_dimension(k)) {
        throw ConsistencyError("enumerate_monomials: count disagrees with product formula");
    }
    return out;
}

namespace {

// acc += c * i^phase X^x Z^z on `bits` qubits, masks in dense order.
void add_pauli(CMatrix &acc, Complex c, std::uint64_t xm, std::uint64_t zm, unsigned phase) {
    static const Complex ipow[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    const Complex base = c * ipow[phase & 3u];
    const auto dim = static_cast<std::uint64_t>(acc.rows());
    for (std::uint64_t j = 0; j < dim; ++j) {
        const bool odd = std::popcount(zm & j) & 1;
        acc(static_cast<Eigen::Index>(j ^ xm), static_cast<Eigen::Index>(j)) += odd ? -base : base;
    }
}

} // namespace

CMatrix monomial_site_matrix(const PauliMonomial &mono) {
    const std::size_t k = mono.k;
    const std::size_t m = mono.order();
    check_k(k, kMaxMonomialCopies, "monomial_site_matrix");
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << k);
    CMatrix acc = CMatrix::Zero(dim, dim);
    std::vector<PauliString> singles(m);
    std::vector<PauliString> spread(m);
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << (2 * m)); ++word) {
        PauliString prod(k);
        for (std::size_t j = 0; j < m; ++j) {
            const std::uint64_t idx = (word >> (2 * j)) & 3u;
            singles[j] = pauli_from_index(1, idx);
            f2::BinVec x(k);
            f2::BinVec z(k);
            if (idx & 1u) {
                x = mono.span[j];
            }
            if (idx & 2u) {
                z = mono.span[j];
            }
            prod = pauli_mul(prod, PauliString::hermitian(x, z));
        }
        int sign = 1;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (mono.phases.get(i, j)) {
                    sign *= chi(singles[i], singles[j]);
                }
            }
        }
        add_pauli(acc, Complex(sign, 0), dense_mask(prod.x()), dense_mask(prod.z()), prod.phase());
    }
    return acc / static_cast<double>(std::uint64_t{1} << m);
}

CMatrix site_power(const CMatrix &site, std::size_t k, std::size_t n) {
    const std::size_t bits = n * k;
    if (n == 0 || (std::size_t{1} << bits) > limits::kMaxChoiDim) {
        throw ValidationError("site_power: operator too large");
    }
    CMatrix sm = site;
    for (std::size_t q = 1; q < n; ++q) {
        sm = kron(sm, site);
    }
    const std::uint64_t dim = std::uint64_t{1} << bits;
    std::vector<std::uint64_t> map(dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        std::uint64_t c = 0;
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < k; ++r) {
                if ((s >> (bits - 1 - (q * k + r))) & 1u) {
                    c |= std::uint64_t{1} << (bits - 1 - (r * n + q));
                }
            }
        }
        map[s] = c;
    }
    CMatrix out(sm.rows(), sm.cols());
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            out(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j])) =
                sm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

CMatrix monomial_matrix(const PauliMonomial &mono, std::size_t n) {
    return site_power(monomial_site_matrix(mono), mono.k, n);
}

namespace {

int integer_log2(double value, const char *what) {
    if (!(value > 0.0)) {
        throw ConsistencyError(std::string(what) + ": non-positive value");
    }
    const double e = std::log2(value);
    const double r = std::round(e);
    if (std::abs(e - r) > 1e-6) {
        throw ConsistencyError(std::string(what) + ": exponent is not an integer");
    }
    return static_cast<int>(r);
}

} // namespace

int site_alpha(const CMatrix &a, const CMatrix &b, std::size_t k) {
    const Complex tr = (a.conjugate().cwiseProduct(b)).sum();
    if (std::abs(tr.imag()) > 1e-6) {
        throw ConsistencyError("alpha: complex inner product");
    }
    return static_cast<int>(k) - integer_log2(tr.real(), "alpha");
}

int alpha(const PauliMonomial &a, const PauliMonomial &b) {
    if (a.k != b.k) {
        throw ValidationError("alpha: copy counts differ");
    }
    return site_alpha(monomial_site_matrix(a), monomial_site_matrix(b), a.k);
}

int trace_norm_exponent(const PauliMonomial &mono) {
    const CMatrix w = monomial_site_matrix(mono);
    Eigen::JacobiSVD<CMatrix> svd(w);
    return static_cast<int>(mono.k) - integer_log2(svd.singularValues().sum(), "trace_norm_exponent");
}

// --- permutations -------------------------------------------------------

std::vector<Permutation> all_permutations(std::size_t k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::size_t cycle_count(const Permutation &p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
        }
    }
    return cycles;
}

Permutation compose_perm(const Permutation &a, const Permutation &b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = a[b[i]];
    }
    return out;
}

Permutation inverse_perm(const Permutation &p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[p[i]] = i;
    }
    return out;
}

CMatrix permutation_operator(const Permutation &pi, std::size_t d) {
    const std::size_t k = pi.size();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < k; ++i) {
        dim *= d;
    }
    if (dim > limits::kMaxChoiDim) {
        throw ValidationError("permutation_operator: dimension over limit");
    }
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<std::size_t> digits(k);
    std::vector<std::size_t> moved(k);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rest = idx;
        for (std::size_t r = k; r-- > 0;) {
            digits[r] = rest % d;
            rest /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            moved[pi[r]] = digits[r];
        }
        std::size_t target = 0;
        for (std::size_t r = 0; r < k; ++r) {
            target = target * d + moved[r];
        }
        out(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(idx)) = 1.0;
    }
    return out;
}

// --- Gram and Weingarten ------------------------------------------------

RMatrix symmetric_pinv(const RMatrix &g, bool &pseudo, double &min_sv) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(g);
    const RVector &ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    RVector inv(ev.size());
    pseudo = false;
    min_sv = ev.size() ? ev.cwiseAbs().minCoeff() : 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i]) <= kPseudoTolerance * top) {
            inv[i] = 0.0;
            pseudo = true;
        } else {
            inv[i] = 1.0 / ev[i];
        }
    }
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

WeingartenTable rescale_table(const WeingartenTable &base, std::size_t n) {
    WeingartenTable t;
    t.k = base.k;
    t.n = n;
    t.monomials = base.monomials;
    t.alpha = base.alpha;
    const auto size = static_cast<Eigen::Index>(t.monomials.size());
    t.gram = RMatrix(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        for (Eigen::Index b = 0; b < size; ++b) {
            t.gram(a, b) = std::exp2(-static_cast<double>(n) * t.alpha[a][b]);
        }
    }
    t.weingarten = symmetric_pinv(t.gram, t.pseudo, t.min_singular_value);
    return t;
}

WeingartenTable gram_matrix(std::size_t k, std::size_t n) {
    check_k(k, 5, "gram_matrix");
    if (n == 0) {
        throw ValidationError("gram_matrix: n must be positive");
    }
    WeingartenTable t;
    t.k = k;
    t.n = n;
    t.monomials = enumerate_monomials(k);
    std::vector<CMatrix> sites;
    for (const auto &m : t.monomials) {
        sites.push_back(monomial_site_matrix(m));
    }
    const std::size_t size = sites.size();
    t.alpha.assign(size, std::vector<int>(size, 0));
    t.gram = RMatrix(size, size);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a; b < size; ++b) {
            const int al = site_alpha(sites[a], sites[b], k);
            t.alpha[a][b] = t.alpha[b][a] = al;
            t.gram(a, b) = t.gram(b, a) = std::exp2(-static_cast<double>(n) * al);
        }
    }
    return t;
}

WeingartenTable weingarten_table(std::size_t k, std::size_t n) {
    auto t = gram_matrix(k, n);
    t.weingarten = symmetric_pinv(t.gram, t.pseudo, t.min_singular_value);
    return t;
}

CMatrix partial_overlap(const CMatrix &a, const CMatrix &o, std::size_t ancilla_dim) {
    const Eigen::Index ds = a.rows();
    const auto da = static_cast<Eigen::Index>(ancilla_dim);
    if (a.cols() != ds || o.rows() != ds * da || o.cols() != ds * da) {
        throw ValidationError("partial_overlap: dimension mismatch");
    }
    CMatrix out = CMatrix::Zero(da, da);
    for (Eigen::Index j = 0; j < ds; ++j) {
        for (Eigen::Index i = 0; i < ds; ++i) {
            const Complex c = std::conj(a(j, i));
            if (c != Complex(0.0)) {
                out += c * o.block(j * da, i * da, da, da);
            }
        }
    }
    return out;
}

namespace {

void check_twirl_input(const CMatrix &o, std::size_t sys_dim, std::size_t ancilla_dim) {
    if (ancilla_dim == 0 || sys_dim * ancilla_dim > limits::kMaxChoiDim) {
        throw ValidationError("twirl: dimension over limit");
    }
    const auto dim = static_cast<Eigen::Index>(sys_dim * ancilla_dim);
    if (o.rows() != dim || o.cols() != dim) {
        throw ValidationError("twirl: operator has the wrong dimension");
    }
}

// sum_a basis[a] (x) (sum_b coeff(a, b) overlap_b)
CMatrix recombine(const std::vector<CMatrix> &basis, const RMatrix &coeff,
                  const std::vector<CMatrix> &overlaps) {
    const Eigen::Index ds = basis.front().rows();
    const Eigen::Index da = overlaps.front().rows();
    CMatrix out = CMatrix::Zero(ds * da, ds * da);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        CMatrix c = CMatrix::Zero(da, da);
        for (std::size_t b = 0; b < overlaps.size(); ++b) {
            const double w = coeff(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            if (w != 0.0) {
                c += w * overlaps[b];
            }
        }
        out += kron(basis[a], c);
    }
    return out;
}

} // namespace

CMatrix clifford_twirl(const CMatrix &o, const WeingartenTable &table, std::size_t ancilla_dim) {
    const std::size_t sys_dim = std::size_t{1} << (table.n * table.k);
    check_twirl_input(o, sys_dim, ancilla_dim);
    if (table.weingarten.rows() != static_cast<Eigen::Index>(table.monomials.size())) {
        throw ValidationError("clifford_twirl: table has no Weingarten matrix");
    }
    std::vector<CMatrix> basis;
    std::vector<CMatrix> overlaps;
    for (const auto &m : table.monomials) {
        basis.push_back(monomial_matrix(m, table.n));
        overlaps.push_back(partial_overlap(basis.back(), o, ancilla_dim));
    }
    return recombine(basis, table.weingarten, overlaps) / static_cast<double>(sys_dim);
}

CMatrix clifford_twirl(const CMatrix &o, std::size_t k, std::size_t n) {
    return clifford_twirl(o, weingarten_table(k, n));
}

RMatrix haar_gram(std::size_t k, std::size_t d) {
    const auto perms = all_permutations(k);
    const auto size = static_cast<Eigen::Index>(perms.size());
    RMatrix out(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        for (Eigen::Index b = 0; b < size; ++b) {
            const auto c = cycle_count(compose_perm(perms[a], inverse_perm(perms[b])));
            out(a, b) = std::pow(static_cast<double>(d), static_cast<double>(c));
        }
    }
    return out;
}

namespace {

std::size_t haar_sys_dim(std::size_t k, std::size_t d) {
    if (k == 0 || k > 4 || d == 0) {
        throw ValidationError("haar_twirl: k must be in 1..4");
    }
    std::size_t dim = 1;
    for (std::size_t i = 0; i < k; ++i) {
        dim *= d;
    }
    return dim;
}

} // namespace

CMatrix haar_twirl(const CMatrix &o, std::size_t k, std::size_t d, std::size_t ancilla_dim) {
    const std::size_t sys_dim = haar_sys_dim(k, d);
    check_twirl_input(o, sys_dim, ancilla_dim);
    bool pseudo = false;
    double min_sv = 0.0;
    const RMatrix wg = symmetric_pinv(haar_gram(k, d), pseudo, min_sv);
    std::vector<CMatrix> basis;
    std::vector<CMatrix> overlaps;
    for (const auto &p : all_permutations(k)) {
        basis.push_back(permutation_operator(p, d));
        overlaps.push_back(partial_overlap(basis.back(), o, ancilla_dim));
    }
    return recombine(basis, wg, overlaps);
}

CMatrix approx_haar_twirl(const CMatrix &o, std::size_t k, std::size_t d, std::size_t ancilla_dim) {
    const std::size_t sys_dim = haar_sys_dim(k, d);
    check_twirl_input(o, sys_dim, ancilla_dim);
    const auto perms = all_permutations(k);
    const auto size = static_cast<Eigen::Index>(perms.size());
    const RMatrix diag = RMatrix::Identity(size, size) / static_cast<double>(sys_dim);
    std::vector<CMatrix> basis;
    std::vector<CMatrix> overlaps;
    for (const auto &p : perms) {
        basis.push_back(permutation_operator(p, d));
        overlaps.push_back(partial_overlap(basis.back(), o, ancilla_dim));
    }
    return recombine(basis, diag, overlaps);
}

// --- Vandermonde bound --------------------------------------------------

VandermondeReport vandermonde_bound_check(std::size_t k) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (k == 0 || k > kMaxVandermonde) {
        throw ValidationError("vandermonde_bound_check: k must be in 1..16");
    }
    std::vector<std::vector<cpp_rational>> a(k, std::vector<cpp_rational>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = cpp_rational(cpp_int(1), cpp_int(1) << ((i + 1) * (j + 1)));
        }
        a[i][k + i] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == k) {
            throw ConsistencyError("vandermonde_bound_check: singular matrix");
        }
        std::swap(a[piv], a[col]);
        const cpp_rational inv = 1 / a[col][col];
        for (auto &x : a[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            const cpp_rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * k; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    VandermondeReport rep;
    rep.k = k;
    rep.all_satisfied = true;
    for (std::size_t i = 1; i <= k; ++i) {
        cpp_rational sum = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const cpp_rational &v = a[i - 1][k + j];
            sum += v < 0 ? cpp_rational(-v) : v;
        }
        const cpp_rational bound = cpp_rational(cpp_int(30) << (k * i - i * (i - 1) / 2));
        rep.all_satisfied = rep.all_satisfied && sum <= bound;
        rep.row_sums.push_back(static_cast<double>(sum));
        rep.bounds.push_back(static_cast<double>(bound));
        rep.max_ratio = std::max(rep.max_ratio, static_cast<double>(cpp_rational(sum / bound)));
    }
    return rep;
}

} // namespace qhomeo

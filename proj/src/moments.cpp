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
#include "qhomeo/moments.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "qhomeo/commutant.hpp"
#include "qhomeo/errors.hpp"

namespace qhomeo {

namespace {

constexpr std::size_t kChunk = 64;

using BlockFn = std::function<void(const CMatrix &)>;

// Chunk c of a sampled Choi state draws from substream(seed, c), so the same
// samples can be replayed after the sign operator is known.
void for_each_block(const EnsembleSampler &sampler, std::size_t k, std::size_t samples,
                    std::uint64_t seed, const BlockFn &fn) {
    const std::size_t sys = std::size_t{1} << (sampler.spec().n * k);
    CMatrix block(static_cast<Eigen::Index>(sys * sys), static_cast<Eigen::Index>(kChunk));
    for (std::size_t done = 0, chunk = 0; done < samples; ++chunk) {
        Rng rng = substream(seed, chunk);
        const std::size_t take = std::min(kChunk, samples - done);
        for (std::size_t c = 0; c < take; ++c) {
            block.col(static_cast<Eigen::Index>(c)) = choi_vector(sampler.sample(rng), k);
        }
        fn(block.leftCols(static_cast<Eigen::Index>(take)));
        done += take;
    }
}

CMatrix sampled_choi(const EnsembleSampler &sampler, std::size_t k, std::size_t samples, std::uint64_t seed) {
    const std::size_t sys = std::size_t{1} << (sampler.spec().n * k);
    const auto dim = static_cast<Eigen::Index>(sys * sys);
    CMatrix acc = CMatrix::Zero(dim, dim);
    for_each_block(sampler, k, samples, seed,
                   [&](const CMatrix &b) { acc.selfadjointView<Eigen::Lower>().rankUpdate(b); });
    CMatrix out = acc.selfadjointView<Eigen::Lower>();
    return out / static_cast<double>(samples);
}

// v^dag S v for every column v.
void influences(const CMatrix &sign, const CMatrix &block, std::vector<double> &out) {
    const CMatrix sv = sign * block;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
        out.push_back(block.col(c).dot(sv.col(c)).real());
    }
}

// Sign operator of a Hermitian difference and half its trace norm.
CMatrix sign_operator(const CMatrix &delta, double &half_norm) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(delta);
    const RVector &ev = es.eigenvalues();
    RVector s(ev.size());
    half_norm = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        s[i] = ev[i] >= 0.0 ? 1.0 : -1.0;
        half_norm += std::abs(ev[i]);
    }
    half_norm /= 2.0;
    return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

double mean_of(const std::vector<double> &v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Bootstrap standard error of (mean a - mean b) / 2; an empty side is exact.
double bootstrap_stderr(const std::vector<double> &a, const std::vector<double> &b, std::size_t reps,
                        std::uint64_t seed) {
    if (reps < 2) {
        return 0.0;
    }
    Rng rng = substream(seed, 0);
    std::vector<double> stats;
    stats.reserve(reps);
    auto resampled_mean = [&](const std::vector<double> &v) {
        if (v.empty()) {
            return 0.0;
        }
        std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += v[pick(rng)];
        }
        return s / static_cast<double>(v.size());
    };
    for (std::size_t r = 0; r < reps; ++r) {
        const double ma = resampled_mean(a);
        const double mb = resampled_mean(b);
        stats.push_back(0.5 * (ma - mb));
    }
    const double m = mean_of(stats);
    double var = 0.0;
    for (double s : stats) {
        var += (s - m) * (s - m);
    }
    return std::sqrt(var / static_cast<double>(reps - 1));
}

void check_choi_size(const EnsembleSpec &a, const EnsembleSpec &b, std::size_t k) {
    if (a.n != b.n) {
        throw ValidationError("choi_trace_distance: specs act on different qubit counts");
    }
    if (k == 0 || a.n * k > 6) {
        throw ValidationError("choi_trace_distance: d^{2k} exceeds the dense Choi limit");
    }
}

} // namespace

DistanceEstimate choi_trace_distance(const EnsembleSpec &a, const EnsembleSpec &b, std::size_t k,
                                     std::size_t samples, Rng &rng, const DistanceOptions &opts) {
    check_choi_size(a, b, k);
    if (samples < 2) {
        throw ValidationError("choi_trace_distance: need at least 2 samples");
    }
    const std::uint64_t seed_a = rng();
    const std::uint64_t seed_b = rng();
    const std::uint64_t seed_boot = rng();
    const EnsembleSampler sa(a);
    const CMatrix ja = sampled_choi(sa, k, samples, seed_a);
    std::optional<EnsembleSampler> sb;
    CMatrix jb;
    if (opts.exact_b) {
        jb = exact_moment_choi(b, k);
    } else {
        sb.emplace(b);
        jb = sampled_choi(*sb, k, samples, seed_b);
    }
    DistanceEstimate est;
    est.samples = samples;
    const CMatrix sign = sign_operator(ja - jb, est.distance);
    std::vector<double> ia;
    std::vector<double> ib;
    for_each_block(sa, k, samples, seed_a, [&](const CMatrix &blk) { influences(sign, blk, ia); });
    if (sb) {
        for_each_block(*sb, k, samples, seed_b, [&](const CMatrix &blk) { influences(sign, blk, ib); });
    }
    est.stderr_ = bootstrap_stderr(ia, ib, opts.bootstrap, seed_boot);
    return est;
}

DecayResult decay_experiment(std::size_t n, std::size_t k, const std::vector<std::size_t> &t_list,
                             std::size_t samples, Rng &rng, std::size_t bootstrap) {
    if (t_list.empty()) {
        throw ValidationError("decay_experiment: empty t list");
    }
    const auto haar = EnsembleSpec::haar(n);
    DistanceOptions opts;
    opts.bootstrap = bootstrap;
    opts.exact_b = true;
    DecayResult res;
    res.n = n;
    res.k = k;
    res.samples = samples;
    const auto null = choi_trace_distance(haar, haar, k, samples, rng, opts);
    res.null_distance = null.distance;
    res.null_stderr = null.stderr_;
    res.floor = null.distance + 3.0 * null.stderr_;
    for (std::size_t t : t_list) {
        const auto spec = EnsembleSpec::homeopathy(n, t, EnsembleSpec::haar(t));
        const auto est = choi_trace_distance(spec, haar, k, samples, rng, opts);
        DecayRow row;
        row.t = t;
        row.distance = est.distance;
        row.stderr_ = est.stderr_;
        row.bound = 47.0 * std::exp2(2.0 * static_cast<double>(k) - static_cast<double>(t));
        row.above_floor = est.distance > res.floor;
        res.rows.push_back(row);
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t j = 0; j < res.rows.size(); ++j) {
        const auto &rj = res.rows[j];
        res.within_bound = res.within_bound && rj.distance <= rj.bound + 3.0 * rj.stderr_;
        if (!rj.above_floor) {
            continue;
        }
        xs.push_back(static_cast<double>(rj.t));
        ys.push_back(rj.distance);
        for (std::size_t i = 0; i < j; ++i) {
            const auto &ri = res.rows[i];
            if (ri.t < rj.t && rj.distance > ri.distance + 3.0 * std::hypot(ri.stderr_, rj.stderr_)) {
                res.monotone = false;
            }
        }
    }
    res.fit_points = xs.size();
    if (xs.size() >= 2) {
        res.slope = log2_slope(xs, ys);
    }
    return res;
}

DistanceEstimate adaptive_distance(const EnsembleSpec &a, const EnsembleSpec &b, std::size_t n_ancilla,
                                   const std::vector<CMatrix> &queries, std::size_t samples, Rng &rng,
                                   std::size_t bootstrap) {
    if (a.n != b.n) {
        throw ValidationError("adaptive_distance: specs act on different qubit counts");
    }
    if (a.n + n_ancilla > 8) {
        throw ValidationError("adaptive_distance: n + n' must be at most 8");
    }
    if (samples < 2) {
        throw ValidationError("adaptive_distance: need at least 2 samples");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << (a.n + n_ancilla));
    auto outputs = [&](const EnsembleSpec &spec, std::uint64_t seed) {
        const EnsembleSampler sampler(spec);
        Rng r = substream(seed, 0);
        CMatrix vs(dim, static_cast<Eigen::Index>(samples));
        for (std::size_t s = 0; s < samples; ++s) {
            vs.col(static_cast<Eigen::Index>(s)) = adaptive_output_vector(spec.n, n_ancilla, sampler.sample(r), queries);
        }
        return vs;
    };
    const CMatrix va = outputs(a, rng());
    const CMatrix vb = outputs(b, rng());
    const std::uint64_t seed_boot = rng();
    const CMatrix delta = (va * va.adjoint() - vb * vb.adjoint()) / static_cast<double>(samples);
    DistanceEstimate est;
    est.samples = samples;
    const CMatrix sign = sign_operator(delta, est.distance);
    std::vector<double> ia;
    std::vector<double> ib;
    influences(sign, va, ia);
    influences(sign, vb, ib);
    est.stderr_ = bootstrap_stderr(ia, ib, bootstrap, seed_boot);
    return est;
}

double homeopathy_frame_potential(std::size_t n, std::size_t t, std::size_t k) {
    if (k == 0 || k > 5) {
        throw ValidationError("homeopathy_frame_potential: k must be in 1..5");
    }
    if (n == 0 || t > n || n > 30) {
        throw ValidationError("homeopathy_frame_potential: need 0 <= t <= n");
    }
    const auto monos = enumerate_monomials(k);
    const auto size = static_cast<Eigen::Index>(monos.size());
    std::vector<CMatrix> sites;
    for (const auto &m : monos) {
        sites.push_back(monomial_site_matrix(m));
    }
    const double site_norm = std::exp2(static_cast<double>(k));
    // normalized single-site overlaps tr(a^dag b) / 2^k
    auto overlap = [&](const CMatrix &x, const CMatrix &y) { return x.conjugate().cwiseProduct(y).sum() / site_norm; };
    Eigen::MatrixXcd s(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        for (Eigen::Index b = 0; b < size; ++b) {
            s(a, b) = overlap(sites[a], sites[b]);
        }
    }
    const auto nd = static_cast<double>(n);
    RMatrix g(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        for (Eigen::Index b = 0; b < size; ++b) {
            g(a, b) = std::pow(s(a, b).real(), nd);
        }
    }
    bool pseudo = false;
    double min_sv = 0.0;
    const RMatrix gp = symmetric_pinv(g, pseudo, min_sv);
    Eigen::MatrixXcd amat(size, size);
    if (t == 0) {
        amat = g.cast<Complex>();
    } else {
        const auto perms = all_permutations(k);
        const auto np = static_cast<Eigen::Index>(perms.size());
        const auto inner_dim = std::size_t{1} << t;
        const RMatrix lam = haar_gram(k, inner_dim) / std::pow(static_cast<double>(inner_dim), static_cast<double>(k));
        const RMatrix wg = symmetric_pinv(lam, pseudo, min_sv);
        // x(b, sigma) = (tr(omega_b^dag tau_sigma) / 2^k)^t
        Eigen::MatrixXcd x(size, np);
        for (Eigen::Index p = 0; p < np; ++p) {
            const CMatrix tau = permutation_operator(perms[static_cast<std::size_t>(p)], 2);
            for (Eigen::Index b = 0; b < size; ++b) {
                x(b, p) = std::pow(overlap(sites[b], tau), static_cast<double>(t));
            }
        }
        // sum_{sigma, pi} wg(sigma, pi) x(b, sigma) conj(x(c, pi))
        const Eigen::MatrixXcd inner = x * wg.cast<Complex>() * x.adjoint();
        for (Eigen::Index b = 0; b < size; ++b) {
            for (Eigen::Index c = 0; c < size; ++c) {
                amat(b, c) = inner(b, c) * std::pow(s(b, c), static_cast<double>(n - t));
            }
        }
    }
    const Eigen::MatrixXcd r = gp.cast<Complex>() * amat;
    return (r * r).trace().real();
}

std::vector<FrameDecayRow> frame_potential_decay(std::size_t n, std::size_t k,
                                                 const std::vector<std::size_t> &t_list) {
    const double haar = homeopathy_frame_potential(n, n, k);
    std::vector<FrameDecayRow> rows;
    for (std::size_t t : t_list) {
        FrameDecayRow row;
        row.t = t;
        row.frame_potential = homeopathy_frame_potential(n, t, k);
        row.excess = row.frame_potential - haar;
        rows.push_back(row);
    }
    return rows;
}

double log2_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("log2_slope: need at least two points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw ValidationError("log2_slope: values must be positive");
        }
        const double ly = std::log2(y[i]);
        sx += x[i];
        sy += ly;
        sxx += x[i] * x[i];
        sxy += x[i] * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) {
        throw ValidationError("log2_slope: degenerate abscissae");
    }
    return (n * sxy - sx * sy) / den;
}

} // namespace qhomeo

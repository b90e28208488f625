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
#include "qhomeo/ensembles.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qhomeo/commutant.hpp"
#include "qhomeo/errors.hpp"

namespace qhomeo {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxEnsembleQubits = 8;

const char *kind_name(EnsembleSpec::Kind kind) {
    switch (kind) {
    case EnsembleSpec::Kind::Haar:
        return "Haar";
    case EnsembleSpec::Kind::CliffordUniform:
        return "CliffordUniform";
    case EnsembleSpec::Kind::CliffordEnumerated:
        return "CliffordEnumerated";
    case EnsembleSpec::Kind::Homeopathy:
        return "Homeopathy";
    case EnsembleSpec::Kind::FixedList:
        return "FixedList";
    }
    return "?";
}

EnsembleSpec::Kind kind_from_name(const std::string &name) {
    for (auto kind : {EnsembleSpec::Kind::Haar, EnsembleSpec::Kind::CliffordUniform,
                      EnsembleSpec::Kind::CliffordEnumerated, EnsembleSpec::Kind::Homeopathy,
                      EnsembleSpec::Kind::FixedList}) {
        if (name == kind_name(kind)) {
            return kind;
        }
    }
    throw ValidationError("unknown ensemble kind '" + name + "'");
}

json to_tree(const EnsembleSpec &spec) {
    json j;
    j["kind"] = kind_name(spec.kind);
    j["n"] = spec.n;
    if (spec.kind == EnsembleSpec::Kind::Homeopathy) {
        j["t"] = spec.t;
        j["inner"] = to_tree(*spec.inner);
    }
    if (spec.kind == EnsembleSpec::Kind::FixedList) {
        json list = json::array();
        for (const auto &u : spec.unitaries) {
            json rows = json::array();
            for (Eigen::Index r = 0; r < u.rows(); ++r) {
                json row = json::array();
                for (Eigen::Index c = 0; c < u.cols(); ++c) {
                    row.push_back({u(r, c).real(), u(r, c).imag()});
                }
                rows.push_back(row);
            }
            list.push_back(rows);
        }
        j["unitaries"] = list;
    }
    return j;
}

EnsembleSpec from_tree(const json &j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ValidationError("ensemble spec must be an object with a 'kind'");
    }
    const auto kind = kind_from_name(j.at("kind").get<std::string>());
    const auto n = j.value("n", std::size_t{0});
    EnsembleSpec spec;
    switch (kind) {
    case EnsembleSpec::Kind::Haar:
        spec = EnsembleSpec::haar(n);
        break;
    case EnsembleSpec::Kind::CliffordUniform:
        spec = EnsembleSpec::clifford_uniform(n);
        break;
    case EnsembleSpec::Kind::CliffordEnumerated:
        spec = EnsembleSpec::clifford_enumerated(n);
        break;
    case EnsembleSpec::Kind::Homeopathy:
        if (!j.contains("inner")) {
            throw ValidationError("Homeopathy spec needs an 'inner' spec");
        }
        spec = EnsembleSpec::homeopathy(n, j.value("t", std::size_t{0}), from_tree(j.at("inner")));
        break;
    case EnsembleSpec::Kind::FixedList: {
        std::vector<CMatrix> list;
        for (const auto &rows : j.at("unitaries")) {
            const auto dim = static_cast<Eigen::Index>(rows.size());
            CMatrix u(dim, dim);
            for (Eigen::Index r = 0; r < dim; ++r) {
                if (static_cast<Eigen::Index>(rows[r].size()) != dim) {
                    throw ValidationError("FixedList unitary is not square");
                }
                for (Eigen::Index c = 0; c < dim; ++c) {
                    u(r, c) = Complex(rows[r][c].at(0).get<double>(), rows[r][c].at(1).get<double>());
                }
            }
            list.push_back(std::move(u));
        }
        spec = EnsembleSpec::fixed_list(std::move(list));
        if (j.contains("n") && n != spec.n) {
            throw ValidationError("FixedList 'n' disagrees with the matrices");
        }
        break;
    }
    }
    return spec;
}

} // namespace

EnsembleSpec EnsembleSpec::haar(std::size_t n) {
    EnsembleSpec s;
    s.kind = Kind::Haar;
    s.n = n;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::clifford_uniform(std::size_t n) {
    EnsembleSpec s;
    s.kind = Kind::CliffordUniform;
    s.n = n;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::clifford_enumerated(std::size_t n) {
    EnsembleSpec s;
    s.kind = Kind::CliffordEnumerated;
    s.n = n;
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::homeopathy(std::size_t n, std::size_t t, EnsembleSpec inner) {
    EnsembleSpec s;
    s.kind = Kind::Homeopathy;
    s.n = n;
    s.t = t;
    s.inner = std::make_shared<const EnsembleSpec>(std::move(inner));
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::fixed_list(std::vector<CMatrix> unitaries) {
    EnsembleSpec s;
    s.kind = Kind::FixedList;
    if (unitaries.empty()) {
        throw ValidationError("FixedList needs at least one unitary");
    }
    const auto dim = static_cast<std::size_t>(unitaries.front().rows());
    s.n = 0;
    while ((std::size_t{1} << s.n) < dim) {
        ++s.n;
    }
    s.unitaries = std::move(unitaries);
    s.validate();
    return s;
}

void EnsembleSpec::validate() const {
    if (n == 0 || n > kMaxEnsembleQubits) {
        throw ValidationError(std::string(kind_name(kind)) + ": n must be in 1..8");
    }
    switch (kind) {
    case Kind::Haar:
    case Kind::CliffordUniform:
        break;
    case Kind::CliffordEnumerated:
        if (n > 2) {
            throw ValidationError("CliffordEnumerated: n must be at most 2");
        }
        break;
    case Kind::Homeopathy:
        if (t < 1 || t > n) {
            throw ValidationError("Homeopathy: need 1 <= t <= n");
        }
        if (!inner) {
            throw ValidationError("Homeopathy: missing inner spec");
        }
        if (inner->n != t) {
            throw ValidationError("Homeopathy: inner spec must act on exactly t qubits");
        }
        inner->validate();
        break;
    case Kind::FixedList:
        for (const auto &u : unitaries) {
            if (static_cast<std::size_t>(u.rows()) != dim() || u.cols() != u.rows()) {
                throw ValidationError("FixedList: matrices must be 2^n x 2^n");
            }
            if (!is_unitary(u, 1e-10)) {
                throw ValidationError("FixedList: matrix is not unitary");
            }
        }
        break;
    }
}

std::string EnsembleSpec::describe() const {
    std::string s = kind_name(kind);
    switch (kind) {
    case Kind::Homeopathy:
        return s + "(" + std::to_string(n) + "," + std::to_string(t) + "," + inner->describe() + ")";
    case Kind::FixedList:
        return s + "(" + std::to_string(n) + ",x" + std::to_string(unitaries.size()) + ")";
    default:
        return s + "(" + std::to_string(n) + ")";
    }
}

std::string EnsembleSpec::to_json() const { return to_tree(*this).dump(); }

EnsembleSpec EnsembleSpec::from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ValidationError(std::string("ensemble spec: ") + e.what());
    }
    try {
        return from_tree(j);
    } catch (const json::exception &e) {
        throw ValidationError(std::string("ensemble spec: ") + e.what());
    }
}

std::vector<CMatrix> clifford_group_table(std::size_t n) {
    if (n == 0 || n > 2) {
        throw ValidationError("clifford_group_table: n must be 1 or 2");
    }
    std::vector<CMatrix> out;
    for (const auto &c : enumerate_cliffords(n)) {
        out.push_back(clifford_to_matrix(c));
    }
    return out;
}

EnsembleSampler::EnsembleSampler(const EnsembleSpec &spec) : spec_(spec) {
    spec_.validate();
    if (spec_.kind == EnsembleSpec::Kind::CliffordEnumerated) {
        table_ = std::make_shared<const std::vector<CMatrix>>(clifford_group_table(spec_.n));
    } else if (spec_.kind == EnsembleSpec::Kind::Homeopathy) {
        inner_ = std::make_shared<const EnsembleSampler>(*spec_.inner);
    }
}

CMatrix EnsembleSampler::sample(Rng &rng) const {
    switch (spec_.kind) {
    case EnsembleSpec::Kind::Haar:
        return haar_unitary(spec_.dim(), rng);
    case EnsembleSpec::Kind::CliffordUniform:
        return clifford_to_matrix(random_clifford(spec_.n, rng));
    case EnsembleSpec::Kind::CliffordEnumerated: {
        std::uniform_int_distribution<std::size_t> pick(0, table_->size() - 1);
        return (*table_)[pick(rng)];
    }
    case EnsembleSpec::Kind::Homeopathy: {
        const CMatrix c2 = clifford_to_matrix(random_clifford(spec_.n, rng));
        const CMatrix ut = inner_->sample(rng);
        const CMatrix c1 = clifford_to_matrix(random_clifford(spec_.n, rng));
        const auto pad = static_cast<Eigen::Index>(std::size_t{1} << (spec_.n - spec_.t));
        return c1 * kron(ut, CMatrix::Identity(pad, pad)) * c2;
    }
    case EnsembleSpec::Kind::FixedList: {
        if (spec_.unitaries.size() == 1) {
            return spec_.unitaries.front();
        }
        std::uniform_int_distribution<std::size_t> pick(0, spec_.unitaries.size() - 1);
        return spec_.unitaries[pick(rng)];
    }
    }
    throw ConsistencyError("EnsembleSampler: unknown kind");
}

UnitarySampler EnsembleSampler::as_function() const {
    auto self = std::make_shared<const EnsembleSampler>(*this);
    return [self](Rng &rng) { return self->sample(rng); };
}

CMatrix sample(const EnsembleSpec &spec, Rng &rng) { return EnsembleSampler(spec).sample(rng); }

Estimate frame_potential(const UnitarySampler &sampler, std::size_t k, std::size_t samples, Rng &rng) {
    if (samples < 2) {
        throw ValidationError("frame_potential: need at least 2 samples");
    }
    Rng left = substream(rng(), 0);
    Rng right = substream(rng(), 1);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const CMatrix u = sampler(left);
        const CMatrix v = sampler(right);
        const double x = std::pow(std::norm(u.cwiseProduct(v.conjugate()).sum()), static_cast<double>(k));
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double var = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

Estimate frame_potential(const EnsembleSpec &spec, std::size_t k, std::size_t samples, Rng &rng) {
    return frame_potential(EnsembleSampler(spec).as_function(), k, samples, rng);
}

CMatrix max_entangled_density(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    CVector v = CVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(dim));
    }
    return v * v.adjoint();
}

CVector choi_vector(const CMatrix &u, std::size_t k) {
    const CMatrix uk = tensor_power(u, k);
    const CMatrix ut = uk.transpose();
    return Eigen::Map<const CVector>(ut.data(), ut.size()) / std::sqrt(static_cast<double>(uk.rows()));
}

namespace {

std::size_t choi_system_dim(std::size_t n, std::size_t k) {
    if (k == 0 || n * k > 6) {
        throw ValidationError("moment Choi: d^{2k} exceeds the dense Choi limit");
    }
    return std::size_t{1} << (n * k);
}

} // namespace

CMatrix moment_choi(const EnsembleSpec &spec, std::size_t k, std::size_t samples, Rng &rng) {
    const std::size_t sys = choi_system_dim(spec.n, k);
    if (samples == 0) {
        throw ValidationError("moment_choi: need at least one sample");
    }
    const EnsembleSampler sampler(spec);
    const auto dim = static_cast<Eigen::Index>(sys * sys);
    constexpr std::size_t kChunk = 64;
    CMatrix acc = CMatrix::Zero(dim, dim);
    CMatrix block(dim, static_cast<Eigen::Index>(kChunk));
    for (std::size_t done = 0; done < samples;) {
        const std::size_t take = std::min(kChunk, samples - done);
        for (std::size_t c = 0; c < take; ++c) {
            block.col(static_cast<Eigen::Index>(c)) = choi_vector(sampler.sample(rng), k);
        }
        acc.selfadjointView<Eigen::Lower>().rankUpdate(block.leftCols(static_cast<Eigen::Index>(take)));
        done += take;
    }
    CMatrix out = acc.selfadjointView<Eigen::Lower>();
    return out / static_cast<double>(samples);
}

namespace {

EnsembleSpec::Kind effective_kind(const EnsembleSpec &spec, bool &ok) {
    ok = true;
    if (spec.kind != EnsembleSpec::Kind::Homeopathy) {
        return spec.kind;
    }
    const auto inner = spec.inner->kind;
    if (inner == EnsembleSpec::Kind::CliffordUniform || inner == EnsembleSpec::Kind::CliffordEnumerated) {
        return EnsembleSpec::Kind::CliffordUniform;
    }
    if (inner == EnsembleSpec::Kind::Haar && spec.t == spec.n) {
        return EnsembleSpec::Kind::Haar;
    }
    ok = false;
    return spec.kind;
}

} // namespace

bool has_exact_moment_choi(const EnsembleSpec &spec, std::size_t k) {
    bool ok = false;
    const auto kind = effective_kind(spec, ok);
    if (!ok || k == 0 || spec.n * k > 6) {
        return false;
    }
    switch (kind) {
    case EnsembleSpec::Kind::Haar:
        return k <= 4;
    case EnsembleSpec::Kind::CliffordUniform:
        return k <= 5;
    default:
        return true;
    }
}

CMatrix exact_moment_choi(const EnsembleSpec &spec, std::size_t k) {
    if (!has_exact_moment_choi(spec, k)) {
        throw ValidationError("exact_moment_choi: no exact path for " + spec.describe() + " at k=" +
                              std::to_string(k));
    }
    const std::size_t sys = choi_system_dim(spec.n, k);
    bool ok = false;
    switch (effective_kind(spec, ok)) {
    case EnsembleSpec::Kind::Haar:
        return haar_twirl(max_entangled_density(sys), k, spec.dim(), sys);
    case EnsembleSpec::Kind::CliffordUniform:
        return clifford_twirl(max_entangled_density(sys), weingarten_table(k, spec.n), sys);
    default:
        break;
    }
    const std::vector<CMatrix> list =
        spec.kind == EnsembleSpec::Kind::FixedList ? spec.unitaries : clifford_group_table(spec.n);
    const auto dim = static_cast<Eigen::Index>(sys * sys);
    CMatrix acc = CMatrix::Zero(dim, dim);
    for (const auto &u : list) {
        const CVector v = choi_vector(u, k);
        acc.selfadjointView<Eigen::Lower>().rankUpdate(v);
    }
    CMatrix out = acc.selfadjointView<Eigen::Lower>();
    return out / static_cast<double>(list.size());
}

} // namespace qhomeo

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
#include <memory>
#include <string>
#include <vector>

#include "qhomeo/clifford.hpp"
#include "qhomeo/densesim.hpp"

namespace qhomeo {

/// Declarative unitary ensemble on n qubits.
struct EnsembleSpec {
    enum class Kind { Haar, CliffordUniform, CliffordEnumerated, Homeopathy, FixedList };

    Kind kind = Kind::Haar;
    std::size_t n = 1;
    /// Homeopathy only: size of the injected block, 1 <= t <= n.
    std::size_t t = 0;
    std::shared_ptr<const EnsembleSpec> inner;
    /// FixedList only: drawn uniformly.
    std::vector<CMatrix> unitaries;

    static EnsembleSpec haar(std::size_t n);
    static EnsembleSpec clifford_uniform(std::size_t n);
    static EnsembleSpec clifford_enumerated(std::size_t n);
    /// C1 (U_t (x) I) C2 with U_t drawn from `inner` on the first t qubits.
    static EnsembleSpec homeopathy(std::size_t n, std::size_t t, EnsembleSpec inner);
    static EnsembleSpec fixed_list(std::vector<CMatrix> unitaries);

    /// Throws ValidationError on an inconsistent tree.
    void validate() const;
    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << n; }
    /// e.g. "Homeopathy(5,2,Haar(2))".
    [[nodiscard]] std::string describe() const;
    /// Human-readable JSON tree; FixedList entries are [re, im] matrices.
    [[nodiscard]] std::string to_json() const;
    static EnsembleSpec from_json(const std::string &text);
};

/// Draws dense unitaries from a spec; tables (enumerated groups) are built
/// once at construction.
class EnsembleSampler {
  public:
    explicit EnsembleSampler(const EnsembleSpec &spec);

    CMatrix sample(Rng &rng) const;
    [[nodiscard]] const EnsembleSpec &spec() const { return spec_; }
    [[nodiscard]] UnitarySampler as_function() const;

  private:
    EnsembleSpec spec_;
    std::shared_ptr<const std::vector<CMatrix>> table_;
    std::shared_ptr<const EnsembleSampler> inner_;
};

CMatrix sample(const EnsembleSpec &spec, Rng &rng);

/// Matrices of every element of the enumerated n-qubit Clifford group (n <= 2).
std::vector<CMatrix> clifford_group_table(std::size_t n);

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::size_t samples = 0;
};

/// E |tr(U^dag V)|^{2k} with U and V from two independent streams derived
/// from rng.
Estimate frame_potential(const UnitarySampler &sampler, std::size_t k, std::size_t samples, Rng &rng);
Estimate frame_potential(const EnsembleSpec &spec, std::size_t k, std::size_t samples, Rng &rng);

/// |Phi+> on the system of dimension d^k paired with a same-size ancilla, as a
/// density matrix (system first).
CMatrix max_entangled_density(std::size_t dim);

/// Row-major vec(U^{(x) k}) / sqrt(d^k), i.e. (U^{(x) k} (x) I)|Phi+>.
CVector choi_vector(const CMatrix &u, std::size_t k);

/// Monte Carlo Choi state of the k-fold channel of spec.
CMatrix moment_choi(const EnsembleSpec &spec, std::size_t k, std::size_t samples, Rng &rng);

/// True when exact_moment_choi supports the spec.
bool has_exact_moment_choi(const EnsembleSpec &spec, std::size_t k);
/// Exact Choi state: Weingarten twirls for Haar and uniform Clifford (and
/// Homeopathy reducing to them), full averages for finite ensembles.
CMatrix exact_moment_choi(const EnsembleSpec &spec, std::size_t k);

} // namespace qhomeo

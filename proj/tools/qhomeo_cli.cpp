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
// qhomeo: experiment driver. Every subcommand writes CSV and a JSON manifest
// to the output directory and prints one summary line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "qhomeo/attack.hpp"
#include "qhomeo/commutant.hpp"
#include "qhomeo/ensembles.hpp"
#include "qhomeo/errors.hpp"
#include "qhomeo/moments.hpp"
#include "qhomeo/version.hpp"
#include "qhomeo/weingarten_archive.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qhomeo;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitConsistency = 3;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Common {
    std::string out;
    std::uint64_t seed = 0;
};

fs::path out_dir(const Common &c) {
    std::string dir = c.out;
    if (dir.empty()) {
        const char *env = std::getenv("QHOMEO_OUT_DIR");
        dir = env && *env ? env : "qhomeo_out";
    }
    fs::create_directories(dir);
    return dir;
}

// CSV with a deterministic '#' header: identical flags and seed give identical bytes.
class Csv {
  public:
    Csv(const fs::path &path, const std::string &subcommand, const json &params) : os_(path) {
        if (!os_) {
            throw ValidationError("cannot write " + path.string());
        }
        os_ << "# qhomeo " << kVersion << " schema_version " << kSchemaVersion << " " << subcommand << "\n";
        os_ << "# params " << params.dump() << "\n";
    }
    void row(const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os_ << (i ? "," : "") << cells[i];
        }
        os_ << "\n";
    }

  private:
    std::ofstream os_;
};

void write_manifest(const fs::path &path, const std::string &subcommand, const json &params, const json &results,
                    double wall_seconds) {
    json m;
    m["schema_version"] = kSchemaVersion;
    m["tool"] = "qhomeo";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["params"] = params;
    m["results"] = results;
    m["wall_time_seconds"] = wall_seconds;
    m["environment"] = {{"compiler", __VERSION__},
                        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                                      "." + std::to_string(EIGEN_MINOR_VERSION)},
                        {"cplusplus", __cplusplus}};
    std::ofstream os(path);
    if (!os) {
        throw ValidationError("cannot write " + path.string());
    }
    os << m.dump(2) << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// "1..5", "1,3,5" or a single value.
std::vector<std::size_t> parse_range(const std::string &text) {
    std::vector<std::size_t> out;
    auto to_size = [&](const std::string &s) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception &) {
            throw ValidationError("bad range '" + text + "'");
        }
        if (pos != s.size()) {
            throw ValidationError("bad range '" + text + "'");
        }
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::size_t lo = to_size(text.substr(0, dots));
        const std::size_t hi = to_size(text.substr(dots + 2));
        if (lo > hi) {
            throw ValidationError("empty range '" + text + "'");
        }
        for (std::size_t t = lo; t <= hi; ++t) {
            out.push_back(t);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(to_size(item));
    }
    if (out.empty()) {
        throw ValidationError("empty range '" + text + "'");
    }
    return out;
}

struct SpecArgs {
    std::string spec;
    std::string ensemble;
    std::size_t n = 0;
    std::size_t t = 0;
};

// --spec takes JSON text or @file; otherwise --ensemble with --n (and --t).
EnsembleSpec resolve_spec(const SpecArgs &a) {
    if (!a.spec.empty()) {
        std::string text = a.spec;
        if (text.front() == '@') {
            std::ifstream is(text.substr(1));
            if (!is) {
                throw ValidationError("cannot read spec file " + text.substr(1));
            }
            text.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
        }
        return EnsembleSpec::from_json(text);
    }
    if (a.ensemble == "haar") {
        return EnsembleSpec::haar(a.n);
    }
    if (a.ensemble == "clifford") {
        return EnsembleSpec::clifford_uniform(a.n);
    }
    if (a.ensemble == "clifford-enumerated") {
        return EnsembleSpec::clifford_enumerated(a.n);
    }
    if (a.ensemble == "homeopathy") {
        return EnsembleSpec::homeopathy(a.n, a.t, EnsembleSpec::haar(a.t));
    }
    throw ValidationError("need --spec or --ensemble {haar,clifford,clifford-enumerated,homeopathy}");
}

// --- subcommands ---------------------------------------------------------

struct CommutantArgs {
    std::size_t k = 0;
    std::size_t n = 0;
};

int run_commutant(const CommutantArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    const auto table = weingarten_table(a.k, a.n);
    const fs::path dir = out_dir(c);
    const std::string stem = "commutant_k" + std::to_string(a.k) + "_n" + std::to_string(a.n);
    const json params = {{"k", a.k}, {"n", a.n}};
    Csv csv(dir / (stem + ".csv"), "commutant", params);
    csv.row({"index", "m", "m_p", "label", "alpha_to_identity"});
    for (std::size_t i = 0; i < table.monomials.size(); ++i) {
        const auto &m = table.monomials[i];
        csv.row({std::to_string(i), std::to_string(m.order()), std::to_string(trace_norm_exponent(m)),
                 "\"" + m.label() + "\"", std::to_string(table.alpha[0][i])});
    }
    save_weingarten_archive((dir / (stem + ".wgt")).string(), table);
    const json results = {{"monomials", table.monomials.size()},
                          {"pseudo_inverse", table.pseudo},
                          {"min_singular_value", table.min_singular_value},
                          {"archive", stem + ".wgt"}};
    write_manifest(dir / (stem + ".json"), "commutant", params, results, seconds_since(start));
    std::cout << "commutant k=" << a.k << " n=" << a.n << " monomials=" << table.monomials.size()
              << " pseudo=" << (table.pseudo ? 1 : 0) << " min_sv=" << num(table.min_singular_value) << "\n";
    return 0;
}

struct FrameArgs {
    SpecArgs spec;
    std::size_t k = 0;
    std::size_t samples = 0;
    bool exact = false;
};

int run_frame_potential(const FrameArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = resolve_spec(a.spec);
    Rng rng(c.seed);
    const auto est = frame_potential(spec, a.k, a.samples, rng);
    const fs::path dir = out_dir(c);
    const json params = {{"spec", json::parse(spec.to_json())}, {"k", a.k}, {"samples", a.samples}, {"seed", c.seed}};
    Csv csv(dir / "frame_potential.csv", "frame-potential", params);
    csv.row({"spec", "k", "estimate", "stderr", "samples", "seed"});
    csv.row({spec.describe(), std::to_string(a.k), num(est.value), num(est.stderr_), std::to_string(a.samples),
             std::to_string(c.seed)});
    json results = {{"estimate", est.value}, {"stderr", est.stderr_}};
    std::string exact_note;
    if (a.exact) {
        std::size_t t = 0;
        if (spec.kind == EnsembleSpec::Kind::Homeopathy && spec.inner->kind == EnsembleSpec::Kind::Haar) {
            t = spec.t;
        } else if (spec.kind == EnsembleSpec::Kind::Haar) {
            t = spec.n;
        } else if (spec.kind != EnsembleSpec::Kind::CliffordUniform &&
                   spec.kind != EnsembleSpec::Kind::CliffordEnumerated) {
            throw ValidationError("--exact supports Haar, Clifford and Homeopathy(inner Haar) specs");
        }
        const double exact = homeopathy_frame_potential(spec.n, t, a.k);
        results["exact"] = exact;
        exact_note = " exact=" + num(exact);
    }
    write_manifest(dir / "frame_potential.json", "frame-potential", params, results, seconds_since(start));
    std::cout << "frame-potential " << spec.describe() << " k=" << a.k << " F=" << num(est.value) << " +- "
              << num(est.stderr_) << exact_note << "\n";
    return 0;
}

struct DecayArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string t = "";
    std::size_t samples = 0;
    std::size_t bootstrap = 200;
    std::size_t frame_k = 4;
};

int run_decay(const DecayArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    const auto ts = parse_range(a.t);
    Rng rng(c.seed);
    const auto res = decay_experiment(a.n, a.k, ts, a.samples, rng, a.bootstrap);
    const fs::path dir = out_dir(c);
    const json params = {{"n", a.n}, {"k", a.k}, {"t", a.t}, {"samples", a.samples},
                         {"bootstrap", a.bootstrap}, {"seed", c.seed}, {"frame_k", a.frame_k}};
    Csv csv(dir / "decay.csv", "decay", params);
    csv.row({"t", "distance", "stderr", "samples", "seed", "bound", "above_floor"});
    for (const auto &r : res.rows) {
        csv.row({std::to_string(r.t), num(r.distance), num(r.stderr_), std::to_string(a.samples),
                 std::to_string(c.seed), num(r.bound), r.above_floor ? "1" : "0"});
    }
    json results = {{"null_distance", res.null_distance},
                    {"null_stderr", res.null_stderr},
                    {"floor", res.floor},
                    {"monotone_above_floor", res.monotone},
                    {"within_bound", res.within_bound},
                    {"fit_points", res.fit_points},
                    {"slope", res.slope ? json(*res.slope) : json(nullptr)},
                    {"distance_kind", "Choi trace distance ||J_A - J_B||_1 / 2; lower-bounds the diamond "
                                      "distance, which can exceed it by up to a factor d^k"}};
    if (a.frame_k > 0) {
        std::vector<std::size_t> all_t{0};
        all_t.insert(all_t.end(), ts.begin(), ts.end());
        const auto fp = frame_potential_decay(a.n, a.frame_k, all_t);
        Csv fcsv(dir / "decay_frame_potential.csv", "decay", params);
        fcsv.row({"t", "k", "frame_potential", "excess_over_haar"});
        json rows = json::array();
        for (const auto &r : fp) {
            fcsv.row({std::to_string(r.t), std::to_string(a.frame_k), num(r.frame_potential), num(r.excess)});
            rows.push_back({{"t", r.t}, {"frame_potential", r.frame_potential}, {"excess", r.excess}});
        }
        results["exact_frame_potential"] = rows;
    }
    write_manifest(dir / "decay.json", "decay", params, results, seconds_since(start));
    std::cout << "decay n=" << a.n << " k=" << a.k << " rows=" << res.rows.size() << " floor=" << num(res.floor)
              << " monotone=" << res.monotone << " within_bound=" << res.within_bound
              << " slope=" << (res.slope ? num(*res.slope) : std::string("none")) << "\n";
    return 0;
}

struct DistinguishArgs {
    std::string source = "compressible";
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t l = 0;
    std::size_t trials = 0;
    double epsilon_t = 0.5;
    bool thresholded = false;
    std::size_t shots = 0;
    std::string path = "measurement";
};

int run_distinguish(const DistinguishArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    DistinguishOptions opts;
    opts.epsilon_t = a.epsilon_t;
    opts.thresholded = a.thresholded;
    opts.shots = a.shots;
    if (a.path == "measurement") {
        opts.path = BellPath::Measurement;
    } else if (a.path == "table") {
        opts.path = BellPath::Table;
    } else {
        throw ValidationError("--path must be measurement or table");
    }
    StateSource source;
    if (a.source == "compressible") {
        source = compressible_source(a.n, a.t);
    } else if (a.source == "haar") {
        source = haar_source(a.n);
    } else {
        throw ValidationError("--source must be compressible or haar");
    }
    const std::size_t l = a.l > 0 ? a.l : 3 * a.t + 2;
    Rng rng(c.seed);
    const auto rep = distinguish(source, a.n, l, a.trials, rng, opts);
    const auto base = distinguish(haar_source(a.n), a.n, l, a.trials, rng, opts);
    const double adv = rep.mean - base.mean;
    const double adv_se = std::hypot(rep.stderr_, base.stderr_);
    const fs::path dir = out_dir(c);
    const json params = {{"source", a.source}, {"n", a.n},         {"t", a.t},         {"l", l},
                         {"trials", a.trials}, {"epsilon_t", a.epsilon_t}, {"thresholded", a.thresholded},
                         {"shots", a.shots},   {"path", a.path},   {"seed", c.seed}};
    Csv csv(dir / "distinguish.csv", "distinguish", params);
    csv.row({"arm", "trial", "span_dim", "statistic"});
    for (const auto *r : {&rep, &base}) {
        const std::string arm = r == &rep ? a.source : "haar-baseline";
        for (std::size_t i = 0; i < r->trials; ++i) {
            csv.row({arm, std::to_string(i), std::to_string(r->span_dims[i]), num(r->statistics[i])});
        }
    }
    const json results = {{"source_mean", rep.mean},
                          {"source_stderr", rep.stderr_},
                          {"source_nontrivial_fraction", rep.nontrivial_fraction},
                          {"haar_mean", base.mean},
                          {"haar_stderr", base.stderr_},
                          {"advantage", adv},
                          {"advantage_stderr", adv_se},
                          {"advantage_ci95", {adv - 1.96 * adv_se, adv + 1.96 * adv_se}},
                          {"copies_per_trial", rep.copies()}};
    write_manifest(dir / "distinguish.json", "distinguish", params, results, seconds_since(start));
    std::cout << "distinguish source=" << a.source << " n=" << a.n << " t=" << a.t << " l=" << l
              << " copies=" << rep.copies() << " mean=" << num(rep.mean) << " haar=" << num(base.mean)
              << " advantage=" << num(adv) << " +- " << num(adv_se) << "\n";
    return 0;
}

struct TwirlArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t inputs = 0;
};

CMatrix random_input(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

// Group average split as symplectic representatives times Pauli frames.
CMatrix group_twirl(const CMatrix &o, std::size_t k, const std::vector<CMatrix> &reps,
                    const std::vector<CMatrix> &paulis) {
    CMatrix frame = CMatrix::Zero(o.rows(), o.cols());
    for (const auto &p : paulis) {
        const CMatrix pk = tensor_power(p, k);
        frame += pk * o * pk.adjoint();
    }
    frame /= static_cast<double>(paulis.size());
    CMatrix out = CMatrix::Zero(o.rows(), o.cols());
    for (const auto &u : reps) {
        const CMatrix uk = tensor_power(u, k);
        out.noalias() += uk * frame * uk.adjoint();
    }
    return out / static_cast<double>(reps.size());
}

int run_twirl_check(const TwirlArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t dim = std::size_t{1} << (a.n * a.k);
    if (dim > limits::kMaxOperatorDim) {
        throw ValidationError("twirl-check: d^k exceeds the operator limit");
    }
    const auto table = weingarten_table(a.k, a.n);
    const bool brute = a.n <= 2;
    std::vector<CMatrix> reps;
    std::vector<CMatrix> paulis;
    if (brute) {
        for (const auto &cl : enumerate_cliffords(a.n)) {
            if (cl.signs().is_zero()) {
                reps.push_back(clifford_to_matrix(cl));
            }
        }
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * a.n)); ++idx) {
            paulis.push_back(pauli_matrix(pauli_from_index(a.n, idx)));
        }
    }
    const bool haar = a.k <= 4;
    Rng rng(c.seed);
    const fs::path dir = out_dir(c);
    const json params = {{"n", a.n}, {"k", a.k}, {"inputs", a.inputs}, {"seed", c.seed}};
    Csv csv(dir / "twirl_check.csv", "twirl-check", params);
    csv.row({"input", "max_err_vs_group_average", "max_diff_vs_haar"});
    double worst_brute = 0.0;
    double worst_haar = 0.0;
    for (std::size_t i = 0; i < a.inputs; ++i) {
        const CMatrix o = random_input(dim, rng);
        const CMatrix tw = clifford_twirl(o, table);
        const double eb = brute ? (tw - group_twirl(o, a.k, reps, paulis)).cwiseAbs().maxCoeff() : std::nan("");
        const double eh = haar ? (tw - haar_twirl(o, a.k, std::size_t{1} << a.n)).cwiseAbs().maxCoeff() : std::nan("");
        worst_brute = std::max(worst_brute, brute ? eb : 0.0);
        worst_haar = std::max(worst_haar, haar ? eh : 0.0);
        csv.row({std::to_string(i), brute ? num(eb) : "", haar ? num(eh) : ""});
    }
    json results = {{"pseudo_inverse", table.pseudo}};
    results["max_err_vs_group_average"] = brute ? json(worst_brute) : json(nullptr);
    results["max_diff_vs_haar"] = haar ? json(worst_haar) : json(nullptr);
    write_manifest(dir / "twirl_check.json", "twirl-check", params, results, seconds_since(start));
    std::cout << "twirl-check n=" << a.n << " k=" << a.k << " inputs=" << a.inputs
              << " group_err=" << (brute ? num(worst_brute) : std::string("n/a"))
              << " haar_diff=" << (haar ? num(worst_haar) : std::string("n/a")) << "\n";
    if (brute && worst_brute > 1e-8) {
        throw ConsistencyError("Weingarten twirl disagrees with the group average");
    }
    return 0;
}

struct VandermondeArgs {
    std::size_t k = 0;
};

int run_vandermonde(const VandermondeArgs &a, const Common &c) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = vandermonde_bound_check(a.k);
    const fs::path dir = out_dir(c);
    const json params = {{"k", a.k}};
    Csv csv(dir / "vandermonde.csv", "vandermonde", params);
    csv.row({"i", "row_sum", "bound", "ratio"});
    for (std::size_t i = 0; i < rep.row_sums.size(); ++i) {
        csv.row({std::to_string(i + 1), num(rep.row_sums[i]), num(rep.bounds[i]),
                 num(rep.row_sums[i] / rep.bounds[i])});
    }
    const json results = {{"all_bounds_satisfied", rep.all_satisfied}, {"max_ratio", rep.max_ratio}};
    write_manifest(dir / "vandermonde.json", "vandermonde", params, results, seconds_since(start));
    std::cout << "vandermonde k=" << a.k << (rep.all_satisfied ? " all-bounds-satisfied" : " BOUND-VIOLATED")
              << " max_ratio=" << num(rep.max_ratio) << "\n";
    if (!rep.all_satisfied) {
        throw ConsistencyError("Vandermonde bound violated");
    }
    return 0;
}

void add_common(CLI::App *sub, Common &c, bool stochastic) {
    sub->add_option("--out", c.out, "Output directory (default: $QHOMEO_OUT_DIR or ./qhomeo_out)");
    if (stochastic) {
        sub->add_option("--seed", c.seed, "RNG seed (required)")->required();
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qhomeo: Clifford commutant, homeopathy designs and the Bell-difference distinguisher"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Common common;

    CommutantArgs ca;
    auto *cm = app.add_subcommand("commutant", "Pauli-monomial Gram and Weingarten table for (k, n)");
    cm->add_option("--k", ca.k, "Copies")->required();
    cm->add_option("--n", ca.n, "Qubits")->required();
    cm->footer("Writes commutant_k<k>_n<n>.csv (index,m,m_p,label,alpha_to_identity), a .wgt Weingarten "
               "archive and a .json manifest.");
    add_common(cm, common, false);

    FrameArgs fa;
    auto *fp = app.add_subcommand("frame-potential", "Monte Carlo frame potential E|tr(U^dag V)|^{2k}");
    fp->add_option("--spec", fa.spec.spec, "Ensemble spec as JSON text or @file");
    fp->add_option("--ensemble", fa.spec.ensemble, "Shorthand: haar, clifford, clifford-enumerated, homeopathy");
    fp->add_option("--n", fa.spec.n, "Qubits for --ensemble");
    fp->add_option("--t", fa.spec.t, "Injected block size for --ensemble homeopathy");
    fp->add_option("--k", fa.k, "Moment")->required();
    fp->add_option("--samples", fa.samples, "Pairs (U, V)")->required();
    fp->add_flag("--exact", fa.exact, "Also report the exact commutant value (Haar, Clifford, Homeopathy)");
    fp->footer("Writes frame_potential.csv (spec,k,estimate,stderr,samples,seed) and frame_potential.json.");
    add_common(fp, common, true);

    DecayArgs da;
    auto *dc = app.add_subcommand("decay", "Choi distance of Homeopathy(n,t,Haar) from Haar(n) against t");
    dc->add_option("--n", da.n, "Qubits")->required();
    dc->add_option("--k", da.k, "Moment")->required();
    dc->add_option("--t", da.t, "t values: lo..hi or a comma list")->required();
    dc->add_option("--samples", da.samples, "Samples per Choi estimate")->required();
    dc->add_option("--bootstrap", da.bootstrap, "Bootstrap replicates")->capture_default_str();
    dc->add_option("--frame-k", da.frame_k, "Moment of the exact frame-potential table (0 to skip)")
        ->capture_default_str();
    dc->footer("Writes decay.csv (t,distance,stderr,samples,seed,bound,above_floor), "
               "decay_frame_potential.csv (t,k,frame_potential,excess_over_haar) and decay.json.");
    add_common(dc, common, true);

    DistinguishArgs ga;
    auto *ds = app.add_subcommand("distinguish", "Bell-difference distinguisher against a Haar baseline");
    ds->add_option("--source", ga.source, "compressible or haar")->capture_default_str();
    ds->add_option("--n", ga.n, "Qubits")->required();
    ds->add_option("--t", ga.t, "Compressibility of the source")->capture_default_str();
    ds->add_option("--l", ga.l, "Bell difference samples per trial (default 3t+2)");
    ds->add_option("--trials", ga.trials, "Trials per arm")->required();
    ds->add_option("--epsilon-t", ga.epsilon_t, "Threshold for --thresholded")->capture_default_str();
    ds->add_flag("--thresholded", ga.thresholded, "Report 1{tr^2 >= epsilon_t} per trial");
    ds->add_option("--shots", ga.shots, "Finite-shot estimate of tr^2 (0 = exact)")->capture_default_str();
    ds->add_option("--path", ga.path, "Bell sampling path: measurement or table")->capture_default_str();
    ds->footer("Writes distinguish.csv (arm,trial,span_dim,statistic) and distinguish.json "
               "(means, advantage, CI, copies = 4l+2).");
    add_common(ds, common, true);

    TwirlArgs ta;
    auto *tw = app.add_subcommand("twirl-check", "Weingarten twirl against group averages and the Haar twirl");
    tw->add_option("--n", ta.n, "Qubits")->required();
    tw->add_option("--k", ta.k, "Copies")->required();
    tw->add_option("--inputs", ta.inputs, "Random inputs")->required();
    tw->footer("Writes twirl_check.csv (input,max_err_vs_group_average,max_diff_vs_haar) and twirl_check.json.");
    add_common(tw, common, true);

    VandermondeArgs va;
    auto *vd = app.add_subcommand("vandermonde", "Row-sum bound for the inverse of M_ij = 2^{-ij}");
    vd->add_option("--k", va.k, "Size")->required();
    vd->footer("Writes vandermonde.csv (i,row_sum,bound,ratio) and vandermonde.json.");
    add_common(vd, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitValidation;
    }

    try {
        if (*cm) {
            return run_commutant(ca, common);
        }
        if (*fp) {
            return run_frame_potential(fa, common);
        }
        if (*dc) {
            return run_decay(da, common);
        }
        if (*ds) {
            return run_distinguish(ga, common);
        }
        if (*tw) {
            return run_twirl_check(ta, common);
        }
        if (*vd) {
            return run_vandermonde(va, common);
        }
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ConsistencyError &e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const fs::filesystem_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

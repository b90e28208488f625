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
#include "qhomeo/weingarten_archive.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qhomeo/errors.hpp"

namespace qhomeo {

namespace {

std::string hex(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double parse_hex(const std::string &s) {
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw ValidationError("weingarten archive: bad number '" + s + "'");
    }
    return v;
}

void expect(std::istream &is, const std::string &word) {
    std::string got;
    if (!(is >> got) || got != word) {
        throw ValidationError("weingarten archive: expected '" + word + "', got '" + got + "'");
    }
}

template <typename T> T read_value(std::istream &is) {
    T v{};
    if (!(is >> v)) {
        throw ValidationError("weingarten archive: truncated");
    }
    return v;
}

void write_matrix(std::ostream &os, const char *tag, const RMatrix &m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << tag;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << ' ' << hex(m(i, j));
        }
        os << '\n';
    }
}

RMatrix read_matrix(std::istream &is, const char *tag, std::size_t size) {
    const auto n = static_cast<Eigen::Index>(size);
    RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        expect(is, tag);
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = parse_hex(read_value<std::string>(is));
        }
    }
    return m;
}

} // namespace

void write_weingarten_archive(std::ostream &os, const WeingartenTable &table) {
    const std::size_t size = table.monomials.size();
    os << "qhomeo-weingarten\n"
       << "schema_version " << kWeingartenSchemaVersion << '\n'
       << "normalization G_ab = d^-k tr(Omega_a^dag Omega_b) = d^-alpha_ab, d = 2^n\n"
       << "k " << table.k << " n " << table.n << " size " << size << " pseudo "
       << (table.pseudo ? 1 : 0) << '\n';
    for (std::size_t a = 0; a < size; ++a) {
        const auto &m = table.monomials[a];
        os << "monomial " << a << ' ' << m.order();
        for (const auto &v : m.span) {
            os << ' ' << v.to_string();
        }
        for (std::size_t i = 0; i < m.order(); ++i) {
            os << ' ' << m.phases.row(i).to_string();
        }
        os << '\n';
    }
    for (std::size_t a = 0; a < size; ++a) {
        os << "alpha";
        for (std::size_t b = 0; b < size; ++b) {
            os << ' ' << table.alpha[a][b];
        }
        os << '\n';
    }
    write_matrix(os, "gram", table.gram);
    write_matrix(os, "weingarten", table.weingarten);
}

WeingartenTable read_weingarten_archive(std::istream &is) {
    expect(is, "qhomeo-weingarten");
    expect(is, "schema_version");
    if (read_value<int>(is) != kWeingartenSchemaVersion) {
        throw ValidationError("weingarten archive: unsupported schema version");
    }
    expect(is, "normalization");
    std::string rest;
    std::getline(is, rest);
    WeingartenTable t;
    expect(is, "k");
    t.k = read_value<std::size_t>(is);
    expect(is, "n");
    t.n = read_value<std::size_t>(is);
    expect(is, "size");
    const auto size = read_value<std::size_t>(is);
    expect(is, "pseudo");
    t.pseudo = read_value<int>(is) != 0;
    if (t.k == 0 || t.k > kMaxMonomialCopies || size != commutant_dimension(t.k)) {
        throw ValidationError("weingarten archive: inconsistent header");
    }
    for (std::size_t a = 0; a < size; ++a) {
        expect(is, "monomial");
        if (read_value<std::size_t>(is) != a) {
            throw ValidationError("weingarten archive: monomials out of order");
        }
        PauliMonomial m;
        m.k = t.k;
        const auto order = read_value<std::size_t>(is);
        for (std::size_t j = 0; j < order; ++j) {
            m.span.push_back(f2::BinVec::from_string(read_value<std::string>(is)));
        }
        std::vector<f2::BinVec> rows;
        for (std::size_t j = 0; j < order; ++j) {
            rows.push_back(f2::BinVec::from_string(read_value<std::string>(is)));
        }
        m.phases = f2::BinMat::from_rows(rows, order);
        t.monomials.push_back(std::move(m));
    }
    t.alpha.assign(size, std::vector<int>(size, 0));
    for (std::size_t a = 0; a < size; ++a) {
        expect(is, "alpha");
        for (std::size_t b = 0; b < size; ++b) {
            t.alpha[a][b] = read_value<int>(is);
        }
    }
    t.gram = read_matrix(is, "gram", size);
    t.weingarten = read_matrix(is, "weingarten", size);
    bool pseudo = false;
    symmetric_pinv(t.gram, pseudo, t.min_singular_value);
    return t;
}

void save_weingarten_archive(const std::string &path, const WeingartenTable &table) {
    std::ofstream os(path);
    if (!os) {
        throw ValidationError("cannot open " + path + " for writing");
    }
    write_weingarten_archive(os, table);
}

WeingartenTable load_weingarten_archive(const std::string &path) {
    std::ifstream is(path);
    if (!is) {
        throw ValidationError("cannot open " + path);
    }
    return read_weingarten_archive(is);
}

} // namespace qhomeo

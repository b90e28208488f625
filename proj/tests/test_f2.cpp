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
#include <random>

#include "doctest.h"
#include "f2_oracle.hpp"
#include "qhomeo/errors.hpp"
#include "qhomeo/f2.hpp"

using namespace qhomeo;
using f2::BinMat;
using f2::BinVec;

namespace {

std::vector<BinVec> random_vectors(std::mt19937_64 &rng, std::size_t count, std::size_t len) {
    std::vector<BinVec> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(BinVec::from_mask(rng(), len));
    }
    return out;
}

std::vector<BinVec> vecs(std::initializer_list<const char *> bits) {
    std::vector<BinVec> out;
    for (const auto *b : bits) {
        out.push_back(BinVec::from_string(b));
    }
    return out;
}

} // namespace

TEST_CASE("BinVec basics") {
    auto v = BinVec::from_string("10110");
    CHECK(v.size() == 5);
    CHECK(v.weight() == 3);
    CHECK(v.first_one() == 0);
    CHECK(v.to_string() == "10110");
    CHECK(v.slice(2, 3).to_string() == "110");
    CHECK(BinVec(130).first_one() == 130);

    BinVec wide(130);
    wide.set(129, true);
    wide.set(64, true);
    CHECK(wide.weight() == 2);
    CHECK(wide.first_one() == 64);
    CHECK_THROWS_AS(BinVec(3) ^ BinVec(4), ValidationError);
}

TEST_CASE("rank examples") {
    CHECK(f2::rank(BinMat::identity(3)) == 3);
    CHECK(f2::rank(BinMat(4, 4)) == 0);
    CHECK(f2::rank(BinMat::from_strings({"110", "011", "101"})) == 2);
}

TEST_CASE("nullspace examples") {
    CHECK(f2::nullspace(BinMat::identity(2)).empty());
    CHECK(f2::nullspace(BinMat(2, 2)).size() == 2);
    const auto k = f2::nullspace(BinMat::from_strings({"11"}));
    REQUIRE(k.size() == 1);
    CHECK(k[0].to_string() == "11");
}

TEST_CASE("span_intersect examples") {
    auto sub = f2::span_intersect(vecs({"10", "01"}), vecs({"10"}));
    REQUIRE(sub.size() == 1);
    CHECK(sub[0].to_string() == "10");
    CHECK(f2::span_intersect(vecs({"10"}), vecs({"01"})).empty());

    // span{110, 011} = {000, 110, 011, 101}; span{101, 011} = {000, 101, 011, 110}
    const auto a = vecs({"110", "011"});
    const auto b = vecs({"101", "011"});
    const auto sa = oracle::enumerate_span(a, 3);
    const auto sb = oracle::enumerate_span(b, 3);
    std::set<BinVec> common;
    for (const auto &v : sa) {
        if (sb.count(v)) {
            common.insert(v);
        }
    }
    const auto got = f2::span_intersect(a, b);
    CHECK(oracle::enumerate_span(got, 3) == common);
    CHECK(got == vecs({"101", "011"}));
}

TEST_CASE("symplectic_product examples") {
    CHECK(f2::symplectic_product(BinVec::from_string("10"), BinVec::from_string("01")));
    const auto p = BinVec::from_string("1101");
    CHECK_FALSE(f2::symplectic_product(p, p));
    // X(x)I = x:10 z:00, Z(x)Z = x:00 z:11
    CHECK(f2::symplectic_product(BinVec::from_string("1000"), BinVec::from_string("0011")));
    CHECK_THROWS_AS(f2::symplectic_product(BinVec(2), BinVec(4)), ValidationError);
}

TEST_CASE("symplectic_complement examples") {
    CHECK(f2::symplectic_complement({}, 2).size() == 2);
    const auto perp = f2::symplectic_complement(vecs({"10"}), 2);
    REQUIRE(perp.size() == 1);
    CHECK(perp[0].to_string() == "10");
    CHECK(f2::symplectic_complement(vecs({"1000", "0100", "0010", "0001"}), 4).empty());
}

TEST_CASE("rank-nullity and RREF canonical form on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 7;
        const std::size_t cols = 1 + rng() % 10;
        const auto a = BinMat::from_rows(random_vectors(rng, rows, cols));
        const auto kernel = f2::nullspace(a);
        CHECK(f2::rank(a) + kernel.size() == cols);
        CHECK(f2::rank(a) == oracle::naive_rank(a.row_list(), cols));
        CHECK(oracle::enumerate_span(kernel, cols) == oracle::naive_kernel(a));
        CHECK(f2::rref_basis(kernel) == kernel);
    }
}

TEST_CASE("span_intersect against enumeration") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t len = 2 + rng() % 9;
        const auto a = random_vectors(rng, rng() % 5, len);
        const auto b = random_vectors(rng, rng() % 5, len);
        const auto sa = oracle::enumerate_span(a, len);
        const auto sb = oracle::enumerate_span(b, len);
        std::set<BinVec> expected;
        for (const auto &v : sa) {
            if (sb.count(v)) {
                expected.insert(v);
            }
        }
        const auto got = f2::span_intersect(a, b);
        CHECK(oracle::enumerate_span(got, len) == expected);
        for (const auto &v : got) {
            CHECK(f2::in_span(a, v));
            CHECK(f2::in_span(b, v));
        }
    }
}

TEST_CASE("symplectic product is bilinear and alternating, complement has the right dimension") {
    std::mt19937_64 rng(13);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto xs = random_vectors(rng, rng() % (2 * n + 1), 2 * n);
            const auto u = BinVec::from_mask(rng(), 2 * n);
            const auto v = BinVec::from_mask(rng(), 2 * n);
            const auto w = BinVec::from_mask(rng(), 2 * n);
            CHECK_FALSE(f2::symplectic_product(u, u));
            CHECK(f2::symplectic_product(u, v) == oracle::naive_symplectic(u, v));
            CHECK(f2::symplectic_product(u ^ w, v) ==
                  (f2::symplectic_product(u, v) != f2::symplectic_product(w, v)));

            const auto perp = f2::symplectic_complement(xs, 2 * n);
            CHECK(perp.size() == 2 * n - f2::rank(xs));
            std::set<BinVec> expected;
            for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
                const auto y = BinVec::from_mask(idx, 2 * n);
                bool ok = true;
                for (const auto &x : xs) {
                    ok = ok && !oracle::naive_symplectic(y, x);
                }
                if (ok) {
                    expected.insert(y);
                }
            }
            CHECK(oracle::enumerate_span(perp, 2 * n) == expected);
        }
    }
}

TEST_CASE("solve_combination finds coefficients exactly when target is in the span") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 1 + rng() % 9;
        const auto rows = random_vectors(rng, rng() % 6, len);
        const auto target = BinVec::from_mask(rng(), len);
        BinVec coeff;
        const bool ok = f2::solve_combination(rows, target, coeff);
        CHECK(ok == f2::in_span(rows, target));
        if (ok) {
            BinVec acc(len);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (coeff.get(i)) {
                    acc ^= rows[i];
                }
            }
            CHECK(acc == target);
        }
    }
}

TEST_CASE("symplectic form checks") {
    CHECK(f2::is_symplectic(BinMat::identity(4)));
    CHECK(f2::is_symplectic(f2::symplectic_form(2)));
    CHECK_FALSE(f2::is_symplectic(BinMat(4, 4)));
}

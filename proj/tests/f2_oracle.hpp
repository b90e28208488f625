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

// Brute-force reference implementations used only by the tests. They
// enumerate whole spans, so keep vector lengths small.

#include <set>
#include <vector>

#include "qhomeo/f2.hpp"

namespace qhomeo::oracle {

inline std::set<f2::BinVec> enumerate_span(const std::vector<f2::BinVec> &gens,
                                           std::size_t len) {
    std::set<f2::BinVec> out;
    out.insert(f2::BinVec(len));
    for (const auto &g : gens) {
        std::set<f2::BinVec> next = out;
        for (const auto &v : out) {
            next.insert(v ^ g);
        }
        out = std::move(next);
    }
    return out;
}

inline std::size_t naive_rank(const std::vector<f2::BinVec> &rows, std::size_t len) {
    const auto span = enumerate_span(rows, len);
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) {
        ++r;
    }
    return r;
}

inline f2::BinVec vec_from_index(std::uint64_t idx, std::size_t len) {
    return f2::BinVec::from_mask(idx, len);
}

inline std::set<f2::BinVec> naive_kernel(const f2::BinMat &a) {
    std::set<f2::BinVec> out;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << a.cols()); ++idx) {
        auto x = vec_from_index(idx, a.cols());
        if ((a * x).is_zero()) {
            out.insert(x);
        }
    }
    return out;
}

inline bool naive_symplectic(const f2::BinVec &u, const f2::BinVec &v) {
    const std::size_t n = u.size() / 2;
    bool acc = false;
    for (std::size_t i = 0; i < n; ++i) {
        acc ^= (u.get(i) && v.get(n + i)) != (u.get(n + i) && v.get(i));
    }
    return acc;
}

} // namespace qhomeo::oracle

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
#include "qhomeo/f2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qhomeo/errors.hpp"

namespace qhomeo::f2 {

BinVec BinVec::from_string(std::string_view bits) {
    BinVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ValidationError("BinVec::from_string: expected '0' or '1'");
        }
    }
    return v;
}

BinVec BinVec::from_mask(std::uint64_t mask, std::size_t len) {
    if (len > 64) {
        throw ValidationError("BinVec::from_mask: length exceeds 64");
    }
    BinVec v(len);
    if (len > 0) {
        const std::uint64_t keep =
            len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
        v.words_[0] = mask & keep;
    }
    return v;
}

BinVec BinVec::unit(std::size_t len, std::size_t i) {
    BinVec v(len);
    v.set(i, true);
    return v;
}

std::size_t BinVec::weight() const {
    std::size_t w = 0;
    for (auto word : words_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool BinVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

std::size_t BinVec::first_one() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return len_;
}

bool BinVec::dot(const BinVec &other) const {
    check_same_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::uint64_t BinVec::to_mask() const {
    if (len_ > 64) {
        throw ValidationError("BinVec::to_mask: length exceeds 64");
    }
    return words_.empty() ? 0 : words_[0];
}

BinVec BinVec::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > len_) {
        throw ValidationError("BinVec::slice: range out of bounds");
    }
    BinVec out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (get(begin + i)) {
            out.set(i, true);
        }
    }
    return out;
}

BinVec BinVec::concat(const BinVec &tail) const {
    BinVec out(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i) {
        out.set(i, get(i));
    }
    for (std::size_t i = 0; i < tail.len_; ++i) {
        out.set(len_ + i, tail.get(i));
    }
    return out;
}

BinVec &BinVec::operator^=(const BinVec &other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BinVec &BinVec::operator&=(const BinVec &other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool operator<(const BinVec &a, const BinVec &b) {
    if (a.len_ != b.len_) {
        return a.len_ < b.len_;
    }
    for (std::size_t i = 0; i < a.len_; ++i) {
        const bool x = a.get(i);
        const bool y = b.get(i);
        if (x != y) {
            return y;
        }
    }
    return false;
}

std::string BinVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

void BinVec::check_same_size(const BinVec &other) const {
    if (len_ != other.len_) {
        throw ValidationError("BinVec: length mismatch (" +
                              std::to_string(len_) + " vs " +
                              std::to_string(other.len_) + ")");
    }
}

BinMat BinMat::identity(std::size_t n) {
    BinMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BinMat BinMat::from_rows(const std::vector<BinVec> &rows, std::size_t cols) {
    if (!rows.empty()) {
        cols = rows.front().size();
    }
    BinMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw ValidationError("BinMat::from_rows: ragged rows");
        }
        m.data_[r] = rows[r];
    }
    return m;
}

BinMat BinMat::from_strings(const std::vector<std::string> &rows) {
    std::vector<BinVec> vs;
    vs.reserve(rows.size());
    for (const auto &r : rows) {
        vs.push_back(BinVec::from_string(r));
    }
    return from_rows(vs);
}

BinMat BinMat::from_columns(const std::vector<BinVec> &cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
}

BinVec BinMat::col(std::size_t c) const {
    BinVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

BinMat BinMat::transpose() const {
    BinMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BinMat BinMat::operator*(const BinMat &rhs) const {
    if (cols_ != rhs.rows_) {
        throw ValidationError("BinMat::operator*: inner dimension mismatch");
    }
    BinMat out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) {
                out.data_[r] ^= rhs.data_[k];
            }
        }
    }
    return out;
}

BinVec BinMat::operator*(const BinVec &v) const {
    if (cols_ != v.size()) {
        throw ValidationError("BinMat::operator*: vector length mismatch");
    }
    BinVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

std::string BinMat::to_string() const {
    std::string s;
    for (const auto &r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

std::vector<BinVec> rref_basis(std::vector<BinVec> rows) {
    if (rows.empty()) {
        return rows;
    }
    const std::size_t cols = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t found = pivot_row;
        while (found < rows.size() && !rows[found].get(c)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && rows[r].get(c)) {
                rows[r] ^= rows[pivot_row];
            }
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

BinMat rref(const BinMat &a) {
    return BinMat::from_rows(rref_basis(a.row_list()), a.cols());
}

std::size_t rank(const std::vector<BinVec> &rows) {
    return rref_basis(rows).size();
}

std::size_t rank(const BinMat &a) { return rank(a.row_list()); }

std::vector<BinVec> nullspace(const BinMat &a) {
    const std::size_t cols = a.cols();
    const auto reduced = rref_basis(a.row_list());
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(cols, false);
    for (const auto &r : reduced) {
        const std::size_t p = r.first_one();
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    // One kernel vector per free column: x_free = 1, x_pivot = row entry.
    std::vector<BinVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BinVec x(cols);
        x.set(f, true);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (reduced[i].get(f)) {
                x.set(pivots[i], true);
            }
        }
        basis.push_back(std::move(x));
    }
    return rref_basis(std::move(basis));
}

std::vector<BinVec> span_intersect(const std::vector<BinVec> &a,
                                   const std::vector<BinVec> &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    const std::size_t len = a.front().size();
    for (const auto &v : a) {
        if (v.size() != len) {
            throw ValidationError("span_intersect: length mismatch");
        }
    }
    for (const auto &v : b) {
        if (v.size() != len) {
            throw ValidationError("span_intersect: length mismatch");
        }
    }
    // Columns [a_1 .. a_p | b_1 .. b_q]; a kernel vector (c, e) gives
    // sum c_i a_i = sum e_j b_j, an element of the intersection.
    std::vector<BinVec> columns(a);
    columns.insert(columns.end(), b.begin(), b.end());
    const BinMat stacked = BinMat::from_columns(columns, len);
    std::vector<BinVec> common;
    for (const auto &k : nullspace(stacked)) {
        BinVec v(len);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k.get(i)) {
                v ^= a[i];
            }
        }
        if (!v.is_zero()) {
            common.push_back(std::move(v));
        }
    }
    return rref_basis(std::move(common));
}

bool in_span(const std::vector<BinVec> &basis, const BinVec &v) {
    if (v.is_zero()) {
        return true;
    }
    auto rows = basis;
    const std::size_t before = rank(rows);
    rows.push_back(v);
    return rank(rows) == before;
}

bool solve_combination(const std::vector<BinVec> &rows, const BinVec &target,
                       BinVec &coefficients) {
    coefficients = BinVec(rows.size());
    if (rows.empty()) {
        return target.is_zero();
    }
    // Track each reduced row's combination of the original rows.
    const std::size_t m = rows.size();
    std::vector<BinVec> work(rows);
    std::vector<BinVec> combo;
    combo.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        combo.push_back(BinVec::unit(m, i));
    }
    const std::size_t cols = target.size();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && pivot_row < m; ++c) {
        std::size_t found = pivot_row;
        while (found < m && !work[found].get(c)) {
            ++found;
        }
        if (found == m) {
            continue;
        }
        std::swap(work[pivot_row], work[found]);
        std::swap(combo[pivot_row], combo[found]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != pivot_row && work[r].get(c)) {
                work[r] ^= work[pivot_row];
                combo[r] ^= combo[pivot_row];
            }
        }
        pivot_col.push_back(c);
        ++pivot_row;
    }
    BinVec residual = target;
    for (std::size_t i = 0; i < pivot_row; ++i) {
        if (residual.get(pivot_col[i])) {
            residual ^= work[i];
            coefficients ^= combo[i];
        }
    }
    return residual.is_zero();
}

BinVec swap_halves(const BinVec &v) {
    if (v.size() % 2 != 0) {
        throw ValidationError("swap_halves: odd length");
    }
    const std::size_t n = v.size() / 2;
    return v.slice(n, n).concat(v.slice(0, n));
}

bool symplectic_product(const BinVec &u, const BinVec &v) {
    if (u.size() != v.size()) {
        throw ValidationError("symplectic_product: length mismatch");
    }
    return u.dot(swap_halves(v));
}

std::vector<BinVec> symplectic_complement(const std::vector<BinVec> &xs,
                                          std::size_t len) {
    if (len % 2 != 0) {
        throw ValidationError("symplectic_complement: odd length");
    }
    std::vector<BinVec> rows;
    rows.reserve(xs.size());
    for (const auto &x : xs) {
        if (x.size() != len) {
            throw ValidationError("symplectic_complement: length mismatch");
        }
        rows.push_back(swap_halves(x));
    }
    return nullspace(BinMat::from_rows(rows, len));
}

BinMat symplectic_form(std::size_t n) {
    BinMat j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j.set(i, n + i, true);
        j.set(n + i, i, true);
    }
    return j;
}

bool is_symplectic(const BinMat &s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) {
        return false;
    }
    const BinMat j = symplectic_form(s.rows() / 2);
    return s.transpose() * j * s == j;
}

} // namespace qhomeo::f2

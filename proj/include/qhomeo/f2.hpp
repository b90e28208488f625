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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qhomeo::f2 {

/// Fixed-length binary vector packed into 64-bit words. Bits past size()
/// in the last word are always zero.
class BinVec {
  public:
    BinVec() = default;
    explicit BinVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters; index 0 is the first char.
    static BinVec from_string(std::string_view bits);
    /// Low `len` bits of `mask`, bit i of the mask at index i.
    static BinVec from_mask(std::uint64_t mask, std::size_t len);
    static BinVec unit(std::size_t len, std::size_t i);

    [[nodiscard]] std::size_t size() const { return len_; }
    [[nodiscard]] bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= bit;
        } else {
            words_[i >> 6] &= ~bit;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool is_zero() const;
    /// Index of the lowest set bit, or size() if the vector is zero.
    [[nodiscard]] std::size_t first_one() const;
    /// Parity of the bitwise AND.
    [[nodiscard]] bool dot(const BinVec &other) const;
    /// Bits [0, size()) as a mask; requires size() <= 64.
    [[nodiscard]] std::uint64_t to_mask() const;

    /// Copy of bits [begin, begin + len).
    [[nodiscard]] BinVec slice(std::size_t begin, std::size_t len) const;
    [[nodiscard]] BinVec concat(const BinVec &tail) const;

    BinVec &operator^=(const BinVec &other);
    friend BinVec operator^(BinVec a, const BinVec &b) { return a ^= b; }
    BinVec &operator&=(const BinVec &other);
    friend BinVec operator&(BinVec a, const BinVec &b) { return a &= b; }

    friend bool operator==(const BinVec &, const BinVec &) = default;
    /// Lexicographic in bit index order (bit 0 most significant).
    friend bool operator<(const BinVec &a, const BinVec &b);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const std::vector<std::uint64_t> &words() const {
        return words_;
    }

  private:
    void check_same_size(const BinVec &other) const;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense binary matrix stored as packed rows.
class BinMat {
  public:
    BinMat() = default;
    BinMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BinVec(cols)) {}

    static BinMat identity(std::size_t n);
    /// All rows must share one length; an empty list gives a 0 x `cols` matrix.
    static BinMat from_rows(const std::vector<BinVec> &rows, std::size_t cols = 0);
    static BinMat from_strings(const std::vector<std::string> &rows);
    static BinMat from_columns(const std::vector<BinVec> &cols, std::size_t rows = 0);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        return data_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    [[nodiscard]] const BinVec &row(std::size_t r) const { return data_[r]; }
    BinVec &row(std::size_t r) { return data_[r]; }
    [[nodiscard]] BinVec col(std::size_t c) const;
    [[nodiscard]] const std::vector<BinVec> &row_list() const { return data_; }

    [[nodiscard]] BinMat transpose() const;
    [[nodiscard]] BinMat operator*(const BinMat &rhs) const;
    [[nodiscard]] BinVec operator*(const BinVec &v) const;

    friend bool operator==(const BinMat &, const BinMat &) = default;

    [[nodiscard]] std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BinVec> data_;
};

/// Reduced row-echelon form by first-nonzero pivoting. Zero rows are dropped,
/// so the result is the canonical basis of the row space.
std::vector<BinVec> rref_basis(std::vector<BinVec> rows);
BinMat rref(const BinMat &a);

std::size_t rank(const BinMat &a);
std::size_t rank(const std::vector<BinVec> &rows);

/// Basis of {x : A x = 0}, in reduced row-echelon form.
std::vector<BinVec> nullspace(const BinMat &a);

/// Basis of span(a) ∩ span(b), in reduced row-echelon form.
std::vector<BinVec> span_intersect(const std::vector<BinVec> &a,
                                   const std::vector<BinVec> &b);

bool in_span(const std::vector<BinVec> &basis, const BinVec &v);

/// Coefficients c with sum_i c_i rows[i] = target, if any.
bool solve_combination(const std::vector<BinVec> &rows, const BinVec &target,
                       BinVec &coefficients);

/// <u,v> = u_x . v_z + u_z . v_x for length-2n vectors laid out x-block then
/// z-block. Zero iff the corresponding Paulis commute.
bool symplectic_product(const BinVec &u, const BinVec &v);

/// Basis (RREF) of {y : <y,x> = 0 for all x in xs}, vectors of length `len`.
std::vector<BinVec> symplectic_complement(const std::vector<BinVec> &xs,
                                          std::size_t len);

/// Swaps x and z halves; <u,v> = u . swap_halves(v).
BinVec swap_halves(const BinVec &v);

/// J = [[0, I], [I, 0]] of size 2n.
BinMat symplectic_form(std::size_t n);
bool is_symplectic(const BinMat &s);

} // namespace qhomeo::f2

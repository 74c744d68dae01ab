#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alwyn/errors.hpp"
#include "alwyn/ring_traits.hpp"

namespace alwyn {

// Dense row-major matrix over a ring S. S may be noncommutative; every
// entry product is taken in left-to-right order lhs_entry * rhs_entry.
template <typename S>
class RingMatrix {
public:
    RingMatrix(int rows, int cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ <= 0 || cols_ <= 0 ||
            entries_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_))
            throw Error("matrix shape does not match entry count");
    }

    static RingMatrix filled(int rows, int cols, const S& value) {
        return RingMatrix(rows, cols,
                          std::vector<S>(static_cast<size_t>(rows) * cols, value));
    }

    static RingMatrix identity(int n, const S& like) {
        RingMatrix m = filled(n, n, zero_like(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = one_like(like);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const S& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("matrix addition shape mismatch");
        std::vector<S> out;
        out.reserve(a.entries_.size());
        for (size_t k = 0; k < a.entries_.size(); ++k)
            out.push_back(a.entries_[k] + b.entries_[k]);
        return RingMatrix(a.rows_, a.cols_, std::move(out));
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        std::vector<S> out;
        out.reserve(static_cast<size_t>(a.rows_) * b.cols_);
        for (int r = 0; r < a.rows_; ++r) {
            for (int c = 0; c < b.cols_; ++c) {
                S acc = a.at(r, 0) * b.at(0, c);
                for (int k = 1; k < a.cols_; ++k) acc = acc + a.at(r, k) * b.at(k, c);
                out.push_back(std::move(acc));
            }
        }
        return RingMatrix(a.rows_, b.cols_, std::move(out));
    }

    RingMatrix pow(long long e) const {
        if (rows_ != cols_) throw NonSquare();
        if (e < 0) throw Error("negative matrix power");
        RingMatrix acc = identity(rows_, at(0, 0));
        RingMatrix base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

private:
    int rows_;
    int cols_;
    std::vector<S> entries_;
};

namespace detail {

// Subproblem: the rows in `mask`, paired with the last popcount(mask)
// columns. Expansion along the first of those columns; memoising on the
// row mask keeps the declared expansion order while sharing repeated
// minors, so banded matrices stay polynomial instead of exponential.
template <typename S>
S det_expand(const RingMatrix<S>& m, uint64_t mask,
             std::unordered_map<uint64_t, S>& memo) {
    auto found = memo.find(mask);
    if (found != memo.end()) return found->second;

    const int size = __builtin_popcountll(mask);
    const int col = m.cols() - size;

    std::vector<int> rows;
    rows.reserve(size);
    for (int r = 0; r < m.rows(); ++r)
        if (mask & (uint64_t(1) << r)) rows.push_back(r);

    if (size == 1) {
        S value = m.at(rows[0], col);
        memo.emplace(mask, value);
        return value;
    }

    // det = sum_i (-1)^i * a(i, first col) * det(minor_i), entry before minor.
    bool have = false;
    S acc = m.at(rows[0], col);  // placeholder, overwritten below
    for (size_t i = 0; i < rows.size(); ++i) {
        const S& entry = m.at(rows[i], col);
        if (ring_is_zero(entry)) continue;
        S term = entry * det_expand(m, mask & ~(uint64_t(1) << rows[i]), memo);
        if (i % 2 == 1) term = -term;
        if (!have) {
            acc = std::move(term);
            have = true;
        } else {
            acc = acc + term;
        }
    }
    if (!have) acc = zero_like(m.at(rows[0], col));
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// First-column cofactor expansion, det = sum_i (-1)^i a(i,0) det(minor_i0),
// with the entry multiplied before the minor determinant. For commutative S
// this is the standard determinant; for noncommutative S this exact order
// is the declared convention.
template <typename S>
S generic_determinant(const RingMatrix<S>& m) {
    if (m.rows() != m.cols()) throw NonSquare();
    if (m.rows() > 64) throw Error("determinant limited to 64 rows");
    std::unordered_map<uint64_t, S> memo;
    const uint64_t all =
        m.rows() == 64 ? ~uint64_t(0) : (uint64_t(1) << m.rows()) - 1;
    return detail::det_expand(m, all, memo);
}

}  // namespace alwyn

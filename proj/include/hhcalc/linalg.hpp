#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hhcalc/field.hpp"

namespace hhcalc {

/// Sparse vector over K: (index, value) pairs, strictly increasing in index,
/// no explicit zeros.
template <ExactField K>
using SparseVector = std::vector<std::pair<std::size_t, Scalar<K>>>;

/// Incremental row-echelon basis over an exact field.
///
/// Rows are reduced against the pivots found so far; a row that survives
/// becomes a new pivot (scaled to leading coefficient 1). The rank is the
/// number of pivots. Works for any row order; sparse rows stay sparse as long
/// as fill-in is modest, which holds for the cochain matrices here.
template <ExactField K>
class SparseEchelon {
public:
    explicit SparseEchelon(K field) : field_(std::move(field)) {}

    /// Returns true when `row` is independent of the rows inserted before.
    bool insert(SparseVector<K> row) {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const Scalar<K> inv = row.front().second.inv();
                for (auto& [c, v] : row) v = v * inv;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            row = axpy(row, row.front().second, it->second);
        }
        return false;
    }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

private:
    /// row - f * pivot, where pivot has leading coefficient 1 at row's lead.
    SparseVector<K> axpy(const SparseVector<K>& row, const Scalar<K>& f, const SparseVector<K>& pivot) const {
        SparseVector<K> out;
        out.reserve(row.size() + pivot.size());
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
                out.push_back(row[a++]);
            } else if (a == row.size() || pivot[b].first < row[a].first) {
                out.emplace_back(pivot[b].first, -(f * pivot[b].second));
                ++b;
            } else {
                Scalar<K> v = row[a].second - f * pivot[b].second;
                if (!v.is_zero()) out.emplace_back(row[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        return out;
    }

    K field_;
    std::map<std::size_t, SparseVector<K>> pivots_;
};

/// Dense exact matrix, row-major.
template <ExactField K>
class Matrix {
public:
    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const K& field() const { return field_; }

    Scalar<K>& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const Scalar<K>& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] SparseVector<K> sparse_row(std::size_t r) const {
        SparseVector<K> out;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out.emplace_back(c, at(r, c));
        return out;
    }
    [[nodiscard]] SparseVector<K> sparse_col(std::size_t c) const {
        SparseVector<K> out;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!at(r, c).is_zero()) out.emplace_back(r, at(r, c));
        return out;
    }

    /// M * v for a dense vector v of length cols().
    [[nodiscard]] std::vector<Scalar<K>> apply(const std::vector<Scalar<K>>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
        std::vector<Scalar<K>> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
        return out;
    }

private:
    K field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar<K>> data_;
};

/// Exact rank by Gaussian elimination, working along the shorter dimension.
template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
    SparseEchelon<K> ech(m.field());
    if (m.rows() <= m.cols()) {
        for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.sparse_row(r));
    } else {
        for (std::size_t c = 0; c < m.cols(); ++c) ech.insert(m.sparse_col(c));
    }
    return ech.rank();
}

/// Rank of a family of sparse vectors.
template <ExactField K>
std::size_t rank_of(const K& field, const std::vector<SparseVector<K>>& vectors) {
    SparseEchelon<K> ech(field);
    for (const auto& v : vectors) ech.insert(v);
    return ech.rank();
}

}  // namespace hhcalc

#include "adrfem/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adrfem {

SparseMatrix::SparseMatrix(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("SparseMatrix: negative dimension");
    }
}

void SparseMatrix::add(int row, int col, double value) {
    if (finalized_) {
        throw std::logic_error("SparseMatrix::add after finalize");
    }
    if (row < 0 || row >= n_ || col < 0 || col >= n_) {
        throw std::out_of_range("SparseMatrix::add: index (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") outside " + std::to_string(n_));
    }
    coo_rows_.push_back(row);
    coo_cols_.push_back(col);
    coo_values_.push_back(value);
}

void SparseMatrix::finalize(double drop_tol) {
    if (finalized_) {
        throw std::logic_error("SparseMatrix::finalize called twice");
    }
    std::vector<std::size_t> order(coo_rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        if (coo_rows_[a] != coo_rows_[b]) return coo_rows_[a] < coo_rows_[b];
        if (coo_cols_[a] != coo_cols_[b]) return coo_cols_[a] < coo_cols_[b];
        return a < b;  // keep accumulation order deterministic
    });

    row_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    col_indices_.clear();
    values_.clear();
    std::size_t i = 0;
    while (i < order.size()) {
        const int row = coo_rows_[order[i]];
        const int col = coo_cols_[order[i]];
        double sum = 0.0;
        while (i < order.size() && coo_rows_[order[i]] == row && coo_cols_[order[i]] == col) {
            sum += coo_values_[order[i]];
            ++i;
        }
        if (std::abs(sum) < drop_tol) continue;
        col_indices_.push_back(col);
        values_.push_back(sum);
        ++row_offsets_[static_cast<std::size_t>(row) + 1];
    }
    for (int r = 0; r < n_; ++r) {
        row_offsets_[static_cast<std::size_t>(r) + 1] += row_offsets_[static_cast<std::size_t>(r)];
    }
    coo_rows_.clear();
    coo_rows_.shrink_to_fit();
    coo_cols_.clear();
    coo_cols_.shrink_to_fit();
    coo_values_.clear();
    coo_values_.shrink_to_fit();
    finalized_ = true;
}

void SparseMatrix::require_finalized(const char* op) const {
    if (!finalized_) {
        throw std::logic_error(std::string("SparseMatrix::") + op + " before finalize");
    }
}

std::span<const int> SparseMatrix::row_offsets() const {
    require_finalized("row_offsets");
    return row_offsets_;
}

std::span<const int> SparseMatrix::col_indices() const {
    require_finalized("col_indices");
    return col_indices_;
}

std::span<const double> SparseMatrix::values() const {
    require_finalized("values");
    return values_;
}

double SparseMatrix::coeff(int row, int col) const {
    require_finalized("coeff");
    const auto begin = col_indices_.begin() + row_offsets_[static_cast<std::size_t>(row)];
    const auto end = col_indices_.begin() + row_offsets_[static_cast<std::size_t>(row) + 1];
    const auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) return 0.0;
    return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
    require_finalized("multiply");
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("SparseMatrix::multiply: size mismatch");
    }
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r < n_; ++r) {
        double sum = 0.0;
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k) {
            sum += values_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(r)] = sum;
    }
    return y;
}

void SparseMatrix::multiply_extended(std::span<const double> x, std::span<long double> y) const {
    require_finalized("multiply_extended");
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
        throw std::invalid_argument("SparseMatrix::multiply_extended: size mismatch");
    }
    for (int r = 0; r < n_; ++r) {
        long double sum = 0.0L;
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k) {
            sum += static_cast<long double>(values_[static_cast<std::size_t>(k)]) *
                   static_cast<long double>(x[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])]);
        }
        y[static_cast<std::size_t>(r)] = sum;
    }
}

}  // namespace adrfem

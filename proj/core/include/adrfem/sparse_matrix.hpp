#pragma once

#include <span>
#include <vector>

namespace adrfem {

/// Square sparse matrix assembled from (row, col, value) contributions and
/// finalized into a compressed row layout. Duplicate coordinates are summed
/// at finalization; entries with |value| below the drop tolerance are
/// discarded there. Immutable (and shareable across threads) once finalized.
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(int n);

    int size() const { return n_; }
    bool finalized() const { return finalized_; }
    int nnz() const { return static_cast<int>(values_.size()); }

    /// Accumulate a coordinate entry. Only valid before finalize().
    void add(int row, int col, double value);

    /// Sort, merge duplicates, drop entries with |value| < drop_tol, build CSR.
    void finalize(double drop_tol = 0.0);

    std::span<const int> row_offsets() const;
    std::span<const int> col_indices() const;
    std::span<const double> values() const;

    /// Entry lookup (0 for absent positions). Requires finalized().
    double coeff(int row, int col) const;

    std::vector<double> multiply(std::span<const double> x) const;

    /// y = A x accumulated in extended precision, for residual checks.
    void multiply_extended(std::span<const double> x, std::span<long double> y) const;

private:
    void require_finalized(const char* op) const;

    int n_ = 0;
    bool finalized_ = false;
    std::vector<int> coo_rows_;
    std::vector<int> coo_cols_;
    std::vector<double> coo_values_;
    std::vector<int> row_offsets_;
    std::vector<int> col_indices_;
    std::vector<double> values_;
};

}  // namespace adrfem

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adrfem/sparse_matrix.hpp"

namespace adrfem {

enum class SolveMethod {
    direct,    ///< sparse LU with partial pivoting, plus iterative refinement
    bicgstab,  ///< Krylov fallback with diagonal preconditioning
};

struct SolveReport {
    SolveMethod method = SolveMethod::direct;
    int iterations = 0;     ///< refinement steps for direct, Krylov iterations otherwise
    double residual = 0.0;  ///< ||A x - b|| / ||b||, recomputed in extended precision
};

struct SolveOptions {
    double tol = 1e-12;  ///< required relative residual
    SolveMethod method = SolveMethod::direct;
    int max_refinement_steps = 4;
};

/// Thrown when a system is singular or the requested tolerance cannot be
/// reached; carries the diagnostic in what().
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Relative residual ||A x - b|| / ||b||, accumulated in long double.
/// Returns 0 when b is the zero vector and x solves exactly.
double relative_residual(const SparseMatrix& A, std::span<const double> x, std::span<const double> b);

/// Solve A x = b to the requested relative residual. Deterministic given
/// identical inputs and method. Throws SolveError instead of returning an
/// inaccurate solution.
std::pair<std::vector<double>, SolveReport> solve(const SparseMatrix& A, std::span<const double> b,
                                                  const SolveOptions& options = {});

}  // namespace adrfem

#include "adrfem/solver.hpp"

#include <cmath>
#include <limits>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace adrfem {

namespace {

using EigenSparse = Eigen::SparseMatrix<double>;

EigenSparse to_eigen(const SparseMatrix& A) {
    const auto offsets = A.row_offsets();
    const auto cols = A.col_indices();
    const auto vals = A.values();
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(A.nnz()));
    for (int r = 0; r < A.size(); ++r) {
        for (int k = offsets[static_cast<std::size_t>(r)]; k < offsets[static_cast<std::size_t>(r) + 1]; ++k) {
            triplets.emplace_back(r, cols[static_cast<std::size_t>(k)], vals[static_cast<std::size_t>(k)]);
        }
    }
    EigenSparse M(A.size(), A.size());
    M.setFromTriplets(triplets.begin(), triplets.end());
    M.makeCompressed();
    return M;
}

long double norm2_extended(std::span<const double> v) {
    long double sum = 0.0L;
    for (double x : v) sum += static_cast<long double>(x) * static_cast<long double>(x);
    return std::sqrt(sum);
}

// r = b - A x in extended precision, returned rounded to double.
std::vector<double> compute_residual(const SparseMatrix& A, std::span<const double> x,
                                     std::span<const double> b, long double* norm_out) {
    std::vector<long double> ax(static_cast<std::size_t>(A.size()));
    A.multiply_extended(x, ax);
    std::vector<double> r(static_cast<std::size_t>(A.size()));
    long double sum = 0.0L;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const long double ri = static_cast<long double>(b[i]) - ax[i];
        r[i] = static_cast<double>(ri);
        sum += ri * ri;
    }
    if (norm_out) *norm_out = std::sqrt(sum);
    return r;
}

}  // namespace

double relative_residual(const SparseMatrix& A, std::span<const double> x, std::span<const double> b) {
    long double rnorm = 0.0L;
    compute_residual(A, x, b, &rnorm);
    const long double bnorm = norm2_extended(b);
    if (bnorm == 0.0L) {
        return rnorm == 0.0L ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(rnorm / bnorm);
}

std::pair<std::vector<double>, SolveReport> solve(const SparseMatrix& A, std::span<const double> b,
                                                  const SolveOptions& options) {
    if (!A.finalized()) {
        throw std::logic_error("solve: matrix not finalized");
    }
    if (static_cast<int>(b.size()) != A.size()) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    if (A.size() == 0) {
        return {std::vector<double>{}, SolveReport{options.method, 0, 0.0}};
    }

    const EigenSparse M = to_eigen(A);
    const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), static_cast<Eigen::Index>(b.size()));
    const long double bnorm = norm2_extended(b);

    std::vector<double> x(b.size(), 0.0);
    SolveReport report;
    report.method = options.method;

    if (options.method == SolveMethod::direct) {
        Eigen::SparseLU<EigenSparse, Eigen::COLAMDOrdering<int>> lu;
        lu.analyzePattern(M);
        lu.factorize(M);
        if (lu.info() != Eigen::Success) {
            throw SolveError("solve: LU factorization failed (singular or near-singular pivot): " +
                             lu.lastErrorMessage());
        }
        Eigen::VectorXd sol = lu.solve(rhs);
        Eigen::Map<Eigen::VectorXd>(x.data(), sol.size()) = sol;

        if (bnorm == 0.0L) {
            // Unique solution of a nonsingular homogeneous system.
            std::fill(x.begin(), x.end(), 0.0);
            report.residual = 0.0;
            return {std::move(x), report};
        }

        long double rnorm = 0.0L;
        std::vector<double> r = compute_residual(A, x, b, &rnorm);
        long double best = rnorm;
        int steps = 0;
        while (static_cast<double>(rnorm / bnorm) > options.tol && steps < options.max_refinement_steps) {
            const Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<Eigen::Index>(r.size()));
            Eigen::VectorXd d = lu.solve(rv);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += d[static_cast<Eigen::Index>(i)];
            ++steps;
            r = compute_residual(A, x, b, &rnorm);
            if (rnorm >= best) break;  // stagnation
            best = rnorm;
        }
        report.iterations = steps;
        report.residual = static_cast<double>(rnorm / bnorm);
        if (report.residual > options.tol) {
            throw SolveError("solve: residual " + std::to_string(report.residual) +
                             " above tolerance " + std::to_string(options.tol) +
                             " after " + std::to_string(steps) + " refinement steps (stagnation)");
        }
        return {std::move(x), report};
    }

    Eigen::BiCGSTAB<EigenSparse, Eigen::DiagonalPreconditioner<double>> krylov;
    krylov.setTolerance(options.tol * 0.1);
    krylov.setMaxIterations(4 * A.size());
    krylov.compute(M);
    Eigen::VectorXd sol = krylov.solve(rhs);
    Eigen::Map<Eigen::VectorXd>(x.data(), sol.size()) = sol;
    report.iterations = static_cast<int>(krylov.iterations());
    report.residual = relative_residual(A, x, b);
    if (!(report.residual <= options.tol)) {
        throw SolveError("solve: bicgstab stagnated at relative residual " +
                         std::to_string(report.residual) + " after " +
                         std::to_string(report.iterations) + " iterations");
    }
    return {std::move(x), report};
}

}  // namespace adrfem

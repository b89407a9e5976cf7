#pragma once

#include <array>
#include <span>
#include <vector>

#include "adrfem/mesh.hpp"
#include "adrfem/problem.hpp"
#include "adrfem/quadrature.hpp"
#include "adrfem/sparse_matrix.hpp"

namespace adrfem {

struct AssemblyOptions {
    /// Keep the -dD1/dx d/dx - dD2/dy d/dy terms when applying the operator
    /// to P1 functions (their second derivatives vanish on element
    /// interiors). Dropping them is provided for comparison only.
    bool coefficient_gradient_terms = true;
};

/// Linear system over the interior (free) degrees of freedom after Dirichlet
/// elimination; known boundary values are moved to the right-hand side.
struct SparseSystem {
    SparseMatrix matrix;            ///< n_free x n_free, finalized
    std::vector<double> rhs;        ///< length n_free
    std::vector<int> free_to_node;  ///< free dof -> mesh node index
    std::vector<int> node_to_free;  ///< mesh node -> free dof index, -1 on the boundary
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Local 3x3 matrix (row = test function, column = trial function) and load
/// vector of one element, including the subgrid stabilization term when
/// tau_e > 0. tau_e = 0 yields the plain Galerkin contribution.
struct ElementContribution {
    Mat3 matrix{};
    std::array<double, 3> rhs{};
};

ElementContribution element_contribution(const Mesh& mesh, int e, const ProblemDefinition& p,
                                         double tau_e, const QuadratureRule& rule,
                                         const AssemblyOptions& options = {});

/// Plain Galerkin assembly of the bilinear form
///   int D1 dc/dx dd/dx + int D2 dc/dy dd/dy + int d (u . grad c) + int mu c d
/// against the load int q d, with Dirichlet elimination.
SparseSystem assemble_galerkin(const Mesh& mesh, const ProblemDefinition& p, const QuadratureRule& rule,
                               const AssemblyOptions& options = {});

/// Subgrid-scale stabilized assembly: Galerkin entries plus, elementwise,
/// int (-L* d) tau (L c) on the matrix and int (-L* d) tau q on the load,
/// with L applied to P1 functions. tau holds one value per element; an
/// element with tau_e = 0 contributes exactly its Galerkin entries.
/// Negative tau entries are rejected.
SparseSystem assemble_sgs(const Mesh& mesh, const ProblemDefinition& p, std::span<const double> tau,
                          const QuadratureRule& rule, const AssemblyOptions& options = {});

/// Convenience overload with a uniform stabilization parameter.
SparseSystem assemble_sgs(const Mesh& mesh, const ProblemDefinition& p, double tau,
                          const QuadratureRule& rule, const AssemblyOptions& options = {});

/// Full n_pt x n_pt matrix without Dirichlet elimination (all rows and
/// columns), as needed for non-negativity diagnostics and debugging.
SparseMatrix assemble_full_matrix(const Mesh& mesh, const ProblemDefinition& p, std::span<const double> tau,
                                  const QuadratureRule& rule, const AssemblyOptions& options = {});

/// Nodal coefficients over all mesh nodes; boundary entries carry the
/// Dirichlet data.
struct SolutionField {
    std::vector<double> values;

    double operator[](int node) const { return values[static_cast<std::size_t>(node)]; }
};

/// Scatter the free-dof solution into a full nodal field, filling boundary
/// nodes from the Dirichlet data.
SolutionField expand_solution(const Mesh& mesh, const ProblemDefinition& p, const SparseSystem& system,
                              std::span<const double> free_values);

/// Nodal interpolant of a scalar function.
SolutionField nodal_interpolant(const Mesh& mesh, const ScalarFn& f);

}  // namespace adrfem

#include "adrfem/assembly.hpp"

#include <stdexcept>
#include <string>

namespace adrfem {

namespace {

void check_rule(const QuadratureRule& rule) {
    if (rule.degree < 2) {
        throw std::invalid_argument("assembly: quadrature rule must be exact to degree >= 2");
    }
}

void check_tau(std::span<const double> tau, int n_elements) {
    if (static_cast<int>(tau.size()) != n_elements) {
        throw std::invalid_argument("assembly: tau must hold one value per element");
    }
    for (double t : tau) {
        if (t < 0.0) {
            throw std::invalid_argument("assembly: negative stabilization parameter");
        }
    }
}

}  // namespace

ElementContribution element_contribution(const Mesh& mesh, int e, const ProblemDefinition& p,
                                         double tau_e, const QuadratureRule& rule,
                                         const AssemblyOptions& options) {
    const ElementGeometry geom = element_geometry(mesh, e);
    std::array<double, 3> gx{};
    std::array<double, 3> gy{};
    for (int i = 0; i < 3; ++i) {
        const Vec2 g = geom.shape_gradient(i);
        gx[static_cast<std::size_t>(i)] = g.x;
        gy[static_cast<std::size_t>(i)] = g.y;
    }

    ElementContribution out;
    for (const auto& qp : rule.points) {
        const std::array<double, 3> shape{qp.l1, qp.l2, qp.l3};
        const double x = qp.l1 * geom.vertex[0].x + qp.l2 * geom.vertex[1].x + qp.l3 * geom.vertex[2].x;
        const double y = qp.l1 * geom.vertex[0].y + qp.l2 * geom.vertex[1].y + qp.l3 * geom.vertex[2].y;
        const double weight = qp.w * geom.area;

        const double D1 = p.D1(x, y);
        const double D2 = p.D2(x, y);
        const double v1 = p.u1(x, y);
        const double v2 = p.u2(x, y);
        const double mu = p.mu(x, y);
        const double q = p.q(x, y);

        for (int b = 0; b < 3; ++b) {  // test function
            const auto sb = static_cast<std::size_t>(b);
            for (int a = 0; a < 3; ++a) {  // trial function
                const auto sa = static_cast<std::size_t>(a);
                const double diffusion = D1 * gx[sa] * gx[sb] + D2 * gy[sa] * gy[sb];
                const double advection = shape[sb] * (v1 * gx[sa] + v2 * gy[sa]);
                const double reaction = mu * shape[sa] * shape[sb];
                out.matrix[sb][sa] += weight * (diffusion + advection + reaction);
            }
            out.rhs[sb] += weight * q * shape[sb];
        }

        if (tau_e > 0.0) {
            const double dD1 = options.coefficient_gradient_terms ? p.dD1_dx(x, y) : 0.0;
            const double dD2 = options.coefficient_gradient_terms ? p.dD2_dy(x, y) : 0.0;
            // On P1 functions second derivatives vanish inside the element:
            //   L N   = -dD1/dx Nx - dD2/dy Ny + u . grad N + mu N
            //   -L* N =  dD1/dx Nx + dD2/dy Ny + u . grad N - mu N
            std::array<double, 3> op{};
            std::array<double, 3> minus_adjoint{};
            for (int i = 0; i < 3; ++i) {
                const auto si = static_cast<std::size_t>(i);
                const double grad_part = v1 * gx[si] + v2 * gy[si];
                const double coeff_part = dD1 * gx[si] + dD2 * gy[si];
                op[si] = -coeff_part + grad_part + mu * shape[si];
                minus_adjoint[si] = coeff_part + grad_part - mu * shape[si];
            }
            for (int b = 0; b < 3; ++b) {
                const auto sb = static_cast<std::size_t>(b);
                const double test_factor = weight * tau_e * minus_adjoint[sb];
                for (int a = 0; a < 3; ++a) {
                    out.matrix[sb][static_cast<std::size_t>(a)] += test_factor * op[static_cast<std::size_t>(a)];
                }
                out.rhs[sb] += test_factor * q;
            }
        }
    }
    return out;
}

namespace {

SparseSystem assemble_impl(const Mesh& mesh, const ProblemDefinition& p, std::span<const double> tau,
                           const QuadratureRule& rule, const AssemblyOptions& options) {
    check_rule(rule);
    SparseSystem system;
    system.node_to_free = mesh.free_index;
    system.free_to_node.resize(static_cast<std::size_t>(mesh.n_free));
    for (int node = 0; node < mesh.n_pt(); ++node) {
        const int f = mesh.free_index[static_cast<std::size_t>(node)];
        if (f >= 0) system.free_to_node[static_cast<std::size_t>(f)] = node;
    }
    system.matrix = SparseMatrix(mesh.n_free);
    system.rhs.assign(static_cast<std::size_t>(mesh.n_free), 0.0);

    for (int e = 0; e < mesh.n_elements(); ++e) {
        const ElementContribution local =
            element_contribution(mesh, e, p, tau[static_cast<std::size_t>(e)], rule, options);
        const auto& tri = mesh.triangles[static_cast<std::size_t>(e)];
        for (int b = 0; b < 3; ++b) {
            const int row_node = tri[static_cast<std::size_t>(b)];
            const int row = mesh.free_index[static_cast<std::size_t>(row_node)];
            if (row < 0) continue;  // Dirichlet row eliminated
            for (int a = 0; a < 3; ++a) {
                const int col_node = tri[static_cast<std::size_t>(a)];
                const int col = mesh.free_index[static_cast<std::size_t>(col_node)];
                const double entry = local.matrix[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
                if (col >= 0) {
                    system.matrix.add(row, col, entry);
                } else {
                    const Vec2 pos = mesh.nodes[static_cast<std::size_t>(col_node)];
                    system.rhs[static_cast<std::size_t>(row)] -= entry * p.dirichlet(pos.x, pos.y);
                }
            }
            system.rhs[static_cast<std::size_t>(row)] += local.rhs[static_cast<std::size_t>(b)];
        }
    }
    system.matrix.finalize();
    return system;
}

}  // namespace

SparseSystem assemble_galerkin(const Mesh& mesh, const ProblemDefinition& p, const QuadratureRule& rule,
                               const AssemblyOptions& options) {
    const std::vector<double> zero(static_cast<std::size_t>(mesh.n_elements()), 0.0);
    return assemble_impl(mesh, p, zero, rule, options);
}

SparseSystem assemble_sgs(const Mesh& mesh, const ProblemDefinition& p, std::span<const double> tau,
                          const QuadratureRule& rule, const AssemblyOptions& options) {
    check_tau(tau, mesh.n_elements());
    return assemble_impl(mesh, p, tau, rule, options);
}

SparseSystem assemble_sgs(const Mesh& mesh, const ProblemDefinition& p, double tau,
                          const QuadratureRule& rule, const AssemblyOptions& options) {
    const std::vector<double> uniform(static_cast<std::size_t>(mesh.n_elements()), tau);
    return assemble_sgs(mesh, p, uniform, rule, options);
}

SparseMatrix assemble_full_matrix(const Mesh& mesh, const ProblemDefinition& p, std::span<const double> tau,
                                  const QuadratureRule& rule, const AssemblyOptions& options) {
    check_rule(rule);
    check_tau(tau, mesh.n_elements());
    SparseMatrix matrix(mesh.n_pt());
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const ElementContribution local =
            element_contribution(mesh, e, p, tau[static_cast<std::size_t>(e)], rule, options);
        const auto& tri = mesh.triangles[static_cast<std::size_t>(e)];
        for (int b = 0; b < 3; ++b) {
            for (int a = 0; a < 3; ++a) {
                matrix.add(tri[static_cast<std::size_t>(b)], tri[static_cast<std::size_t>(a)],
                           local.matrix[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
            }
        }
    }
    matrix.finalize();
    return matrix;
}

SolutionField expand_solution(const Mesh& mesh, const ProblemDefinition& p, const SparseSystem& system,
                              std::span<const double> free_values) {
    if (static_cast<int>(free_values.size()) != mesh.n_free) {
        throw std::invalid_argument("expand_solution: free vector size mismatch");
    }
    SolutionField field;
    field.values.resize(static_cast<std::size_t>(mesh.n_pt()));
    for (int node = 0; node < mesh.n_pt(); ++node) {
        const int f = system.node_to_free[static_cast<std::size_t>(node)];
        if (f >= 0) {
            field.values[static_cast<std::size_t>(node)] = free_values[static_cast<std::size_t>(f)];
        } else {
            const Vec2 pos = mesh.nodes[static_cast<std::size_t>(node)];
            field.values[static_cast<std::size_t>(node)] = p.dirichlet(pos.x, pos.y);
        }
    }
    return field;
}

SolutionField nodal_interpolant(const Mesh& mesh, const ScalarFn& f) {
    SolutionField field;
    field.values.resize(static_cast<std::size_t>(mesh.n_pt()));
    for (int node = 0; node < mesh.n_pt(); ++node) {
        const Vec2 pos = mesh.nodes[static_cast<std::size_t>(node)];
        field.values[static_cast<std::size_t>(node)] = f(pos.x, pos.y);
    }
    return field;
}

}  // namespace adrfem

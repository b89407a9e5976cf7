#pragma once

#include <functional>
#include <optional>
#include <string>

namespace adrfem {

using ScalarFn = std::function<double(double, double)>;

/// Scalar field with analytic first and second partial derivatives.
struct SmoothField {
    ScalarFn value;
    ScalarFn ddx;
    ScalarFn ddy;
    ScalarFn d2dx2;
    ScalarFn d2dy2;
};

/// Sup norms of the diffusion coefficients and velocity components over the
/// unit square.
struct SupBounds {
    double D_sup = 0.0;
    double U_sup = 0.0;
};

/// Data of the steady advection-diffusion-reaction problem
///   -d/dx(D1 dc/dx) - d/dy(D2 dc/dy) + u . grad c + mu c = q   on (0,1)^2
/// with Dirichlet boundary values. Coefficient evaluation is pure and
/// thread-safe; instances are treated as immutable once built.
struct ProblemDefinition {
    ScalarFn D1;
    ScalarFn D2;
    ScalarFn dD1_dx;  ///< x-derivative of D1, enters the operator on P1 functions
    ScalarFn dD2_dy;  ///< y-derivative of D2
    ScalarFn u1;
    ScalarFn u2;
    ScalarFn mu;
    ScalarFn q;
    ScalarFn dirichlet;
    std::optional<SmoothField> exact;
    std::optional<SupBounds> analytic_sup;  ///< set when the sup norms are known in closed form
    double mu_sup = 0.0;                    ///< sup norm of mu, used by the stabilization parameter
};

/// Apply the full second-order operator to a smooth field at one point:
///   -D1 f_xx - D2 f_yy - dD1/dx f_x - dD2/dy f_y + u . grad f + mu f.
double apply_operator(const ProblemDefinition& p, const SmoothField& f, double x, double y);

/// Same with the advection sign flipped (formal adjoint).
double apply_adjoint(const ProblemDefinition& p, const SmoothField& f, double x, double y);

/// Coefficient family with linear velocity components and diffusion
/// proportional to the square of the respective velocity factor:
///   D1 = d1 (1 + eps x)^2,  D2 = d2 (1 + eps y)^2,
///   u1 = a1 (1 + eps x),    u2 = a2 (1 + eps y),    mu constant.
/// The exact solution is c = sin(x y (x-1)(y-1)) with q built from its
/// analytic partial derivatives; homogeneous Dirichlet data.
ProblemDefinition hydrology_problem(double d1, double d2, double a1, double a2, double eps, double mu);

/// Diffusion-dominated benchmark:
/// D1=(1+0.02x)^2, D2=0.1(1+0.02y)^2, u=(0.5(1+0.02x), -0.5(1+0.02y)), mu=0.01.
ProblemDefinition case1_problem();

/// Advection-reaction-dominated benchmark:
/// D1=1e-7(1+0.02x)^2, D2=1e-8(1+0.02y)^2, u=((1+0.02x), -(1+0.02y)), mu=1.
ProblemDefinition case2_problem();

/// Constant-coefficient problem with zero source and zero boundary values.
ProblemDefinition constant_problem(double D1, double D2, double u1, double u2, double mu);

/// Constant-coefficient problem manufactured around the linear exact solution
/// cx*x + cy*y + c0 (inhomogeneous Dirichlet data lifted from it).
ProblemDefinition constant_problem_linear_exact(double D1, double D2, double u1, double u2, double mu,
                                                double cx, double cy, double c0);

/// Sup norms of the coefficients: analytic when available, otherwise by
/// dense sampling on a grid (default 101x101) -- an approximation.
SupBounds sup_bounds(const ProblemDefinition& p, int samples_per_side = 101);

/// Checks D1, D2 > 0 on a sampling grid. Throws std::invalid_argument on failure.
void validate_problem(const ProblemDefinition& p, int samples_per_side = 101);

/// Build a problem from a plain-text key=value config. Recognized forms:
///   form = hydrology   with keys d1, d2, a1, a2, eps, mu
///   form = constant    with keys D1, D2, u1, u2, mu and optional
///                      exact = linear with cx, cy, c0
ProblemDefinition load_problem(const std::string& path);

}  // namespace adrfem

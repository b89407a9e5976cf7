#include "adrfem/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "adrfem/config.hpp"

namespace adrfem {

double apply_operator(const ProblemDefinition& p, const SmoothField& f, double x, double y) {
    return -p.D1(x, y) * f.d2dx2(x, y) - p.D2(x, y) * f.d2dy2(x, y)
           - p.dD1_dx(x, y) * f.ddx(x, y) - p.dD2_dy(x, y) * f.ddy(x, y)
           + p.u1(x, y) * f.ddx(x, y) + p.u2(x, y) * f.ddy(x, y)
           + p.mu(x, y) * f.value(x, y);
}

double apply_adjoint(const ProblemDefinition& p, const SmoothField& f, double x, double y) {
    return -p.D1(x, y) * f.d2dx2(x, y) - p.D2(x, y) * f.d2dy2(x, y)
           - p.dD1_dx(x, y) * f.ddx(x, y) - p.dD2_dy(x, y) * f.ddy(x, y)
           - p.u1(x, y) * f.ddx(x, y) - p.u2(x, y) * f.ddy(x, y)
           + p.mu(x, y) * f.value(x, y);
}

namespace {

// c = sin(g) with g = (x^2 - x)(y^2 - y); vanishes on the boundary of the
// unit square.
SmoothField product_sine_solution() {
    SmoothField f;
    f.value = [](double x, double y) { return std::sin((x * x - x) * (y * y - y)); };
    f.ddx = [](double x, double y) {
        const double g = (x * x - x) * (y * y - y);
        return std::cos(g) * (2.0 * x - 1.0) * (y * y - y);
    };
    f.ddy = [](double x, double y) {
        const double g = (x * x - x) * (y * y - y);
        return std::cos(g) * (x * x - x) * (2.0 * y - 1.0);
    };
    f.d2dx2 = [](double x, double y) {
        const double R = y * y - y;
        const double g = (x * x - x) * R;
        const double gx = (2.0 * x - 1.0) * R;
        return -std::sin(g) * gx * gx + std::cos(g) * 2.0 * R;
    };
    f.d2dy2 = [](double x, double y) {
        const double P = x * x - x;
        const double g = P * (y * y - y);
        const double gy = P * (2.0 * y - 1.0);
        return -std::sin(g) * gy * gy + std::cos(g) * 2.0 * P;
    };
    return f;
}

ScalarFn manufactured_source(const ProblemDefinition& p) {
    const SmoothField exact = *p.exact;
    // Capture the coefficient functions by value; ProblemDefinition is
    // immutable after construction so the copies stay consistent.
    const ProblemDefinition coeffs = p;
    return [coeffs, exact](double x, double y) { return apply_operator(coeffs, exact, x, y); };
}

ScalarFn constant_fn(double v) {
    return [v](double, double) { return v; };
}

}  // namespace

ProblemDefinition hydrology_problem(double d1, double d2, double a1, double a2, double eps, double mu) {
    ProblemDefinition p;
    p.D1 = [d1, eps](double x, double) { const double s = 1.0 + eps * x; return d1 * s * s; };
    p.D2 = [d2, eps](double, double y) { const double t = 1.0 + eps * y; return d2 * t * t; };
    p.dD1_dx = [d1, eps](double x, double) { return 2.0 * d1 * eps * (1.0 + eps * x); };
    p.dD2_dy = [d2, eps](double, double y) { return 2.0 * d2 * eps * (1.0 + eps * y); };
    p.u1 = [a1, eps](double x, double) { return a1 * (1.0 + eps * x); };
    p.u2 = [a2, eps](double, double y) { return a2 * (1.0 + eps * y); };
    p.mu = constant_fn(mu);
    p.dirichlet = constant_fn(0.0);
    p.exact = product_sine_solution();
    p.q = manufactured_source(p);
    // The coefficient factors increase monotonically for eps >= 0, so the
    // sup norms sit at x = y = 1.
    if (eps >= 0.0) {
        const double edge = 1.0 + eps;
        p.analytic_sup = SupBounds{std::max(d1, d2) * edge * edge,
                                   std::max(std::abs(a1), std::abs(a2)) * edge};
    }
    p.mu_sup = std::abs(mu);
    validate_problem(p);
    return p;
}

ProblemDefinition case1_problem() {
    return hydrology_problem(1.0, 0.1, 0.5, -0.5, 0.02, 0.01);
}

ProblemDefinition case2_problem() {
    return hydrology_problem(1e-7, 1e-8, 1.0, -1.0, 0.02, 1.0);
}

ProblemDefinition constant_problem(double D1, double D2, double u1, double u2, double mu) {
    ProblemDefinition p;
    p.D1 = constant_fn(D1);
    p.D2 = constant_fn(D2);
    p.dD1_dx = constant_fn(0.0);
    p.dD2_dy = constant_fn(0.0);
    p.u1 = constant_fn(u1);
    p.u2 = constant_fn(u2);
    p.mu = constant_fn(mu);
    p.q = constant_fn(0.0);
    p.dirichlet = constant_fn(0.0);
    p.analytic_sup = SupBounds{std::max(D1, D2), std::max(std::abs(u1), std::abs(u2))};
    p.mu_sup = std::abs(mu);
    return p;
}

ProblemDefinition constant_problem_linear_exact(double D1, double D2, double u1, double u2, double mu,
                                                double cx, double cy, double c0) {
    ProblemDefinition p = constant_problem(D1, D2, u1, u2, mu);
    SmoothField f;
    f.value = [cx, cy, c0](double x, double y) { return cx * x + cy * y + c0; };
    f.ddx = constant_fn(cx);
    f.ddy = constant_fn(cy);
    f.d2dx2 = constant_fn(0.0);
    f.d2dy2 = constant_fn(0.0);
    p.exact = f;
    p.q = manufactured_source(p);
    p.dirichlet = f.value;
    return p;
}

SupBounds sup_bounds(const ProblemDefinition& p, int samples_per_side) {
    if (p.analytic_sup) return *p.analytic_sup;
    if (samples_per_side < 2) {
        throw std::invalid_argument("sup_bounds: need at least 2 samples per side");
    }
    SupBounds b{0.0, 0.0};
    const int m = samples_per_side;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const double x = static_cast<double>(i) / (m - 1);
            const double y = static_cast<double>(j) / (m - 1);
            b.D_sup = std::max({b.D_sup, std::abs(p.D1(x, y)), std::abs(p.D2(x, y))});
            b.U_sup = std::max({b.U_sup, std::abs(p.u1(x, y)), std::abs(p.u2(x, y))});
        }
    }
    return b;
}

void validate_problem(const ProblemDefinition& p, int samples_per_side) {
    const int m = samples_per_side;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const double x = static_cast<double>(i) / (m - 1);
            const double y = static_cast<double>(j) / (m - 1);
            if (!(p.D1(x, y) > 0.0) || !(p.D2(x, y) > 0.0)) {
                throw std::invalid_argument("problem: diffusion coefficients must be positive on [0,1]^2");
            }
        }
    }
}

ProblemDefinition load_problem(const std::string& path) {
    const KeyValueMap kv = parse_key_value_file(path);
    const std::string form = get_string(kv, "form");
    if (form == "hydrology") {
        ProblemDefinition p = hydrology_problem(get_double(kv, "d1"), get_double(kv, "d2"),
                                                get_double(kv, "a1"), get_double(kv, "a2"),
                                                get_double(kv, "eps"), get_double(kv, "mu"));
        // Loaded problems fall back to sampled sup norms.
        p.analytic_sup.reset();
        validate_problem(p);
        return p;
    }
    if (form == "constant") {
        const double D1 = get_double(kv, "D1");
        const double D2 = get_double(kv, "D2");
        const double u1 = get_double(kv, "u1");
        const double u2 = get_double(kv, "u2");
        const double mu = get_double(kv, "mu");
        const std::string exact = get_string_or(kv, "exact", "none");
        ProblemDefinition p;
        if (exact == "linear") {
            p = constant_problem_linear_exact(D1, D2, u1, u2, mu, get_double(kv, "cx"),
                                              get_double(kv, "cy"), get_double(kv, "c0"));
        } else if (exact == "none") {
            p = constant_problem(D1, D2, u1, u2, mu);
        } else {
            throw std::invalid_argument("problem config: unknown exact form '" + exact + "'");
        }
        p.analytic_sup.reset();
        validate_problem(p);
        return p;
    }
    throw std::invalid_argument("problem config: unknown form '" + form + "'");
}

}  // namespace adrfem

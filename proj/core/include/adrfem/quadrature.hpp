#pragma once

#include <vector>

#include "adrfem/mesh.hpp"

namespace adrfem {

struct QuadraturePoint {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;  ///< barycentric coordinates
    double w = 0.0;                        ///< weights sum to 1; scale by element area at use
};

struct QuadratureRule {
    int degree = 0;  ///< polynomials up to this total degree are integrated exactly
    std::vector<QuadraturePoint> points;
};

/// Smallest standard symmetric triangle rule exact to at least `degree`:
/// 3-point (degree 2), 6-point (degree 4), 7-point (degree 5).
/// Throws std::invalid_argument for degree < 0 or > 5.
const QuadratureRule& triangle_rule(int degree);

/// The degree-2, degree-4 and degree-5 rules.
std::vector<QuadratureRule> standard_rules();

/// Integrate f(x, y) over one element with the given rule.
template <typename F>
double integrate(const QuadratureRule& rule, const ElementGeometry& geom, F&& f) {
    double sum = 0.0;
    for (const auto& qp : rule.points) {
        const double x = qp.l1 * geom.vertex[0].x + qp.l2 * geom.vertex[1].x + qp.l3 * geom.vertex[2].x;
        const double y = qp.l1 * geom.vertex[0].y + qp.l2 * geom.vertex[1].y + qp.l3 * geom.vertex[2].y;
        sum += qp.w * f(x, y);
    }
    return geom.area * sum;
}

}  // namespace adrfem

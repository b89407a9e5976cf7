#include "adrfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adrfem {

namespace {

QuadratureRule make_degree2() {
    // Interior 3-point rule.
    const double a = 2.0 / 3.0;
    const double b = 1.0 / 6.0;
    const double w = 1.0 / 3.0;
    QuadratureRule rule;
    rule.degree = 2;
    rule.points = {{a, b, b, w}, {b, a, b, w}, {b, b, a, w}};
    return rule;
}

QuadratureRule make_degree4() {
    // Dunavant 6-point rule.
    const double a1 = 0.44594849091596489;
    const double b1 = 0.10810301816807022;
    const double w1 = 0.22338158967801147;
    const double a2 = 0.091576213509770743;
    const double b2 = 0.81684757298045851;
    const double w2 = 0.10995174365532187;
    QuadratureRule rule;
    rule.degree = 4;
    rule.points = {{b1, a1, a1, w1}, {a1, b1, a1, w1}, {a1, a1, b1, w1},
                   {b2, a2, a2, w2}, {a2, b2, a2, w2}, {a2, a2, b2, w2}};
    return rule;
}

QuadratureRule make_degree5() {
    // 7-point rule: centroid plus two symmetric orbits.
    const double s = std::sqrt(15.0);
    const double a1 = (6.0 - s) / 21.0;
    const double b1 = 1.0 - 2.0 * a1;
    const double w1 = (155.0 - s) / 1200.0;
    const double a2 = (6.0 + s) / 21.0;
    const double b2 = 1.0 - 2.0 * a2;
    const double w2 = (155.0 + s) / 1200.0;
    const double third = 1.0 / 3.0;
    QuadratureRule rule;
    rule.degree = 5;
    rule.points = {{third, third, third, 9.0 / 40.0},
                   {b1, a1, a1, w1}, {a1, b1, a1, w1}, {a1, a1, b1, w1},
                   {b2, a2, a2, w2}, {a2, b2, a2, w2}, {a2, a2, b2, w2}};
    return rule;
}

}  // namespace

const QuadratureRule& triangle_rule(int degree) {
    static const QuadratureRule deg2 = make_degree2();
    static const QuadratureRule deg4 = make_degree4();
    static const QuadratureRule deg5 = make_degree5();
    if (degree < 0 || degree > 5) {
        throw std::invalid_argument("triangle_rule: no rule for degree " + std::to_string(degree));
    }
    if (degree <= 2) return deg2;
    if (degree <= 4) return deg4;
    return deg5;
}

std::vector<QuadratureRule> standard_rules() {
    return {triangle_rule(2), triangle_rule(4), triangle_rule(5)};
}

}  // namespace adrfem

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace adrfem {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Conforming triangulation of the unit square. Immutable after
/// construction; safe to share across threads.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;  ///< counter-clockwise vertex indices
    std::vector<char> boundary_node_flags;      ///< 1 for nodes with x or y in {0,1}
    std::vector<int> free_index;                ///< node -> interior dof index, -1 on the boundary
    int n_free = 0;

    int n_pt() const { return static_cast<int>(nodes.size()); }
    int n_elements() const { return static_cast<int>(triangles.size()); }
    bool is_boundary(int node) const { return boundary_node_flags[static_cast<std::size_t>(node)] != 0; }
};

/// Per-element geometric quantities for P1 shape functions:
/// N_i has the constant gradient (beta_i, gamma_i) / (2 area).
struct ElementGeometry {
    double area = 0.0;                  ///< signed area, positive for CCW orientation
    std::array<double, 3> beta{};       ///< beta_i = y_j - y_k, (i,j,k) cyclic
    std::array<double, 3> gamma{};      ///< gamma_i = -(x_j - x_k)
    double diameter = 0.0;              ///< longest edge length
    std::array<Vec2, 3> vertex{};

    Vec2 shape_gradient(int i) const {
        return {beta[static_cast<std::size_t>(i)] / (2.0 * area),
                gamma[static_cast<std::size_t>(i)] / (2.0 * area)};
    }
};

/// Uniform n-by-n grid of the unit square, each cell split along the
/// lower-left to upper-right diagonal. (n+1)^2 nodes in lexicographic
/// order (x fastest), 2 n^2 triangles. Throws std::invalid_argument for n < 1.
Mesh build_structured_mesh(int n);

/// Geometry of element e. Throws std::invalid_argument for an invalid index
/// and std::runtime_error for a degenerate (zero-area) triangle.
ElementGeometry element_geometry(const Mesh& mesh, int e);

/// h = max over elements of the element diameter.
double global_mesh_size(const Mesh& mesh);

}  // namespace adrfem

#include "adrfem/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adrfem {

Mesh build_structured_mesh(int n) {
    if (n < 1) {
        throw std::invalid_argument("build_structured_mesh: n must be >= 1, got " + std::to_string(n));
    }
    Mesh mesh;
    const int m = n + 1;
    mesh.nodes.reserve(static_cast<std::size_t>(m) * m);
    mesh.boundary_node_flags.reserve(mesh.nodes.capacity());
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            mesh.nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
            const bool on_boundary = (i == 0 || i == n || j == 0 || j == n);
            mesh.boundary_node_flags.push_back(on_boundary ? 1 : 0);
        }
    }

    mesh.triangles.reserve(2u * static_cast<std::size_t>(n) * n);
    auto node_id = [m](int i, int j) { return j * m + i; };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int ll = node_id(i, j);
            const int lr = node_id(i + 1, j);
            const int ur = node_id(i + 1, j + 1);
            const int ul = node_id(i, j + 1);
            mesh.triangles.push_back({ll, lr, ur});
            mesh.triangles.push_back({ll, ur, ul});
        }
    }

    mesh.free_index.assign(mesh.nodes.size(), -1);
    int next = 0;
    for (std::size_t a = 0; a < mesh.nodes.size(); ++a) {
        if (!mesh.boundary_node_flags[a]) {
            mesh.free_index[a] = next++;
        }
    }
    mesh.n_free = next;
    return mesh;
}

ElementGeometry element_geometry(const Mesh& mesh, int e) {
    if (e < 0 || e >= mesh.n_elements()) {
        throw std::invalid_argument("element_geometry: element index " + std::to_string(e) + " out of range");
    }
    const auto& tri = mesh.triangles[static_cast<std::size_t>(e)];
    ElementGeometry g;
    for (int i = 0; i < 3; ++i) {
        g.vertex[static_cast<std::size_t>(i)] = mesh.nodes[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
    }
    for (int i = 0; i < 3; ++i) {
        const auto& pj = g.vertex[static_cast<std::size_t>((i + 1) % 3)];
        const auto& pk = g.vertex[static_cast<std::size_t>((i + 2) % 3)];
        g.beta[static_cast<std::size_t>(i)] = pj.y - pk.y;
        g.gamma[static_cast<std::size_t>(i)] = -(pj.x - pk.x);
    }
    // 2*area = beta_1 gamma_2 - beta_2 gamma_1, positive iff CCW.
    const double doubled = g.beta[0] * g.gamma[1] - g.beta[1] * g.gamma[0];
    g.area = 0.5 * doubled;
    if (!(g.area > 0.0)) {
        throw std::runtime_error("element_geometry: degenerate or negatively oriented triangle " + std::to_string(e));
    }
    double longest = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto& a = g.vertex[static_cast<std::size_t>(i)];
        const auto& b = g.vertex[static_cast<std::size_t>((i + 1) % 3)];
        longest = std::max(longest, std::hypot(b.x - a.x, b.y - a.y));
    }
    g.diameter = longest;
    return g;
}

double global_mesh_size(const Mesh& mesh) {
    double h = 0.0;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        h = std::max(h, element_geometry(mesh, e).diameter);
    }
    return h;
}

}  // namespace adrfem

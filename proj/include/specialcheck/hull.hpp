#pragma once

#include <optional>
#include <vector>

#include "specialcheck/linalg.hpp"

namespace specialcheck::lorentz {

/// Face lattice of the exact 3D convex hull of projectivized light-cone
/// vectors (Klein model points v/v4). Indices refer to the input vector list.
struct KleinHull {
    std::vector<std::vector<int>> faces;      // each face as a cyclic vertex sequence
    std::vector<std::pair<int, int>> edges;   // normalized (min,max) pairs
    std::vector<int> hull_vertices;           // inputs that are hull vertices

    bool has_edge(int i, int j) const;
    /// Faces containing the given vertex index.
    std::vector<int> faces_at(int v) const;
};

/// Exact hull of >= 4 projectivized points; requires every v4 > 0.
/// Throws Degenerate when the points span less than a 3-dimensional set,
/// and InteriorPoint when an input is not a vertex of its own hull.
KleinHull klein_hull(const std::vector<Vec4>& pts);

/// Result of the Euclidean coplanarity system n·v_i = 1.
struct CoplanarNormal {
    Vec4 n;
    bool degenerate_span = false;  // affine span < 3-plane: n is the minimal-norm representative
};

/// Unique Euclidean normal with n·v_i = 1 for all i, or nullopt when the
/// system is unsolvable. Underdetermined systems yield the minimal-norm
/// solution flagged degenerate_span.
std::optional<CoplanarNormal> coplanar_normal(const std::vector<Vec4>& vectors);

/// n·w - 1: positive certifies a convex meeting, zero a coplanar merge.
QuadExt tilt_excess(const Vec4& n, const Vec4& w);

} // namespace specialcheck::lorentz

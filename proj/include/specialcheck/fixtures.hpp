#pragma once

#include <vector>

#include "specialcheck/cellkit.hpp"
#include "specialcheck/squares.hpp"

namespace specialcheck::fixtures {

/// m x n torus grid as a square complex (m columns, n rows).
squares::SquareComplex torus(int m, int n);
/// One-square Klein bottle (vertical gluing flipped).
squares::SquareComplex klein_square();
/// Three squares pairwise glued around one vertex (corner of a cube).
squares::SquareComplex cube_corner();
/// A single unglued square.
squares::SquareComplex single_square();
/// A graph (no squares): star with k edges.
squares::SquareComplex squareless_star(int k);

std::vector<std::vector<int>> tetrahedron_faces();
std::vector<std::vector<int>> octahedron_faces();
/// The k-antiprism: two k-gons joined by a belt of 2k triangles.
std::vector<std::vector<int>> antiprism_faces(int k);

/// The self-paired ideal octahedron with 2 vertex classes, 3 edge classes of
/// size 4 and 4 face classes (the Whitehead-link pattern); found once by
/// deterministic search and cached.
cellkit::Decomposition whitehead_decomposition();

/// Two ideal tetrahedra glued with both edge classes of size 6 (the
/// figure-eight pattern); deterministic search.
cellkit::Decomposition figure_eight_style_decomposition();

/// All involutive self-gluings of one octahedron whose edge classes all have
/// size four, as correspondence-normalized decompositions (deterministic order).
const std::vector<cellkit::Decomposition>& octahedron_right_angled_pool();

/// The first `limit` two-octahedron gluings with all edge classes of size
/// four, found by pruned depth-first search (deterministic order; includes
/// non-checkered examples).
std::vector<cellkit::Decomposition> two_octahedron_right_angled_pool(int limit);

/// Deterministic sample of right-angled decompositions for property tests:
/// octahedral self-gluings plus two-copy variants.
std::vector<cellkit::Decomposition> random_right_angled_fixtures(int count, unsigned seed);

} // namespace specialcheck::fixtures

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "specialcheck/cellkit.hpp"

namespace specialcheck::checkering {

using cellkit::Decomposition;
using cellkit::PolyhedronCombinatorics;

/// A proper two-coloring of the faces of one polyhedron: color[f] in {0,1},
/// faces sharing an edge get opposite colors.
using Checkering = std::vector<int>;

/// All proper face two-colorings; exactly two when the dual graph is
/// bipartite, empty otherwise.
std::vector<Checkering> polyhedron_checkerings(const PolyhedronCombinatorics& P);

/// A checkering of every polyhedron compatible with all pairings, found by
/// constraint propagation over the two choices per polyhedron.
std::optional<std::vector<Checkering>> decomposition_checkering(const Decomposition& d);

/// Number of connected components of the pairing-constraint graph over the
/// polyhedra (the number of checkerings is 2^components or 0).
int checkering_constraint_components(const Decomposition& d);

/// Two oppositely checkered marked copies of every polyhedron with
/// color-preserving lifted pairings. Output polyhedron 2i+j is copy j of
/// input polyhedron i; output colors record the checkering.
/// Error NoCheckering when some polyhedron has a non-bipartite dual.
Decomposition checkered_double_cover(const Decomposition& d);

/// Whether a decomposition (as a cell complex) is connected.
bool decomposition_connected(const Decomposition& d);

/// Mirror data: for each face of the reference polyhedron, a vertex map
/// realizing the reflection through that face's plane as an anti-automorphism
/// P -> mirror(P) fixing the face pointwise. The identity map is the
/// canonical shadow of the geometric reflection and is always valid.
using MirrorTable = std::map<int, std::map<int, int>>;

/// True iff every pairing's boundary correspondence extends to an
/// orientation-reversing combinatorial isomorphism between its polyhedra
/// (equivalently, composing the pairing with the source-face mirror is an
/// isomorphism onto the target polyhedron). All polyhedra must share the
/// reference's combinatorics; mirrors must be valid (error MissingMirror).
bool reflection_pairing_check(const Decomposition& d, const PolyhedronCombinatorics& reference,
                              const MirrorTable& mirrors);

/// The canonical mirror table: the identity vertex map per face.
MirrorTable identity_mirrors(const PolyhedronCombinatorics& P);

} // namespace specialcheck::checkering

#pragma once

#include <set>
#include <vector>

#include "specialcheck/cellkit.hpp"
#include "specialcheck/hyperplanes.hpp"
#include "specialcheck/squares.hpp"

namespace specialcheck::surfaces {

using cellkit::Decomposition;
using cellkit::Edge;
using cellkit::QuotientComplex;

/// A face side of a decomposition: (polyhedron, face).
using FaceSide = std::pair<int, int>;

struct FlatStep {
    FaceSide side;  // the flat e-neighbor, as a face side
    Edge edge;      // the corresponding edge of that side
};

/// The unique face meeting `side` at angle pi along `e` (two-step rule: pass
/// to the other face g at e, apply the pairing of g, take the face across the
/// image edge). Requires the edge class of e to have four members
/// (error NotRightAngled).
FlatStep flat_neighbor(const Decomposition& d, const QuotientComplex& qc, FaceSide side, Edge e);

/// The closed totally geodesic surface swept out by flat neighbors.
struct FlatSurface {
    std::vector<int> face_classes;          // sorted face-class ids
    std::set<FaceSide> sides;               // face sides reached by propagation
    bool orientable = true;
    int euler_closed = 0;                   // faces - edges + ideal vertex cycles
    int punctures = 0;                      // ideal vertex cycles
    int pi1_index = 1;                      // 1 orientable, 2 nonorientable

    int euler_punctured() const { return euler_closed - punctures; }
    bool same_surface(const FlatSurface& o) const { return face_classes == o.face_classes; }
};

FlatSurface surface_closure(const Decomposition& d, const QuotientComplex& qc, FaceSide seed);

/// The surface carrying a hyperplane of the standard square complex: the
/// closure of the face whose external barycentric edge is parallel to any
/// midline of the hyperplane. Independent of the chosen midline.
FlatSurface hyperplane_surface(const squares::StandardSquareComplex& ssc, const Decomposition& d,
                               const QuotientComplex& qc, const hyperplanes::Hyperplane& h);

/// The face side associated to one midline (exposed for the
/// choice-independence property test).
FaceSide midline_face_side(const squares::StandardSquareComplex& ssc, const hyperplanes::Midline& m);

struct RelationReport {
    int crossing_pairs_checked = 0;
    int external_osculations_checked = 0;
    std::vector<std::string> violations;
    /// For checkered inputs: (face class of H1 side, face class of H2 side)
    /// per crossing pair, so color opposition can be asserted.
    std::vector<std::pair<FaceSide, FaceSide>> crossing_face_sides;
    bool ok() const { return violations.empty(); }
};

/// Verifies the hyperplane/surface dictionary: crossing hyperplanes carry
/// surfaces with perpendicular faces in a common polyhedron; hyperplanes
/// parallel across an external edge are equal with nonorientable surface or
/// distinct with equal orientable surfaces.
RelationReport hyperplane_surface_relations(const squares::StandardSquareComplex& ssc, const Decomposition& d,
                                            const QuotientComplex& qc);

} // namespace specialcheck::surfaces

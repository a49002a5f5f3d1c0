#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specialcheck/cellkit.hpp"

namespace specialcheck::polyhedra {

using cellkit::PolyhedronCombinatorics;

/// Cyclic face sequence with consecutive faces sharing an edge and no three
/// faces sharing a vertex.
struct PrismaticCircuit {
    std::vector<int> faces;
    std::vector<cellkit::Edge> crossed_edges;
};

/// All prismatic k-circuits (k in {3,4}) up to rotation and reflection.
std::vector<PrismaticCircuit> prismatic_circuits(const PolyhedronCombinatorics& P, int k);

struct AndreevVerdict {
    bool ok = false;
    std::string witness;  // failed condition description
};

/// Combinatorial right-angled-ideal criterion: all valences four, no
/// prismatic 3- or 4-circuits, and no two faces flanking a common neighbor
/// share a vertex away from it.
AndreevVerdict andreev_validate(const PolyhedronCombinatorics& P);

/// A 3-valent sphere polyhedron (crushtacean in the augmented-link pipeline).
bool is_crushtacean(const PolyhedronCombinatorics& P);

/// Cuts along a prismatic 3-circuit and completes both sides with a new
/// vertex. Vertex counts satisfy v + 2 = v0 + v1. Error NotPrismatic.
std::pair<PolyhedronCombinatorics, PolyhedronCombinatorics> decompose_crushtacean(
    const PolyhedronCombinatorics& C, const PrismaticCircuit& circuit);

struct FullDecomposition {
    std::vector<PolyhedronCombinatorics> pieces;        // indecomposable pieces
    std::vector<std::string> piece_codes;               // canonical codes, sorted
    bool order_independent = true;                      // exhaustive mode only
};

/// Repeated decomposition along the lexicographically least prismatic
/// 3-circuit; `exhaustive` additionally tries every circuit order and reports
/// whether the resulting multiset is order-independent.
FullDecomposition full_decomposition(const PolyhedronCombinatorics& C, bool exhaustive = false);

/// The nth Loebell polyhedron: two n-gons at dual distance three and 2n
/// pentagons. Error BadN for n < 3.
PolyhedronCombinatorics lobell(int n);

/// Dual-graph distance between two faces.
int dual_distance(const PolyhedronCombinatorics& P, int f, int g);

struct AutomorphismGroup {
    std::vector<PolyhedronCombinatorics::Automorphism> elements;
    int order() const { return static_cast<int>(elements.size()); }
    int orientation_preserving() const;
    /// An involution fixing edge {u,v} setwise and swapping its endpoints,
    /// with the requested orientation character (+1 rotational, -1 reflective).
    bool has_edge_involution(cellkit::Edge e, int orientation) const;
};

AutomorphismGroup automorphism_group(const PolyhedronCombinatorics& P);

/// Vertex- and flag-transitive: the combinatorial regularity used by the
/// hidden-symmetry criterion (tetrahedron and cube at desk scale).
bool is_regular(const PolyhedronCombinatorics& P);

struct Truncation {
    PolyhedronCombinatorics P;        // vertices are edge indices of C
    std::vector<int> face_color;      // 0 white (from a face), 1 black (from a vertex)
    std::map<int, int> black_source;  // black face -> source vertex of C
    std::map<int, int> white_source;  // white face -> source face of C
};

/// One ideal vertex per edge of C, one black triangle per vertex, one white
/// k-gon per k-gon face; the result is 4-valent.
Truncation truncate(const PolyhedronCombinatorics& C);

struct CatalogEntry {
    std::string code;            // canonical dart code
    int vertices = 0;
    int edges = 0;
    std::map<int, int> face_vector;  // face size -> count
    int aut_order = 0;
    PolyhedronCombinatorics P;
};

/// All simple sphere triangulations with up to vmax vertices, generated from
/// the tetrahedron by vertex splitting with canonical-code rejection.
std::vector<PolyhedronCombinatorics> enumerate_triangulations(int vmax, int jobs = 1);

/// All 3-valent sphere polyhedra with at most vmax vertices, optionally
/// filtered to those without prismatic 3-circuits.
std::vector<CatalogEntry> enumerate_crushtaceans(int vmax, bool indecomposable_only, int jobs = 1);

/// All 3-connected simple planar maps with at most emax edges (deletion
/// closure of the triangulations).
std::vector<PolyhedronCombinatorics> enumerate_polyhedral_maps(int emax, int jobs = 1);

/// The medial of a polyhedral map: one vertex per edge, 4-valent.
PolyhedronCombinatorics medial(const PolyhedronCombinatorics& G);

/// All 4-valent sphere polyhedra with at most vmax vertices passing
/// andreev_validate, via medial graphs of polyhedral maps.
std::vector<CatalogEntry> enumerate_rightangled(int vmax, int jobs = 1);

CatalogEntry make_catalog_entry(const PolyhedronCombinatorics& P);

} // namespace specialcheck::polyhedra

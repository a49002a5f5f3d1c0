#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specialcheck/errors.hpp"

namespace specialcheck::cellkit {

using Edge = std::pair<int, int>;  // normalized: first < second not required for loops-free polyhedra, but first <= second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// A dart is a face-side: the directed edge faces[face][pos] -> faces[face][pos+1].
struct Dart {
    int face = -1;
    int pos = -1;
    bool operator==(const Dart& o) const { return face == o.face && pos == o.pos; }
    bool operator<(const Dart& o) const { return std::tie(face, pos) < std::tie(o.face, o.pos); }
};

/// Combinatorial 2-sphere cell structure with every edge in exactly two faces,
/// connected, Euler characteristic 2, manifold vertex links and no two faces
/// sharing more than one edge. Face cycles are normalized to a coherent
/// orientation on construction; derived structures are cached immutably.
class PolyhedronCombinatorics {
public:
    static PolyhedronCombinatorics build(std::vector<std::vector<int>> faces);

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    int valence(int v) const;
    const std::map<int, int>& valences() const { return valence_; }
    /// Face pairs sharing an edge.
    const std::set<std::pair<int, int>>& dual_edges() const { return dual_edges_; }

    int face_size(int f) const { return static_cast<int>(faces_[f].size()); }
    int face_vertex(int f, int k) const;
    Edge slot_edge(int f, int k) const;
    /// The two (face, slot) sides of an edge.
    const std::array<Dart, 2>& edge_sides(Edge e) const;
    /// The face opposite dart: same edge, other side.
    Dart opposite(Dart d) const;
    Dart next(Dart d) const { return {d.face, (d.pos + 1) % face_size(d.face)}; }
    Dart prev(Dart d) const { return {d.face, (d.pos + face_size(d.face) - 1) % face_size(d.face)}; }
    /// The other face of the polyhedron containing edge e, besides f.
    int other_face_at(Edge e, int f) const;
    /// Cyclic rotation of (face,slot) corners around vertex v.
    std::vector<Dart> vertex_star(int v) const;

    /// Lexicographically minimal dart code; equal codes == isomorphic.
    std::string canonical_code() const;
    /// Canonical code over orientation-preserving relabelings only.
    std::string canonical_code_oriented() const;

    /// All automorphisms as vertex permutations with orientation character
    /// (+1 preserving, -1 reversing).
    struct Automorphism {
        std::map<int, int> vertex_map;
        int orientation = 1;
    };
    std::vector<Automorphism> automorphisms() const;

private:
    std::string encode(Dart start, bool mirror) const;

    std::vector<std::vector<int>> faces_;
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::map<int, int> valence_;
    std::map<Edge, std::array<Dart, 2>> edge_sides_;
    std::set<std::pair<int, int>> dual_edges_;
};

/// Involutive identification of two faces; corr[k] is the image of
/// srcFaceCycle[k]. The correspondence must reverse the cyclic orientation
/// (gluing of oriented boundary spheres) unless the decomposition explicitly
/// allows orientation-preserving correspondences for test fixtures.
struct FacePairing {
    int src_poly = 0, src_face = 0;
    int dst_poly = 0, dst_face = 0;
    std::vector<int> corr;
};

struct Decomposition {
    std::vector<PolyhedronCombinatorics> polyhedra;
    std::vector<FacePairing> pairings;
    bool allow_orientation_preserving = false;
    /// Optional per-polyhedron, per-face color tags (0/1), used by checkering io.
    std::vector<std::vector<int>> colors;

    void validate() const;
    int total_edges() const;
    /// Pairing index covering the given face side, with direction:
    /// +1 when (poly,face) is the src, -1 when it is the dst.
    std::pair<int, int> pairing_at(int poly, int face) const;
    /// Image of a vertex of the given face under the pairing that covers it.
    int map_vertex(int poly, int face, int v) const;
    /// Image face side of (poly, face).
    std::pair<int, int> partner_face(int poly, int face) const;
};

struct CellClassing {
    std::vector<std::vector<std::pair<int, int>>> classes;  // members per class
    std::map<std::pair<int, int>, int> index;               // member -> class id
};

struct QuotientComplex {
    const Decomposition* source = nullptr;
    CellClassing vertex_classes;                            // members (poly, vertex)
    std::vector<std::vector<std::pair<int, Edge>>> edge_classes;
    std::map<std::pair<int, Edge>, int> edge_index;
    std::vector<std::array<std::pair<int, int>, 2>> face_classes;  // the two (poly,face) sides
    std::map<std::pair<int, int>, int> face_index;

    int num_vertex_classes() const { return static_cast<int>(vertex_classes.classes.size()); }
    int num_edge_classes() const { return static_cast<int>(edge_classes.size()); }
    int num_face_classes() const { return static_cast<int>(face_classes.size()); }
    int edge_class_size(int c) const { return static_cast<int>(edge_classes[c].size()); }
};

/// Orbit classes of cells under the equivalence generated by the pairings.
QuotientComplex quotient_complex(const Decomposition& d);

struct EdgeCycleVerdict {
    bool ok = true;
    int witness_class = -1;
    int witness_size = 0;
};

/// True iff every edge class has exactly four members (the right-angled
/// manifold condition).
EdgeCycleVerdict edge_cycle_check(const QuotientComplex& qc);

std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

} // namespace specialcheck::cellkit

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specialcheck/cellkit.hpp"

namespace specialcheck::squares {

enum class EdgeTag { Untagged, Internal, External };
enum class VertexTag { Plain, EdgeCell, FaceCell, PolyCell };

/// A square complex given by cells: edges may be loops and may repeat around a
/// square. Each square stores its four sides in boundary order together with
/// traversal directions; corner i is the tail of side i.
struct SquareComplex {
    int num_vertices = 0;
    std::vector<VertexTag> vertex_tags;  // optional; sized num_vertices when present

    struct EdgeCell {
        int u = 0, v = 0;
        EdgeTag tag = EdgeTag::Untagged;
    };
    std::vector<EdgeCell> edges;

    struct Square {
        std::array<int, 4> side;   // edge indices
        std::array<bool, 4> fwd;   // true: traversal matches stored (u -> v)
    };
    std::vector<Square> squares;

    int side_tail(int s, int i) const;
    int side_head(int s, int i) const;
    int corner_vertex(int s, int i) const { return side_tail(s, i); }
    void validate() const;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_squares() const { return static_cast<int>(squares.size()); }
    int euler_characteristic() const { return num_vertices - num_edges() + num_squares(); }
};

/// The standard square complex of a quotient complex, with the provenance
/// maps needed downstream: one square per (polyhedron, edge) incidence.
struct StandardSquareComplex {
    SquareComplex sc;
    /// square index -> (polyhedron, polyhedron edge)
    std::vector<std::pair<int, cellkit::Edge>> square_source;
    /// square index -> the two face sides (faces of the polyhedron at the edge),
    /// f at sides 0/1 and g at sides 2/3.
    std::vector<std::pair<int, int>> square_faces;
    /// vertex index -> class id within its tag family
    std::vector<int> vertex_class;
};

StandardSquareComplex standard_square_complex(const cellkit::QuotientComplex& qc);

struct BipartiteVerdict {
    bool ok = false;
    std::vector<int> part;  // 0/1 per vertex when ok
};
BipartiteVerdict is_bipartite(const SquareComplex& sc);

struct NpcVerdict {
    bool ok = true;
    int witness_vertex = -1;
    /// Corners of the short simple link cycle: (square, corner) pairs.
    std::vector<std::pair<int, int>> witness_cycle;
};
/// Gromov link condition: true iff no vertex link contains a simple cycle of
/// length < 4.
NpcVerdict is_npc(const SquareComplex& sc);

/// Links are simplicial (no length-1 or length-2 cycles).
bool is_simple(const SquareComplex& sc);

std::string square_complex_to_json(const SquareComplex& sc);
SquareComplex square_complex_from_json(const std::string& text);

/// Link structure shared by the NPC check and the hyperplane pathology scan.
/// Link vertices are edge-end incidences (edge, end); end 0 is the stored
/// tail, end 1 the stored head. Link edges are square corners.
struct LinkGraphs {
    struct EndRef {
        int edge = -1;
        int end = -1;
        bool operator==(const EndRef& o) const { return edge == o.edge && end == o.end; }
        bool operator<(const EndRef& o) const { return std::tie(edge, end) < std::tie(o.edge, o.end); }
    };
    // Corner (s,i) joins the head incidence of side i-1 and the tail incidence of side i.
    static EndRef corner_prev_end(const SquareComplex& sc, int s, int i);
    static EndRef corner_next_end(const SquareComplex& sc, int s, int i);
    static int end_vertex(const SquareComplex& sc, EndRef r);
};

} // namespace specialcheck::squares

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specialcheck/fixtures.hpp"
#include "specialcheck/squares.hpp"

using namespace specialcheck;
using namespace specialcheck::squares;

TEST_CASE("standard square complex of the Whitehead fixture") {
    auto d = fixtures::whitehead_decomposition();
    auto qc = cellkit::quotient_complex(d);
    REQUIRE(qc.num_vertex_classes() == 2);
    REQUIRE(qc.num_edge_classes() == 3);
    REQUIRE(qc.num_face_classes() == 4);

    auto std_sc = standard_square_complex(qc);
    const auto& sc = std_sc.sc;

    // Independent cell counts from the barycentric picture: one square per
    // (edge, polyhedron) incidence; vertices are barycenters of 1-, 2-, 3-cells;
    // edges split as external (one per glued boundary-edge incidence pair) and
    // internal (two per face class).
    int total_poly_edges = d.total_edges();
    int expect_vertices = qc.num_edge_classes() + qc.num_face_classes() + static_cast<int>(d.polyhedra.size());
    int expect_external = total_poly_edges;
    int expect_internal = 2 * qc.num_face_classes();

    CHECK(sc.num_squares() == 12);
    CHECK(sc.num_squares() == total_poly_edges);
    CHECK(sc.num_vertices == 8);
    CHECK(sc.num_vertices == expect_vertices);
    CHECK(sc.num_edges() == 20);
    CHECK(sc.num_edges() == expect_external + expect_internal);
    CHECK(sc.euler_characteristic() == 0);

    int ext = 0, inl = 0;
    for (const auto& e : sc.edges) {
        if (e.tag == EdgeTag::External) ++ext;
        if (e.tag == EdgeTag::Internal) ++inl;
    }
    CHECK(ext == expect_external);
    CHECK(inl == expect_internal);

    // Squares alternate external, internal, external, internal.
    for (const auto& sq : sc.squares) {
        CHECK(sc.edges[sq.side[0]].tag == EdgeTag::External);
        CHECK(sc.edges[sq.side[1]].tag == EdgeTag::Internal);
        CHECK(sc.edges[sq.side[2]].tag == EdgeTag::Internal);
        CHECK(sc.edges[sq.side[3]].tag == EdgeTag::External);
    }

    auto bp = is_bipartite(sc);
    CHECK(bp.ok);
    // Parts equal parity of source-cell dimension.
    for (int v = 0; v < sc.num_vertices; ++v) {
        bool odd_dim = sc.vertex_tags[v] == VertexTag::EdgeCell || sc.vertex_tags[v] == VertexTag::PolyCell;
        CHECK((bp.part[v] == bp.part[0]) == (odd_dim == (sc.vertex_tags[0] == VertexTag::EdgeCell ||
                                                         sc.vertex_tags[0] == VertexTag::PolyCell)));
    }

    CHECK(is_simple(sc));
    CHECK(is_npc(sc).ok);
}

TEST_CASE("empty decomposition gives the empty complex") {
    cellkit::Decomposition d;
    auto qc = cellkit::quotient_complex(d);
    auto std_sc = standard_square_complex(qc);
    CHECK(std_sc.sc.num_vertices == 0);
    CHECK(std_sc.sc.num_squares() == 0);
}

TEST_CASE("bipartite checks on tori") {
    CHECK(!is_bipartite(fixtures::torus(1, 1)).ok);
    CHECK(is_bipartite(fixtures::torus(2, 2)).ok);
    CHECK(!is_bipartite(fixtures::torus(3, 2)).ok);
}

TEST_CASE("npc verdicts") {
    auto bad = is_npc(fixtures::cube_corner());
    CHECK(!bad.ok);
    CHECK(bad.witness_cycle.size() == 3);

    CHECK(is_npc(fixtures::single_square()).ok);
    CHECK(is_npc(fixtures::torus(2, 2)).ok);
    CHECK(is_npc(fixtures::torus(1, 1)).ok);
    CHECK(is_npc(fixtures::klein_square()).ok);
}

TEST_CASE("figure-eight style fixture has 6-cycles") {
    auto d = fixtures::figure_eight_style_decomposition();
    auto qc = cellkit::quotient_complex(d);
    auto verdict = cellkit::edge_cycle_check(qc);
    CHECK(!verdict.ok);
    CHECK(verdict.witness_size == 6);
}

TEST_CASE("json round trip for square complexes") {
    auto sc = fixtures::torus(2, 2);
    auto text = square_complex_to_json(sc);
    auto sc2 = square_complex_from_json(text);
    CHECK(sc2.num_vertices == sc.num_vertices);
    CHECK(sc2.num_edges() == sc.num_edges());
    CHECK(sc2.num_squares() == sc.num_squares());
    CHECK(is_npc(sc2).ok);
}

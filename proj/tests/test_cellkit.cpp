#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specialcheck/cellkit.hpp"

using namespace specialcheck::cellkit;
using specialcheck::Error;

namespace {
std::vector<std::vector<int>> tetra_faces() { return {{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}}; }

std::vector<std::vector<int>> mirror_faces(std::vector<std::vector<int>> fs) {
    for (auto& f : fs) std::reverse(f.begin(), f.end());
    return fs;
}

std::vector<std::vector<int>> octa_faces() {
    // Vertices: 0=N, 5=S, equator 1,2,3,4.
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}
} // namespace

TEST_CASE("tetrahedron builds with expected counts") {
    auto P = PolyhedronCombinatorics::build(tetra_faces());
    CHECK(P.num_vertices() == 4);
    CHECK(P.num_edges() == 6);
    CHECK(P.num_faces() == 4);
    for (int v : P.vertices()) CHECK(P.valence(v) == 3);
}

TEST_CASE("octahedron builds with expected counts") {
    auto P = PolyhedronCombinatorics::build(octa_faces());
    CHECK(P.num_vertices() == 6);
    CHECK(P.num_edges() == 12);
    CHECK(P.num_faces() == 8);
    for (int v : P.vertices()) CHECK(P.valence(v) == 4);
}

TEST_CASE("validation errors") {
    // Edge {1,2} in three faces.
    CHECK_THROWS_WITH_AS(PolyhedronCombinatorics::build({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}),
                         doctest::Contains("EdgeDegree"), Error);
    // Two tetrahedra sharing nothing: disconnected (also wrong Euler count).
    CHECK_THROWS_WITH_AS(
        PolyhedronCombinatorics::build({{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3},
                                        {5, 6, 7}, {5, 7, 8}, {5, 8, 6}, {6, 8, 7}}),
        doctest::Contains("NotSphere"), Error);
    // Two triangles glued along all edges: every edge has 2 faces, Euler
    // 3-3+2=2, but faces share three edges.
    CHECK_THROWS_AS(PolyhedronCombinatorics::build({{1, 2, 3}, {3, 2, 1}}), Error);
}

TEST_CASE("canonical codes detect isomorphism and mirrors") {
    auto P = PolyhedronCombinatorics::build(tetra_faces());
    auto Q = PolyhedronCombinatorics::build({{10, 20, 30}, {10, 30, 40}, {10, 40, 20}, {20, 40, 30}});
    CHECK(P.canonical_code() == Q.canonical_code());

    auto O = PolyhedronCombinatorics::build(octa_faces());
    auto Om = PolyhedronCombinatorics::build(mirror_faces(octa_faces()));
    CHECK(O.canonical_code() == Om.canonical_code());
    CHECK(O.canonical_code() != P.canonical_code());
}

TEST_CASE("automorphism groups of the regular solids") {
    auto T = PolyhedronCombinatorics::build(tetra_faces());
    auto autT = T.automorphisms();
    CHECK(autT.size() == 24);
    int reversing = 0;
    for (const auto& a : autT) reversing += (a.orientation < 0);
    CHECK(reversing == 12);

    auto O = PolyhedronCombinatorics::build(octa_faces());
    CHECK(O.automorphisms().size() == 48);
}

TEST_CASE("quotient complex on a simple two-tetra double") {
    // Double of a tetrahedron across all faces (spherical orbifold-like
    // fixture, not right-angled).
    Decomposition d;
    d.polyhedra.push_back(PolyhedronCombinatorics::build(tetra_faces()));
    d.polyhedra.push_back(PolyhedronCombinatorics::build(mirror_faces(tetra_faces())));
    // Pair face i of poly 0 with the mirrored face i of poly 1 by the identity
    // on vertices: the identity reads the mirrored cycle reversed.
    const auto& fs = d.polyhedra[0].faces();
    for (int f = 0; f < 4; ++f) {
        FacePairing p;
        p.src_poly = 0;
        p.src_face = f;
        p.dst_poly = 1;
        p.dst_face = f;
        p.corr = fs[f];
        d.pairings.push_back(p);
    }
    auto qc = quotient_complex(d);
    CHECK(qc.num_vertex_classes() == 4);
    CHECK(qc.num_edge_classes() == 6);
    CHECK(qc.num_face_classes() == 4);
    for (int c = 0; c < qc.num_edge_classes(); ++c) CHECK(qc.edge_class_size(c) == 2);
    auto verdict = edge_cycle_check(qc);
    CHECK(!verdict.ok);
    CHECK(verdict.witness_size == 2);

    // Sum over classes of sizes equals total polyhedron edges.
    int total = 0;
    for (int c = 0; c < qc.num_edge_classes(); ++c) total += qc.edge_class_size(c);
    CHECK(total == d.total_edges());
}

TEST_CASE("unpaired face reported") {
    Decomposition d;
    d.polyhedra.push_back(PolyhedronCombinatorics::build(tetra_faces()));
    CHECK_THROWS_WITH_AS(quotient_complex(d), doctest::Contains("UnpairedFace"), Error);
}

TEST_CASE("empty decomposition is vacuously fine") {
    Decomposition d;
    auto qc = quotient_complex(d);
    CHECK(edge_cycle_check(qc).ok);
}

TEST_CASE("json round trip") {
    Decomposition d;
    d.polyhedra.push_back(PolyhedronCombinatorics::build(tetra_faces()));
    d.polyhedra.push_back(PolyhedronCombinatorics::build(mirror_faces(tetra_faces())));
    const auto& fs = d.polyhedra[0].faces();
    for (int f = 0; f < 4; ++f) d.pairings.push_back({0, f, 1, f, fs[f]});

    auto text = decomposition_to_json(d);
    auto d2 = decomposition_from_json(text);
    CHECK(d2.polyhedra.size() == 2);
    CHECK(d2.pairings.size() == 4);
    auto qc = quotient_complex(d2);
    CHECK(qc.num_vertex_classes() == 4);
}

TEST_CASE("orientation-preserving correspondences need the explicit flag") {
    // One square pillow: two squares glued; orientation-preserving corr on one
    // pairing should be rejected without the flag.
    Decomposition d;
    d.polyhedra.push_back(PolyhedronCombinatorics::build(tetra_faces()));
    d.polyhedra.push_back(PolyhedronCombinatorics::build(mirror_faces(tetra_faces())));
    const auto& fs = d.polyhedra[0].faces();
    for (int f = 0; f < 4; ++f) d.pairings.push_back({0, f, 1, f, fs[f]});
    // Make pairing 0 orientation-preserving: read the target cycle forward.
    auto rev = fs[0];
    std::reverse(rev.begin(), rev.end());
    d.pairings[0].corr = rev;
    CHECK_THROWS_WITH_AS(d.validate(), doctest::Contains("orientation"), Error);
    d.allow_orientation_preserving = true;
    CHECK_NOTHROW(d.validate());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specialcheck/fixtures.hpp"
#include "specialcheck/polyhedra.hpp"

using namespace specialcheck;
using namespace specialcheck::polyhedra;
using cellkit::PolyhedronCombinatorics;

namespace {
std::vector<std::vector<int>> prism_faces(int k) {
    std::vector<int> top, bottom;
    for (int i = 0; i < k; ++i) top.push_back(i);
    for (int i = 2 * k - 1; i >= k; --i) bottom.push_back(i);
    std::vector<std::vector<int>> fs{top, bottom};
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        fs.push_back({i, j, k + j, k + i});
    }
    return fs;
}

PolyhedronCombinatorics cube() { return PolyhedronCombinatorics::build(prism_faces(4)); }
PolyhedronCombinatorics tetra() { return PolyhedronCombinatorics::build(fixtures::tetrahedron_faces()); }
PolyhedronCombinatorics octa() { return PolyhedronCombinatorics::build(fixtures::octahedron_faces()); }
} // namespace

TEST_CASE("prismatic circuits") {
    auto prism3 = PolyhedronCombinatorics::build(prism_faces(3));
    CHECK(prismatic_circuits(prism3, 3).size() == 1);

    CHECK(prismatic_circuits(octa(), 3).empty());
    CHECK(prismatic_circuits(octa(), 4).empty());

    CHECK(prismatic_circuits(cube(), 4).size() == 3);
    CHECK(prismatic_circuits(cube(), 3).empty());

    CHECK(prismatic_circuits(tetra(), 3).empty());
}

TEST_CASE("andreev validation") {
    CHECK(andreev_validate(octa()).ok);
    auto anti4 = PolyhedronCombinatorics::build(fixtures::antiprism_faces(4));
    CHECK(andreev_validate(anti4).ok);
    auto c = andreev_validate(cube());
    CHECK(!c.ok);
    CHECK(c.witness.find("valence") != std::string::npos);
}

TEST_CASE("triangulation generator reproduces the known counts") {
    auto tris = enumerate_triangulations(9);
    std::map<int, int> by_n;
    for (const auto& T : tris) by_n[T.num_vertices()]++;
    CHECK(by_n[4] == 1);
    CHECK(by_n[5] == 1);
    CHECK(by_n[6] == 2);
    CHECK(by_n[7] == 5);
    CHECK(by_n[8] == 14);
    CHECK(by_n[9] == 50);
}

TEST_CASE("crushtacean catalog") {
    auto cat10 = enumerate_crushtaceans(10, true);
    REQUIRE(cat10.size() == 3);
    CHECK(cat10[0].code == tetra().canonical_code());
    CHECK(cat10[1].code == cube().canonical_code());
    CHECK(cat10[2].code == PolyhedronCombinatorics::build(prism_faces(5)).canonical_code());

    auto cat12 = enumerate_crushtaceans(12, true);
    std::vector<CatalogEntry> twelve;
    for (const auto& e : cat12)
        if (e.vertices == 12) twelve.push_back(e);
    REQUIRE(twelve.size() == 2);
    bool has_prism = false, has_other = false;
    auto prism6_code = PolyhedronCombinatorics::build(prism_faces(6)).canonical_code();
    for (const auto& e : twelve) {
        if (e.code == prism6_code) has_prism = true;
        else {
            has_other = true;
            CHECK(e.face_vector.at(4) == 4);
            CHECK(e.face_vector.at(5) == 4);
        }
    }
    CHECK(has_prism);
    CHECK(has_other);

    // Every catalog entry with only quadrilateral/pentagon faces satisfies
    // j + k/2 = 6.
    for (const auto& e : enumerate_crushtaceans(12, false)) {
        bool only45 = true;
        for (auto [sz, n] : e.face_vector)
            if (sz != 4 && sz != 5) only45 = false;
        if (only45) {
            int j = e.face_vector.count(4) ? e.face_vector.at(4) : 0;
            int k = e.face_vector.count(5) ? e.face_vector.at(5) : 0;
            CHECK(2 * j + k == 12);
        }
    }
}

TEST_CASE("right-angled catalog") {
    auto cat9 = enumerate_rightangled(9);
    REQUIRE(cat9.size() == 2);
    CHECK(cat9[0].code == PolyhedronCombinatorics::build(fixtures::antiprism_faces(3)).canonical_code());
    CHECK(cat9[1].code == PolyhedronCombinatorics::build(fixtures::antiprism_faces(4)).canonical_code());

    auto cat6 = enumerate_rightangled(6);
    REQUIRE(cat6.size() == 1);
    CHECK(cat6[0].code == octa().canonical_code());

    CHECK(enumerate_rightangled(5).empty());
}

TEST_CASE("decompositions") {
    auto prism3 = PolyhedronCombinatorics::build(prism_faces(3));
    auto circ = prismatic_circuits(prism3, 3);
    REQUIRE(circ.size() == 1);
    auto [a, b] = decompose_crushtacean(prism3, circ[0]);
    CHECK(a.num_vertices() + b.num_vertices() == prism3.num_vertices() + 2);
    CHECK(a.canonical_code() == tetra().canonical_code());
    CHECK(b.canonical_code() == tetra().canonical_code());

    CHECK_THROWS_WITH_AS(decompose_crushtacean(tetra(), circ[0]), doctest::Contains("NotPrismatic"), Error);

    // L(3) fully decomposes into two tetrahedra and a cube.
    auto l3 = full_decomposition(lobell(3), true);
    CHECK(l3.order_independent);
    std::map<std::string, int> mult;
    for (const auto& c : l3.piece_codes) mult[c]++;
    CHECK(mult[tetra().canonical_code()] == 2);
    CHECK(mult[cube().canonical_code()] == 1);

    // Tetrahedron is already indecomposable.
    auto ft = full_decomposition(tetra());
    CHECK(ft.pieces.size() == 1);

    // Every 6-vertex crushtacean decomposes into two tetrahedra; decomposable
    // crushtaceans with up to ten vertices yield <= 4 tetrahedra or
    // tetrahedron + cube.
    auto tcode = tetra().canonical_code();
    auto ccode = cube().canonical_code();
    for (const auto& e : enumerate_crushtaceans(10, false)) {
        auto fd = full_decomposition(e.P, true);
        CHECK(fd.order_independent);
        if (e.vertices == 6) {
            CHECK(fd.piece_codes == std::vector<std::string>{tcode, tcode});
        }
        if (!prismatic_circuits(e.P, 3).empty()) {
            std::map<std::string, int> m;
            for (const auto& c : fd.piece_codes) m[c]++;
            bool all_tetra = (m.size() == 1 && m.count(tcode) && m[tcode] <= 4);
            bool tetra_cube = (m[tcode] == 1 && m[ccode] == 1 && fd.piece_codes.size() == 2);
            CHECK((all_tetra || tetra_cube));
        }
    }
}

TEST_CASE("loebell polyhedra") {
    auto l5 = lobell(5);
    CHECK(l5.num_vertices() == 20);
    CHECK(l5.num_edges() == 30);
    CHECK(l5.num_faces() == 12);
    for (const auto& f : l5.faces()) CHECK(f.size() == 5);

    auto l4 = lobell(4);
    CHECK(l4.num_vertices() == 16);
    CHECK(l4.num_edges() == 24);
    CHECK(l4.num_faces() == 10);
    CHECK(dual_distance(l4, 0, 1) == 3);

    CHECK_THROWS_WITH_AS(lobell(2), doctest::Contains("BadN"), Error);

    // L(n) is indecomposable for n >= 4, decomposable for n = 3.
    CHECK(!prismatic_circuits(lobell(3), 3).empty());
    for (int n = 4; n <= 8; ++n) CHECK(prismatic_circuits(lobell(n), 3).empty());
}

TEST_CASE("automorphism groups and the symmetry relations") {
    CHECK(automorphism_group(tetra()).order() == 24);
    CHECK(is_regular(tetra()));
    CHECK(is_regular(cube()));
    CHECK(!is_regular(PolyhedronCombinatorics::build(prism_faces(5))));

    CHECK(automorphism_group(lobell(5)).order() == 120);
    for (int n : {3, 4, 6, 7}) {
        auto g = automorphism_group(lobell(n));
        CHECK(g.order() == 4 * n);
        CHECK(g.orientation_preserving() == 2 * n);
    }

    // The stated relations on generators discovered by search, for L(6):
    // b^6 = s^2 = a^2 = 1, sbs = b^-1, aba = b^-1, asa = bs; <b,s> preserves
    // each hexagon, a exchanges them.
    auto L = lobell(6);
    auto g = automorphism_group(L);
    auto apply = [&](const std::map<int, int>& m, int v) { return m.at(v); };
    auto compose = [&](const std::map<int, int>& f, const std::map<int, int>& g2) {
        std::map<int, int> r;
        for (auto [v, w] : g2) r[v] = f.at(w);
        return r;
    };
    auto order_of = [&](const std::map<int, int>& m) {
        std::map<int, int> cur = m;
        int k = 1;
        auto is_id = [&](const std::map<int, int>& x) {
            for (auto [v, w] : x)
                if (v != w) return false;
            return true;
        };
        while (!is_id(cur)) {
            cur = compose(cur, m);
            ++k;
            if (k > 100) break;
        }
        return k;
    };
    auto preserves_face = [&](const std::map<int, int>& m, int face) {
        std::set<int> fv(L.faces()[face].begin(), L.faces()[face].end());
        for (int v : fv)
            if (!fv.count(apply(m, v))) return false;
        return true;
    };
    // Faces 0 and 1 are the two hexagons.
    std::map<int, int> b, s, a;
    bool found = false;
    for (const auto& eb : g.elements) {
        if (eb.orientation != 1 || order_of(eb.vertex_map) != 6 || !preserves_face(eb.vertex_map, 0)) continue;
        for (const auto& es : g.elements) {
            if (es.orientation != -1 || order_of(es.vertex_map) != 2 || !preserves_face(es.vertex_map, 0))
                continue;
            for (const auto& ea : g.elements) {
                if (ea.orientation != 1 || order_of(ea.vertex_map) != 2) continue;
                if (preserves_face(ea.vertex_map, 0)) continue;  // must exchange the hexagons
                auto binv = b;
                b = eb.vertex_map;
                s = es.vertex_map;
                a = ea.vertex_map;
                (void)binv;
                auto inv = [&](const std::map<int, int>& m) {
                    std::map<int, int> r;
                    for (auto [v, w] : m) r[w] = v;
                    return r;
                };
                bool rel = compose(compose(s, b), s) == inv(b) && compose(compose(a, b), a) == inv(b) &&
                           compose(compose(a, s), a) == compose(b, s);
                if (rel) found = true;
                if (found) break;
            }
            if (found) break;
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("truncation") {
    auto t = truncate(tetra());
    CHECK(t.P.canonical_code() == octa().canonical_code());
    CHECK(t.P.num_vertices() == 6);

    auto c = truncate(cube());
    CHECK(c.P.num_vertices() == 12);
    std::map<int, int> fv;
    for (const auto& f : c.P.faces()) fv[static_cast<int>(f.size())]++;
    CHECK(fv[3] == 8);
    CHECK(fv[4] == 6);
    // Truncation of a 3-valent polyhedron is its medial.
    CHECK(c.P.canonical_code() == medial(cube()).canonical_code());

    auto p5 = truncate(PolyhedronCombinatorics::build(prism_faces(5)));
    CHECK(p5.P.num_vertices() == 15);
    std::map<int, int> fv5;
    for (const auto& f : p5.P.faces()) fv5[static_cast<int>(f.size())]++;
    CHECK(fv5[3] == 10);
    CHECK(fv5[4] == 5);
    CHECK(fv5[5] == 2);
    CHECK(andreev_validate(p5.P).ok);

    // Truncations of indecomposable catalog entries pass the combinatorial
    // right-angled criterion (checked over the full <=12-vertex catalog).
    for (const auto& e : enumerate_crushtaceans(12, true)) CHECK(andreev_validate(truncate(e.P).P).ok);

    // Enumeration counts are stable when rerun (different traversal seed via
    // jobs parameter).
    CHECK(enumerate_crushtaceans(10, false, 2).size() == enumerate_crushtaceans(10, false, 1).size());
}

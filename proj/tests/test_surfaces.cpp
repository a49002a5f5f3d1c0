#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specialcheck/fixtures.hpp"
#include "specialcheck/surfaces.hpp"

using namespace specialcheck;
using namespace specialcheck::surfaces;
namespace hp = specialcheck::hyperplanes;

TEST_CASE("flat neighbor is a fixed-point-free involution on flags") {
    auto d = fixtures::whitehead_decomposition();
    auto qc = cellkit::quotient_complex(d);
    for (int p = 0; p < static_cast<int>(d.polyhedra.size()); ++p) {
        const auto& P = d.polyhedra[p];
        for (int f = 0; f < P.num_faces(); ++f) {
            const auto& cyc = P.faces()[f];
            for (size_t k = 0; k < cyc.size(); ++k) {
                auto e = cellkit::make_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
                auto step = flat_neighbor(d, qc, {p, f}, e);
                CHECK(!(step.side == FaceSide{p, f} && step.edge == e));
                auto back = flat_neighbor(d, qc, step.side, step.edge);
                CHECK(back.side == FaceSide{p, f});
                CHECK(back.edge == e);
            }
        }
    }
}

TEST_CASE("flat neighbor refuses non-right-angled edges") {
    auto d = fixtures::figure_eight_style_decomposition();
    auto qc = cellkit::quotient_complex(d);
    const auto& cyc = d.polyhedra[0].faces()[0];
    auto e = cellkit::make_edge(cyc[0], cyc[1]);
    CHECK_THROWS_WITH_AS(flat_neighbor(d, qc, {0, 0}, e), doctest::Contains("NotRightAngled"),
                         specialcheck::Error);
}

TEST_CASE("surface closures partition the faces and are orbit-stable") {
    auto d = fixtures::whitehead_decomposition();
    auto qc = cellkit::quotient_complex(d);

    std::set<int> covered;
    std::vector<FlatSurface> distinct;
    for (int p = 0; p < static_cast<int>(d.polyhedra.size()); ++p)
        for (int f = 0; f < d.polyhedra[p].num_faces(); ++f) {
            auto s = surface_closure(d, qc, {p, f});
            // Orbit property: any member face regenerates the same surface.
            auto again = surface_closure(d, qc, *s.sides.begin());
            CHECK(s.same_surface(again));
            bool fresh = true;
            for (auto& t : distinct)
                if (t.same_surface(s)) fresh = false;
            if (fresh) {
                for (int c : s.face_classes) {
                    CHECK(!covered.count(c));
                    covered.insert(c);
                }
                distinct.push_back(s);
            }
        }
    CHECK(static_cast<int>(covered.size()) == qc.num_face_classes());

    // A cusped geodesic surface has negative punctured Euler characteristic.
    for (auto& s : distinct) {
        CHECK(s.punctures >= 1);
        CHECK(s.euler_punctured() < 0);
        CHECK(s.pi1_index == (s.orientable ? 1 : 2));
    }
}

TEST_CASE("hyperplane surfaces are midline-independent") {
    auto d = fixtures::whitehead_decomposition();
    auto qc = cellkit::quotient_complex(d);
    auto ssc = squares::standard_square_complex(qc);
    for (const auto& h : hp::hyperplanes(ssc.sc)) {
        auto ref = hyperplane_surface(ssc, d, qc, h);
        for (const auto& m : h.midlines) {
            auto s = surface_closure(d, qc, midline_face_side(ssc, m));
            CHECK(s.same_surface(ref));
        }
    }
}

TEST_CASE("hyperplane-vs-surface relations hold on right-angled fixtures") {
    for (auto& d : {fixtures::whitehead_decomposition(), fixtures::octahedron_right_angled_pool().front()}) {
        auto qc = cellkit::quotient_complex(d);
        auto ssc = squares::standard_square_complex(qc);
        auto rep = hyperplane_surface_relations(ssc, d, qc);
        CHECK(rep.crossing_pairs_checked > 0);
        CHECK(rep.external_osculations_checked > 0);
        for (const auto& v : rep.violations) MESSAGE(v);
        CHECK(rep.ok());
    }
}

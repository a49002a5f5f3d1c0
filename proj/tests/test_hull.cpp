#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specialcheck/hull.hpp"

using namespace specialcheck::lorentz;
using specialcheck::Error;
using specialcheck::qext::QuadExt;
using specialcheck::qext::Rational;

namespace {
QuadExt q(long v) { return QuadExt(v); }
QuadExt s2(long k = 1) { return QuadExt(0, k, 2); }

// Columns of the octahedron vector matrix.
std::vector<Vec4> oct_vectors() {
    return {
        Vec4(s2(), q(0), q(0), s2()),  Vec4(q(0), s2(), q(0), s2()),  Vec4(q(0), q(0), s2(), s2()),
        Vec4(s2(-1), q(0), q(0), s2()), Vec4(q(0), s2(-1), q(0), s2()), Vec4(q(0), q(0), s2(-1), s2()),
    };
}

// Columns of the cuboctahedron vector matrix.
std::vector<Vec4> cubocta_vectors() {
    auto row = [](long x, long y, long zs, long w) { return Vec4(QuadExt(x), QuadExt(y), s2(zs), QuadExt(w)); };
    return {
        row(2, 0, 0, 2),  row(1, 1, 1, 2),   row(0, 2, 0, 2),  row(1, 1, -1, 2),
        row(0, -2, 0, 2), row(-1, -1, 1, 2), row(-2, 0, 0, 2), row(-1, -1, -1, 2),
        row(1, -1, -1, 2), row(-1, 1, -1, 2), row(-1, 1, 1, 2), row(1, -1, 1, 2),
    };
}
} // namespace

TEST_CASE("tetrahedron hull: 4 triangles, 6 edges") {
    std::vector<Vec4> pts{Vec4(q(1), q(1), q(1), q(2)), Vec4(q(1), q(-1), q(-1), q(2)),
                          Vec4(q(-1), q(1), q(-1), q(2)), Vec4(q(-1), q(-1), q(1), q(2))};
    auto h = klein_hull(pts);
    CHECK(h.faces.size() == 4);
    CHECK(h.edges.size() == 6);
    for (const auto& f : h.faces) CHECK(f.size() == 3);
}

TEST_CASE("octahedron and cuboctahedron hulls") {
    auto ho = klein_hull(oct_vectors());
    CHECK(ho.faces.size() == 8);
    CHECK(ho.edges.size() == 12);

    auto hc = klein_hull(cubocta_vectors());
    CHECK(hc.faces.size() == 14);
    CHECK(hc.edges.size() == 24);
    int tri = 0, quad = 0;
    for (const auto& f : hc.faces) {
        if (f.size() == 3) ++tri;
        if (f.size() == 4) ++quad;
    }
    CHECK(tri == 8);
    CHECK(quad == 6);
    // (m1, m9, m4) is a triangular face.
    bool found = false;
    for (const auto& f : hc.faces) {
        std::set<int> s(f.begin(), f.end());
        if (s == std::set<int>{0, 8, 3}) found = true;
    }
    CHECK(found);
}

TEST_CASE("degenerate and interior inputs rejected") {
    std::vector<Vec4> flat{Vec4(q(0), q(0), q(0), q(1)), Vec4(q(1), q(0), q(0), q(1)),
                           Vec4(q(0), q(1), q(0), q(1)), Vec4(q(1), q(1), q(0), q(1))};
    CHECK_THROWS_WITH_AS(klein_hull(flat), doctest::Contains("coplanar"), Error);

    std::vector<Vec4> with_center{Vec4(q(1), q(1), q(1), q(2)), Vec4(q(1), q(-1), q(-1), q(2)),
                                  Vec4(q(-1), q(1), q(-1), q(2)), Vec4(q(-1), q(-1), q(1), q(2)),
                                  Vec4(q(0), q(0), q(0), q(1))};
    CHECK_THROWS_AS(klein_hull(with_center), Error);
}

TEST_CASE("coplanar normal of the explicit tiles") {
    // All 12 cuboctahedron columns give n = (0,0,0,1/2).
    auto nc = coplanar_normal(cubocta_vectors());
    REQUIRE(nc.has_value());
    CHECK(!nc->degenerate_span);
    CHECK(nc->n == Vec4(q(0), q(0), q(0), QuadExt(Rational(1, 2))));

    // The octahedron columns give n = (0,0,0,sqrt2/2).
    auto no = coplanar_normal(oct_vectors());
    REQUIRE(no.has_value());
    CHECK(no->n == Vec4(q(0), q(0), q(0), QuadExt(Rational(0), Rational(1, 2), 2)));

    // Tilt values from the three listed neighbors.
    Vec4 n = nc->n;
    CHECK(tilt_excess(n, Vec4(q(7), q(1), s2(-5), q(10))) == q(4));
    CHECK(tilt_excess(n, Vec4(q(3), q(5), s2(-1), q(6))) == q(2));
    // The light vector of the octahedral neighbor; its last coordinate is
    // 4+2*sqrt2 (the only value making the vector light-like).
    Vec4 w_oct(q(2) + s2(2), q(0), q(-2) - s2(2), q(4) + s2(2));
    CHECK(lorentz_form(w_oct, w_oct).is_zero());
    CHECK(tilt_excess(n, w_oct) == q(1) + s2());
}

TEST_CASE("coplanar normal: unsolvable and degenerate-span cases") {
    // Four vectors not on one affine plane: light-cone vertices of a tetrahedron
    // scaled to break the plane.
    std::vector<Vec4> bad{Vec4(q(2), q(0), q(0), q(2)), Vec4(q(0), q(2), q(0), q(2)),
                          Vec4(q(0), q(0), q(2), q(2)), Vec4(q(0), q(0), q(-4), q(4))};
    auto r = coplanar_normal(bad);
    // The system n·v=1 for four independent vectors always has a unique solution;
    // use five with a genuine violation instead.
    CHECK(r.has_value());
    std::vector<Vec4> bad5 = bad;
    bad5.push_back(Vec4(q(0), q(0), q(-2), q(2)));
    CHECK(!coplanar_normal(bad5).has_value());

    // Rank-deficient: several vectors on a common 2-plane through the cone.
    std::vector<Vec4> thin{Vec4(q(2), q(0), q(0), q(2)), Vec4(q(0), q(2), q(0), q(2)),
                           Vec4(q(1), q(1), q(0), q(2)), Vec4(q(4), q(0), q(0), q(4))};
    auto t = coplanar_normal(thin);
    // v4 = 2*v1 makes n·v4 = 2 ≠ 1: unsolvable.
    CHECK(!t.has_value());
    std::vector<Vec4> span2{Vec4(q(2), q(0), q(0), q(2)), Vec4(q(0), q(2), q(0), q(2)),
                            Vec4(q(1), q(1), q(0), q(2)), Vec4(q(-1), q(3), q(0), q(2))};
    auto t2 = coplanar_normal(span2);
    REQUIRE(t2.has_value());
    CHECK(t2->degenerate_span);
    for (const auto& v : span2) CHECK(dot(t2->n, v) == q(1));
}

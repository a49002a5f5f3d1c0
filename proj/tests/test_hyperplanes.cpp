#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "specialcheck/fixtures.hpp"
#include "specialcheck/hyperplanes.hpp"

using namespace specialcheck;
namespace hp = specialcheck::hyperplanes;

namespace {
// Independent union-find oracle for the hyperplane count.
int hyperplane_count_oracle(const squares::SquareComplex& sc) {
    std::vector<int> parent(sc.num_edges());
    for (int i = 0; i < sc.num_edges(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& sq : sc.squares) {
        parent[find(sq.side[0])] = find(sq.side[2]);
        parent[find(sq.side[1])] = find(sq.side[3]);
    }
    std::set<int> roots;
    for (int i = 0; i < sc.num_edges(); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}
} // namespace

TEST_CASE("hyperplane extraction") {
    auto single = fixtures::single_square();
    auto hs = hp::hyperplanes(single);
    CHECK(hs.size() == 2);
    for (const auto& h : hs) CHECK(h.midlines.size() == 1);

    auto t22 = fixtures::torus(2, 2);
    auto h22 = hp::hyperplanes(t22);
    CHECK(h22.size() == 4);
    CHECK(h22.size() == hyperplane_count_oracle(t22));
    for (const auto& h : h22) CHECK(h.midlines.size() == 2);

    // Every square contributes its two midlines; dual edges partition edges.
    int midline_total = 0;
    std::set<int> duals;
    for (const auto& h : h22) {
        midline_total += static_cast<int>(h.midlines.size());
        duals.insert(h.dual_edges.begin(), h.dual_edges.end());
    }
    CHECK(midline_total == 2 * t22.num_squares());
    CHECK(static_cast<int>(duals.size()) == t22.num_edges());

    // Regression: Whitehead standard complex hyperplane count, pinned from the
    // union-find oracle.
    auto d = fixtures::whitehead_decomposition();
    auto sc = squares::standard_square_complex(cellkit::quotient_complex(d)).sc;
    int oracle = hyperplane_count_oracle(sc);
    CHECK(static_cast<int>(hp::hyperplanes(sc).size()) == oracle);
}

TEST_CASE("regular neighborhoods: sidedness and boundary structure") {
    auto klein = fixtures::klein_square();
    auto hk = hp::hyperplanes(klein);
    REQUIRE(hk.size() == 2);
    int one_sided_count = 0;
    for (const auto& h : hk) {
        auto N = hp::regular_neighborhood(klein, h);
        if (!N.two_sided) ++one_sided_count;
    }
    CHECK(one_sided_count == 1);

    auto t22 = fixtures::torus(2, 2);
    for (const auto& h : hp::hyperplanes(t22)) {
        auto N = hp::regular_neighborhood(t22, h);
        CHECK(N.two_sided);
        CHECK(N.num_components == 2);
    }

    // Standard complex: boundary splits into a pure-external and a
    // pure-internal component.
    auto d = fixtures::whitehead_decomposition();
    auto sc = squares::standard_square_complex(cellkit::quotient_complex(d)).sc;
    for (const auto& h : hp::hyperplanes(sc)) {
        auto N = hp::regular_neighborhood(sc, h);
        REQUIRE(N.two_sided);
        bool ext_pure = false, int_pure = false;
        for (const auto& prof : N.component_profile) {
            if (prof.external && !prof.internal && !prof.untagged) ext_pure = true;
            if (prof.internal && !prof.external && !prof.untagged) int_pure = true;
        }
        CHECK(ext_pure);
        CHECK(int_pure);
    }
}

TEST_CASE("pathologies on the small fixtures") {
    // 1x1 torus: both hyperplanes self-osculate (brute force over the 4-dart complex).
    auto t11 = fixtures::torus(1, 1);
    auto rep = hp::pathology_report(t11);
    CHECK(!rep.self_osculations.empty());
    std::set<int> oscillating;
    for (const auto& so : rep.self_osculations) {
        oscillating.insert(so.hyperplane);
        CHECK(so.kind == "direct");
    }
    CHECK(oscillating.size() == 2);
    CHECK(rep.one_sided.empty());
    CHECK(rep.self_intersecting.empty());

    // Klein square: one-sided hyperplane listed.
    auto repk = hp::pathology_report(fixtures::klein_square());
    CHECK(repk.one_sided.size() == 1);

    // 2x2 torus: exhaustive check finds nothing.
    auto rep22 = hp::pathology_report(fixtures::torus(2, 2));
    CHECK(rep22.clean());

    // Whitehead standard complex: two-sided everywhere (right-angled manifold).
    auto d = fixtures::whitehead_decomposition();
    auto sc = squares::standard_square_complex(cellkit::quotient_complex(d)).sc;
    auto repw = hp::pathology_report(sc);
    CHECK(repw.one_sided.empty());
}

TEST_CASE("c-special verdicts") {
    CHECK(hp::is_c_special(fixtures::torus(2, 2)).ok);
    CHECK(!hp::is_c_special(fixtures::torus(1, 1)).ok);
    CHECK(!hp::is_c_special(fixtures::klein_square()).ok);
}

TEST_CASE("racg nerve") {
    auto nerve = hp::racg_nerve(fixtures::torus(2, 2));
    CHECK(nerve.generators == 4);
    CHECK(nerve.edges.size() == 4);
    // Complete bipartite on 2+2: the crossing graph is K_{2,2}; verify each
    // hyperplane crosses exactly two others and the graph is triangle-free.
    std::map<int, std::set<int>> adj;
    for (auto [a, b] : nerve.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for (auto& [v, nb] : adj) CHECK(nb.size() == 2);
    for (auto [a, b] : nerve.edges)
        for (int c : adj[b])
            if (c != a) CHECK(!adj[c].count(a));
    CHECK(nerve.presentation.find("h1^2") != std::string::npos);
    CHECK(nerve.presentation.find("[h") != std::string::npos);

    // Squareless complex: one generator per hyperplane, no relations.
    auto star = fixtures::squareless_star(3);
    auto nerve2 = hp::racg_nerve(star);
    CHECK(nerve2.generators == 3);
    CHECK(nerve2.edges.empty());

    CHECK_THROWS_WITH_AS(hp::racg_nerve(fixtures::torus(1, 1)), doctest::Contains("NotSpecial"),
                         specialcheck::Error);
}

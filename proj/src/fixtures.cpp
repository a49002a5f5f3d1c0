#include "specialcheck/fixtures.hpp"

#include <algorithm>
#include <random>

namespace specialcheck::fixtures {

using cellkit::Decomposition;
using cellkit::FacePairing;
using cellkit::PolyhedronCombinatorics;
using squares::EdgeTag;
using squares::SquareComplex;

SquareComplex torus(int m, int n) {
    SquareComplex sc;
    sc.num_vertices = m * n;
    auto vid = [&](int i, int j) { return ((i % m + m) % m) + m * ((j % n + n) % n); };
    // Horizontal edges first (i,j) -> (i+1,j), then vertical (i,j) -> (i,j+1).
    auto h = [&](int i, int j) { return ((i % m + m) % m) + m * ((j % n + n) % n); };
    auto v = [&](int i, int j) { return m * n + ((i % m + m) % m) + m * ((j % n + n) % n); };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) sc.edges.push_back({vid(i, j), vid(i + 1, j), EdgeTag::Untagged});
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) sc.edges.push_back({vid(i, j), vid(i, j + 1), EdgeTag::Untagged});
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            SquareComplex::Square sq;
            sq.side = {h(i, j), v(i + 1, j), h(i, j + 1), v(i, j)};
            sq.fwd = {true, true, false, false};
            sc.squares.push_back(sq);
        }
    sc.validate();
    return sc;
}

SquareComplex klein_square() {
    // One vertex, edges a (horizontal) and b (vertical); boundary word a b a b^{-1}
    // is the torus; the Klein bottle uses a b a^{-1} b ... with loops at a single
    // vertex every choice below closes; this one makes the horizontal transport
    // orientation-reversing.
    SquareComplex sc;
    sc.num_vertices = 1;
    sc.edges.push_back({0, 0, EdgeTag::Untagged});  // a
    sc.edges.push_back({0, 0, EdgeTag::Untagged});  // b
    SquareComplex::Square sq;
    sq.side = {0, 1, 0, 1};          // a, b, a (same direction!), b reversed
    sq.fwd = {true, true, true, false};
    sc.squares.push_back(sq);
    sc.validate();
    return sc;
}

SquareComplex cube_corner() {
    // Vertices: 0 = corner, 1..3 = edge midpoints, 4..6 = face centers.
    SquareComplex sc;
    sc.num_vertices = 7;
    auto edge = [&](int u, int v) {
        sc.edges.push_back({u, v, EdgeTag::Untagged});
        return static_cast<int>(sc.edges.size()) - 1;
    };
    int c1 = edge(0, 1), c2 = edge(0, 2), c3 = edge(0, 3);
    int a14 = edge(1, 4), a42 = edge(4, 2);
    int a25 = edge(2, 5), a53 = edge(5, 3);
    int a36 = edge(3, 6), a61 = edge(6, 1);
    auto add = [&](int e0, int e1, int e2, int e3) {
        SquareComplex::Square sq;
        sq.side = {e0, e1, e2, e3};
        sq.fwd = {true, true, false, false};
        sc.squares.push_back(sq);
    };
    add(c1, a14, a42, c2);  // 0-1-4-2
    add(c2, a25, a53, c3);  // 0-2-5-3
    add(c3, a36, a61, c1);  // 0-3-6-1
    // Fix directions: side2/side3 reversed means edges stored from earlier
    // endpoint; a42 runs 4->2 so square 1 wants 4->2 forward.
    sc.squares[0].fwd = {true, true, true, false};
    sc.squares[1].fwd = {true, true, true, false};
    sc.squares[2].fwd = {true, true, true, false};
    sc.validate();
    return sc;
}

SquareComplex single_square() {
    SquareComplex sc;
    sc.num_vertices = 4;
    sc.edges.push_back({0, 1, EdgeTag::Untagged});
    sc.edges.push_back({1, 2, EdgeTag::Untagged});
    sc.edges.push_back({2, 3, EdgeTag::Untagged});
    sc.edges.push_back({3, 0, EdgeTag::Untagged});
    SquareComplex::Square sq;
    sq.side = {0, 1, 2, 3};
    sq.fwd = {true, true, true, true};
    sc.squares.push_back(sq);
    sc.validate();
    return sc;
}

SquareComplex squareless_star(int k) {
    SquareComplex sc;
    sc.num_vertices = k + 1;
    for (int i = 1; i <= k; ++i) sc.edges.push_back({0, i, EdgeTag::Untagged});
    sc.validate();
    return sc;
}

std::vector<std::vector<int>> tetrahedron_faces() { return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}; }

std::vector<std::vector<int>> octahedron_faces() {
    return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

std::vector<std::vector<int>> antiprism_faces(int k) {
    require(k >= 3, "BadN", "antiprism needs k >= 3");
    std::vector<std::vector<int>> fs;
    std::vector<int> top, bottom;
    for (int i = 0; i < k; ++i) top.push_back(i);
    for (int i = 2 * k - 1; i >= k; --i) bottom.push_back(i);
    fs.push_back(top);
    fs.push_back(bottom);
    auto t = [&](int i) { return (i % k + k) % k; };
    auto b = [&](int i) { return k + (i % k + k) % k; };
    for (int i = 0; i < k; ++i) {
        fs.push_back({t(i + 1), t(i), b(i)});       // up triangle
        fs.push_back({b(i), b(i + 1), t(i + 1)});   // down triangle
    }
    return fs;
}

namespace {

// All orientation-reversing correspondences pairing face f onto face g of the
// same (coherently oriented) polyhedron: reading g's cycle backwards from each
// rotation.
std::vector<std::vector<int>> reversing_correspondences(const PolyhedronCombinatorics& P, int f, int g) {
    const auto& df = P.faces()[g];
    const int s = static_cast<int>(df.size());
    std::vector<std::vector<int>> out;
    if (static_cast<int>(P.faces()[f].size()) != s) return out;
    for (int rot = 0; rot < s; ++rot) {
        std::vector<int> corr(s);
        for (int k = 0; k < s; ++k) corr[k] = df[(rot - k + 2 * s) % s];
        out.push_back(corr);
    }
    return out;
}

// Enumerate involutive face matchings of a single polyhedron with all
// orientation-reversing correspondences; call sink on each valid decomposition.
template <typename Sink>
void enumerate_self_gluings(const PolyhedronCombinatorics& P, Sink&& sink) {
    const int F = P.num_faces();
    std::vector<int> partner(F, -1);
    std::vector<FacePairing> stack;
    auto rec = [&](auto&& self) -> void {
        int f = -1;
        for (int i = 0; i < F; ++i)
            if (partner[i] < 0) {
                f = i;
                break;
            }
        if (f < 0) {
            Decomposition d;
            d.polyhedra.push_back(P);
            d.pairings = stack;
            sink(d);
            return;
        }
        for (int g = f + 1; g < F; ++g) {
            if (partner[g] >= 0) continue;
            for (auto& corr : reversing_correspondences(P, f, g)) {
                partner[f] = g;
                partner[g] = f;
                stack.push_back({0, f, 0, g, corr});
                self(self);
                stack.pop_back();
                partner[f] = -1;
                partner[g] = -1;
            }
        }
    };
    rec(rec);
}

bool is_right_angled(const Decomposition& d) {
    auto qc = cellkit::quotient_complex(d);
    return cellkit::edge_cycle_check(qc).ok;
}

// Partial edge-class pruning for gluing searches: reject when any class grows
// past four members or closes at a size other than four.
bool edge_classes_can_reach_four(const Decomposition& d) {
    using cellkit::Edge;
    std::map<std::pair<int, Edge>, int> idx;
    std::vector<std::pair<int, Edge>> cells;
    const int np = static_cast<int>(d.polyhedra.size());
    for (int p = 0; p < np; ++p)
        for (const auto& e : d.polyhedra[p].edges()) {
            idx[{p, e}] = static_cast<int>(cells.size());
            cells.push_back({p, e});
        }
    std::vector<int> par(cells.size());
    for (size_t i = 0; i < par.size(); ++i) par[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    for (const auto& pr : d.pairings) {
        const auto& sf = d.polyhedra[pr.src_poly].faces()[pr.src_face];
        const int s = static_cast<int>(sf.size());
        for (int k = 0; k < s; ++k) {
            Edge se = cellkit::make_edge(sf[k], sf[(k + 1) % s]);
            Edge de = cellkit::make_edge(pr.corr[k], pr.corr[(k + 1) % s]);
            par[find(idx.at({pr.src_poly, se}))] = find(idx.at({pr.dst_poly, de}));
        }
    }
    std::map<int, int> size;
    for (size_t i = 0; i < cells.size(); ++i) size[find(static_cast<int>(i))]++;
    std::vector<std::vector<bool>> paired(np);
    for (int p = 0; p < np; ++p) paired[p].assign(d.polyhedra[p].num_faces(), false);
    for (const auto& pr : d.pairings) {
        paired[pr.src_poly][pr.src_face] = true;
        paired[pr.dst_poly][pr.dst_face] = true;
    }
    std::map<int, bool> complete;
    for (const auto& [key, id] : idx) {
        auto [p, e] = key;
        const auto& ds = d.polyhedra[p].edge_sides(e);
        bool both = paired[p][ds[0].face] && paired[p][ds[1].face];
        int r = find(id);
        auto it = complete.find(r);
        complete[r] = (it == complete.end()) ? both : (it->second && both);
    }
    for (const auto& [r, n] : size) {
        if (n > 4) return false;
        if (complete.at(r) && n != 4) return false;
    }
    return true;
}

} // namespace

const std::vector<Decomposition>& octahedron_right_angled_pool() {
    static const std::vector<Decomposition> pool = [] {
        auto P = PolyhedronCombinatorics::build(octahedron_faces());
        std::vector<Decomposition> out;
        enumerate_self_gluings(P, [&](const Decomposition& d) {
            if (is_right_angled(d)) out.push_back(d);
        });
        return out;
    }();
    return pool;
}

std::vector<Decomposition> two_octahedron_right_angled_pool(int limit) {
    auto P = PolyhedronCombinatorics::build(octahedron_faces());
    std::vector<Decomposition> out;
    Decomposition d;
    d.polyhedra = {P, P};
    std::vector<std::pair<int, int>> sides;
    for (int p = 0; p < 2; ++p)
        for (int f = 0; f < 8; ++f) sides.push_back({p, f});
    std::vector<int> partner(16, -1);
    std::vector<FacePairing> stack;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(out.size()) >= limit) return;
        int i = -1;
        for (int t = 0; t < 16; ++t)
            if (partner[t] < 0) {
                i = t;
                break;
            }
        if (i < 0) {
            d.pairings = stack;
            out.push_back(d);
            return;
        }
        for (int j = i + 1; j < 16 && static_cast<int>(out.size()) < limit; ++j) {
            if (partner[j] >= 0) continue;
            auto [pa, fa] = sides[i];
            auto [pb, fb] = sides[j];
            for (auto& corr : reversing_correspondences(d.polyhedra[pb], fa, fb)) {
                partner[i] = j;
                partner[j] = i;
                stack.push_back({pa, fa, pb, fb, corr});
                d.pairings = stack;
                if (edge_classes_can_reach_four(d)) self(self);
                stack.pop_back();
                d.pairings = stack;
                partner[i] = -1;
                partner[j] = -1;
            }
        }
    };
    rec(rec);
    return out;
}

Decomposition whitehead_decomposition() {
    static const Decomposition fixture = [] {
        for (const auto& d : octahedron_right_angled_pool()) {
            auto qc = cellkit::quotient_complex(d);
            if (qc.num_vertex_classes() == 2 && qc.num_edge_classes() == 3 && qc.num_face_classes() == 4)
                return d;
        }
        fail("FixtureSearch", "no octahedral self-gluing with the Whitehead counts");
    }();
    return fixture;
}

Decomposition figure_eight_style_decomposition() {
    static const Decomposition fixture = [] {
        auto T0 = PolyhedronCombinatorics::build(tetrahedron_faces());
        // Two copies; enumerate matchings across and within.
        Decomposition best;
        bool found = false;
        const int F = 4;
        std::vector<std::pair<int, int>> sides;  // (poly, face)
        for (int p = 0; p < 2; ++p)
            for (int f = 0; f < F; ++f) sides.push_back({p, f});
        std::vector<int> partner(8, -1);
        std::vector<FacePairing> stack;
        Decomposition d;
        d.polyhedra = {T0, T0};
        auto rec = [&](auto&& self) -> void {
            if (found) return;
            int i = -1;
            for (int t = 0; t < 8; ++t)
                if (partner[t] < 0) {
                    i = t;
                    break;
                }
            if (i < 0) {
                d.pairings = stack;
                auto qc = cellkit::quotient_complex(d);
                bool all6 = qc.num_edge_classes() == 2;
                for (int c = 0; all6 && c < qc.num_edge_classes(); ++c) all6 = qc.edge_class_size(c) == 6;
                if (all6 && qc.num_vertex_classes() == 1) {
                    best = d;
                    found = true;
                }
                return;
            }
            for (int jdx = i + 1; jdx < 8 && !found; ++jdx) {
                if (partner[jdx] >= 0) continue;
                auto [pi, fi] = sides[i];
                auto [pj, fj] = sides[jdx];
                for (auto& corr : reversing_correspondences(d.polyhedra[pj], fi, fj)) {
                    partner[i] = jdx;
                    partner[jdx] = i;
                    stack.push_back({pi, fi, pj, fj, corr});
                    self(self);
                    stack.pop_back();
                    partner[i] = -1;
                    partner[jdx] = -1;
                    if (found) return;
                }
            }
        };
        rec(rec);
        require(found, "FixtureSearch", "no two-tetrahedron gluing with 6-cycles found");
        return best;
    }();
    return fixture;
}

std::vector<Decomposition> random_right_angled_fixtures(int count, unsigned seed) {
    const auto& singles = octahedron_right_angled_pool();
    auto doubles = two_octahedron_right_angled_pool(40);
    require(!singles.empty() && !doubles.empty(), "FixtureSearch", "empty gluing pools");
    std::mt19937 rng(seed);
    std::vector<Decomposition> out;
    while (static_cast<int>(out.size()) < count) {
        if (rng() % 2 == 0)
            out.push_back(singles[rng() % singles.size()]);
        else
            out.push_back(doubles[rng() % doubles.size()]);
    }
    return out;
}

} // namespace specialcheck::fixtures

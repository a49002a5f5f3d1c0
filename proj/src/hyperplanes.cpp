#include "specialcheck/hyperplanes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace specialcheck::hyperplanes {

using squares::EdgeTag;
using squares::LinkGraphs;

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Hyperplane> hyperplanes(const SquareComplex& sc) {
    UnionFind uf(sc.num_edges());
    std::vector<Midline> all;
    for (int s = 0; s < sc.num_squares(); ++s)
        for (int a = 0; a < 2; ++a) {
            Midline m{s, a};
            all.push_back(m);
            uf.unite(sc.squares[s].side[m.crossed_side(0)], sc.squares[s].side[m.crossed_side(1)]);
        }
    std::map<int, int> root2id;
    std::vector<Hyperplane> out;
    for (int e = 0; e < sc.num_edges(); ++e) {
        int r = uf.find(e);
        if (!root2id.count(r)) {
            root2id[r] = static_cast<int>(out.size());
            out.push_back(Hyperplane{static_cast<int>(out.size()), {}, {}});
        }
        out[root2id[r]].dual_edges.push_back(e);
    }
    for (const auto& m : all) {
        int e = sc.squares[m.square].side[m.crossed_side(0)];
        out[root2id[uf.find(e)]].midlines.push_back(m);
    }
    return out;
}

int RegularNeighborhood::node_index(EndRef r) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == r) return static_cast<int>(i);
    return -1;
}

namespace {

// The end of side `i` of square `s` at corner `c_j` (j = i or i+1), as an
// edge-cell end incidence.
EndRef side_end_at_tail(const SquareComplex& sc, int s, int i) {
    return {sc.squares[s].side[i], sc.squares[s].fwd[i] ? 0 : 1};
}
EndRef side_end_at_head(const SquareComplex& sc, int s, int i) {
    return {sc.squares[s].side[i], sc.squares[s].fwd[i] ? 1 : 0};
}

} // namespace

RegularNeighborhood regular_neighborhood(const SquareComplex& sc, const Hyperplane& h) {
    RegularNeighborhood N;
    N.hyperplane = h.id;
    std::map<EndRef, int> idx;
    for (int e : h.dual_edges)
        for (int end = 0; end < 2; ++end) {
            idx[{e, end}] = static_cast<int>(N.nodes.size());
            N.nodes.push_back({e, end});
        }

    for (size_t mi = 0; mi < h.midlines.size(); ++mi) {
        const Midline& m = h.midlines[mi];
        int i = m.crossed_side(0), j = m.crossed_side(1);
        // Arc over parallel side i+1: joins head end of side i and tail end of
        // side j (corners c_{i+1} and c_{i+2}); arc over side i+3 joins the
        // tail end of side i and head end of side j (corners c_i and c_{i+3}).
        int p1 = m.parallel_side(0), p2 = m.parallel_side(1);
        N.arcs.push_back({static_cast<int>(mi), sc.squares[m.square].side[p1],
                          idx.at(side_end_at_head(sc, m.square, i)), idx.at(side_end_at_tail(sc, m.square, j))});
        N.arcs.push_back({static_cast<int>(mi), sc.squares[m.square].side[p2],
                          idx.at(side_end_at_tail(sc, m.square, i)), idx.at(side_end_at_head(sc, m.square, j))});
    }

    UnionFind uf(static_cast<int>(N.nodes.size()));
    for (const auto& a : N.arcs) uf.unite(a.a, a.b);
    std::map<int, int> root2comp;
    N.node_component.assign(N.nodes.size(), -1);
    for (size_t i = 0; i < N.nodes.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        if (!root2comp.count(r)) root2comp[r] = static_cast<int>(root2comp.size());
        N.node_component[i] = root2comp[r];
    }
    N.num_components = static_cast<int>(root2comp.size());
    N.two_sided = (N.num_components == 2);

    N.component_profile.assign(N.num_components, {});
    for (const auto& a : N.arcs) {
        auto tag = sc.edges[a.ambient_edge].tag;
        auto& prof = N.component_profile[N.node_component[a.a]];
        if (tag == EdgeTag::External) prof.external = true;
        else if (tag == EdgeTag::Internal) prof.internal = true;
        else prof.untagged = true;
    }
    return N;
}

PathologyReport pathology_report(const SquareComplex& sc) {
    require(squares::is_simple(sc), "NotSimple", "links are not simplicial");
    PathologyReport rep;
    auto hps = hyperplanes(sc);

    // Hyperplane id per ambient edge.
    std::vector<int> edge2h(sc.num_edges(), -1);
    for (const auto& h : hps)
        for (int e : h.dual_edges) edge2h[e] = h.id;

    // Self-intersection: the two midlines of some square in one hyperplane.
    for (const auto& h : hps) {
        std::set<int> seen;
        for (const auto& m : h.midlines) {
            if (!seen.insert(m.square).second) {
                rep.self_intersecting.push_back(h.id);
                break;
            }
        }
    }

    std::vector<RegularNeighborhood> nbhds;
    nbhds.reserve(hps.size());
    for (const auto& h : hps) {
        nbhds.push_back(regular_neighborhood(sc, h));
        if (!h.midlines.empty() && !nbhds.back().two_sided) rep.one_sided.push_back(h.id);
    }

    // Adjacency relations for the osculation exclusions.
    std::set<std::pair<EndRef, EndRef>> neighborhood_adjacent;  // through a bundle square
    for (size_t hi = 0; hi < hps.size(); ++hi) {
        const auto& N = nbhds[hi];
        for (const auto& a : N.arcs) {
            EndRef x = N.nodes[a.a], y = N.nodes[a.b];
            neighborhood_adjacent.insert({std::min(x, y), std::max(x, y)});
        }
    }
    std::set<std::pair<EndRef, EndRef>> corner_adjacent;  // adjacent sides of one square
    for (int s = 0; s < sc.num_squares(); ++s)
        for (int i = 0; i < 4; ++i) {
            EndRef x = LinkGraphs::corner_prev_end(sc, s, i);
            EndRef y = LinkGraphs::corner_next_end(sc, s, i);
            corner_adjacent.insert({std::min(x, y), std::max(x, y)});
        }
    auto excluded = [&](EndRef x, EndRef y) {
        auto key = std::make_pair(std::min(x, y), std::max(x, y));
        return neighborhood_adjacent.count(key) || corner_adjacent.count(key);
    };

    // All visits grouped by ambient vertex.
    struct Visit {
        EndRef ref;
        int hyperplane;
        int component;   // side label within its neighborhood
        bool two_sided;
    };
    std::map<int, std::vector<Visit>> at_vertex;
    for (size_t hi = 0; hi < hps.size(); ++hi) {
        if (hps[hi].midlines.empty()) continue;  // bare-node hyperplane: no neighborhood contact
        const auto& N = nbhds[hi];
        for (size_t ni = 0; ni < N.nodes.size(); ++ni) {
            EndRef r = N.nodes[ni];
            int v = LinkGraphs::end_vertex(sc, r);
            at_vertex[v].push_back({r, hps[hi].id, N.node_component[ni], N.two_sided});
        }
    }

    std::set<std::pair<int, int>> crossing;
    for (int s = 0; s < sc.num_squares(); ++s) {
        int h0 = edge2h[sc.squares[s].side[0]];
        int h1 = edge2h[sc.squares[s].side[1]];
        if (h0 != h1) crossing.insert(std::minmax(h0, h1));
    }

    std::set<std::pair<int, int>> inter_pairs_seen;
    for (auto& [v, visits] : at_vertex) {
        for (size_t i = 0; i < visits.size(); ++i)
            for (size_t j = i + 1; j < visits.size(); ++j) {
                const Visit &A = visits[i], &B = visits[j];
                if (A.ref == B.ref) continue;
                if (excluded(A.ref, B.ref)) continue;
                if (A.hyperplane == B.hyperplane) {
                    SelfOsculation so;
                    so.hyperplane = A.hyperplane;
                    so.vertex = v;
                    so.first = A.ref;
                    so.second = B.ref;
                    so.kind = !A.two_sided ? "unoriented" : (A.component != B.component ? "direct" : "indirect");
                    rep.self_osculations.push_back(so);
                } else {
                    auto key = std::minmax(A.hyperplane, B.hyperplane);
                    if (!crossing.count(key)) continue;  // inter-osculation needs a crossing
                    InterOsculation io;
                    io.h1 = key.first;
                    io.h2 = key.second;
                    io.vertex = v;
                    io.first = A.ref;
                    io.second = B.ref;
                    auto tagname = [&](EndRef r) {
                        auto t = sc.edges[r.edge].tag;
                        return t == EdgeTag::External ? "external" : t == EdgeTag::Internal ? "internal" : "untagged";
                    };
                    io.contact_tags = std::string(tagname(A.ref)) + "/" + tagname(B.ref);
                    rep.inter_osculations.push_back(io);
                    inter_pairs_seen.insert(key);
                }
            }
    }
    std::sort(rep.self_intersecting.begin(), rep.self_intersecting.end());
    rep.self_intersecting.erase(std::unique(rep.self_intersecting.begin(), rep.self_intersecting.end()),
                                rep.self_intersecting.end());
    return rep;
}

SpecialVerdict is_c_special(const SquareComplex& sc) {
    SpecialVerdict v;
    if (!squares::is_bipartite(sc).ok) {
        v.reason = "one-skeleton is not bipartite";
        return v;
    }
    if (!squares::is_simple(sc)) {
        v.reason = "links are not simplicial";
        return v;
    }
    auto rep = pathology_report(sc);
    if (!rep.self_intersecting.empty()) {
        v.reason = "a hyperplane self-intersects";
        return v;
    }
    if (!rep.one_sided.empty()) {
        v.reason = "a hyperplane is one-sided";
        return v;
    }
    if (!rep.self_osculations.empty()) {
        v.reason = "a hyperplane self-osculates";
        return v;
    }
    if (!rep.inter_osculations.empty()) {
        v.reason = "two hyperplanes inter-osculate";
        return v;
    }
    v.ok = true;
    return v;
}

RacgNerve racg_nerve(const SquareComplex& sc) {
    auto special = is_c_special(sc);
    require(special.ok, "NotSpecial", special.reason);
    auto hps = hyperplanes(sc);
    std::vector<int> edge2h(sc.num_edges(), -1);
    for (const auto& h : hps)
        for (int e : h.dual_edges) edge2h[e] = h.id;
    std::set<std::pair<int, int>> cross;
    for (int s = 0; s < sc.num_squares(); ++s) {
        int h0 = edge2h[sc.squares[s].side[0]];
        int h1 = edge2h[sc.squares[s].side[1]];
        if (h0 != h1) cross.insert(std::minmax(h0, h1));
    }
    RacgNerve nerve;
    nerve.generators = static_cast<int>(hps.size());
    nerve.edges.assign(cross.begin(), cross.end());
    std::ostringstream os;
    os << "< ";
    for (int i = 0; i < nerve.generators; ++i) os << "h" << (i + 1) << (i + 1 < nerve.generators ? ", " : " ");
    os << "| ";
    for (int i = 0; i < nerve.generators; ++i) os << "h" << (i + 1) << "^2" << (i + 1 < nerve.generators ? ", " : "");
    for (const auto& [a, b] : nerve.edges) os << ", [h" << (a + 1) << ",h" << (b + 1) << "]";
    os << " >";
    nerve.presentation = os.str();
    return nerve;
}

} // namespace specialcheck::hyperplanes

#include "specialcheck/squares.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

namespace specialcheck::squares {

using cellkit::Edge;
using nlohmann::json;

int SquareComplex::side_tail(int s, int i) const {
    const auto& sq = squares[s];
    const auto& e = edges[sq.side[i]];
    return sq.fwd[i] ? e.u : e.v;
}

int SquareComplex::side_head(int s, int i) const {
    const auto& sq = squares[s];
    const auto& e = edges[sq.side[i]];
    return sq.fwd[i] ? e.v : e.u;
}

void SquareComplex::validate() const {
    for (const auto& e : edges)
        require(e.u >= 0 && e.u < num_vertices && e.v >= 0 && e.v < num_vertices, "BadInput",
                "edge endpoint out of range");
    for (int s = 0; s < num_squares(); ++s) {
        for (int i = 0; i < 4; ++i) {
            require(squares[s].side[i] >= 0 && squares[s].side[i] < num_edges(), "BadInput",
                    "square side out of range");
            require(side_head(s, i) == side_tail(s, (i + 1) % 4), "BadInput",
                    "square boundary is not a closed walk");
        }
    }
    if (!vertex_tags.empty())
        require(static_cast<int>(vertex_tags.size()) == num_vertices, "BadInput", "vertex tag table shape");
}

StandardSquareComplex standard_square_complex(const cellkit::QuotientComplex& qc) {
    const auto& d = *qc.source;
    StandardSquareComplex out;
    SquareComplex& sc = out.sc;

    // Vertices: edge classes, then face classes, then polyhedra.
    const int ne = qc.num_edge_classes();
    const int nf = qc.num_face_classes();
    const int np = static_cast<int>(d.polyhedra.size());
    sc.num_vertices = ne + nf + np;
    sc.vertex_tags.assign(sc.num_vertices, VertexTag::EdgeCell);
    out.vertex_class.assign(sc.num_vertices, 0);
    for (int i = 0; i < ne; ++i) out.vertex_class[i] = i;
    for (int i = 0; i < nf; ++i) {
        sc.vertex_tags[ne + i] = VertexTag::FaceCell;
        out.vertex_class[ne + i] = i;
    }
    for (int i = 0; i < np; ++i) {
        sc.vertex_tags[ne + nf + i] = VertexTag::PolyCell;
        out.vertex_class[ne + nf + i] = i;
    }
    auto v_edge = [&](int c) { return c; };
    auto v_face = [&](int c) { return ne + c; };
    auto v_poly = [&](int p) { return ne + nf + p; };

    // Internal edge cells: one per face side (poly, face).
    std::map<std::pair<int, int>, int> internal_cell;
    for (int p = 0; p < np; ++p)
        for (int f = 0; f < d.polyhedra[p].num_faces(); ++f) {
            int fc = qc.face_index.at({p, f});
            internal_cell[{p, f}] = sc.num_edges();
            sc.edges.push_back({v_face(fc), v_poly(p), EdgeTag::Internal});
        }

    // External edge cells: orbits of (poly, face, slot) under the pairing of
    // that face; each orbit has the two matched slots.
    std::map<std::tuple<int, int, int>, int> external_cell;
    for (int p = 0; p < np; ++p) {
        const auto& P = d.polyhedra[p];
        for (int f = 0; f < P.num_faces(); ++f) {
            const auto& cyc = P.faces()[f];
            const int s = static_cast<int>(cyc.size());
            for (int k = 0; k < s; ++k) {
                if (external_cell.count({p, f, k})) continue;
                // Partner slot under the face pairing.
                auto [pp, pf] = d.partner_face(p, f);
                int a = d.map_vertex(p, f, cyc[k]);
                int b = d.map_vertex(p, f, cyc[(k + 1) % s]);
                const auto& pcyc = d.polyhedra[pp].faces()[pf];
                int pk = -1;
                const int ps = static_cast<int>(pcyc.size());
                for (int t = 0; t < ps; ++t) {
                    Edge et = cellkit::make_edge(pcyc[t], pcyc[(t + 1) % ps]);
                    if (et == cellkit::make_edge(a, b)) pk = t;
                }
                require(pk >= 0, "InconsistentPairing", "pairing does not map face sides to face sides");
                int ecls = qc.edge_index.at({p, P.slot_edge(f, k)});
                int fcls = qc.face_index.at({p, f});
                int cell = sc.num_edges();
                sc.edges.push_back({v_edge(ecls), v_face(fcls), EdgeTag::External});
                external_cell[{p, f, k}] = cell;
                external_cell[{pp, pf, pk}] = cell;
            }
        }
    }

    // Squares: one per (polyhedron, edge); corners [ē, f̄, P̄, ḡ].
    for (int p = 0; p < np; ++p) {
        const auto& P = d.polyhedra[p];
        for (const auto& e : P.edges()) {
            const auto& sides = P.edge_sides(e);
            int f = sides[0].face, fslot = sides[0].pos;
            int g = sides[1].face, gslot = sides[1].pos;
            SquareComplex::Square sq;
            // side 0: ē -> f̄ (external cell of (p,f,fslot)), side 1: f̄ -> P̄,
            // side 2: P̄ -> ḡ (internal reversed), side 3: ḡ -> ē (external reversed).
            sq.side = {external_cell.at({p, f, fslot}), internal_cell.at({p, f}),
                       internal_cell.at({p, g}), external_cell.at({p, g, gslot})};
            sq.fwd = {true, true, false, false};
            sc.squares.push_back(sq);
            out.square_source.push_back({p, e});
            out.square_faces.push_back({f, g});
        }
    }
    sc.validate();
    return out;
}

BipartiteVerdict is_bipartite(const SquareComplex& sc) {
    BipartiteVerdict v;
    v.part.assign(sc.num_vertices, -1);
    for (int seed = 0; seed < sc.num_vertices; ++seed) {
        if (v.part[seed] != -1) continue;
        v.part[seed] = 0;
        std::deque<int> q{seed};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const auto& e : sc.edges) {
                int a = e.u, b = e.v;
                if (a != x && b != x) continue;
                int y = (a == x) ? b : a;
                if (a == b) return v;  // loop edge: not bipartite
                if (v.part[y] == -1) {
                    v.part[y] = 1 - v.part[x];
                    q.push_back(y);
                } else if (v.part[y] == v.part[x]) {
                    return v;
                }
            }
        }
    }
    v.ok = true;
    return v;
}

LinkGraphs::EndRef LinkGraphs::corner_prev_end(const SquareComplex& sc, int s, int i) {
    int j = (i + 3) % 4;
    // Head incidence of side j: if traversed forward, the head is the stored v (end 1).
    return {sc.squares[s].side[j], sc.squares[s].fwd[j] ? 1 : 0};
}

LinkGraphs::EndRef LinkGraphs::corner_next_end(const SquareComplex& sc, int s, int i) {
    return {sc.squares[s].side[i], sc.squares[s].fwd[i] ? 0 : 1};
}

int LinkGraphs::end_vertex(const SquareComplex& sc, EndRef r) {
    const auto& e = sc.edges[r.edge];
    return r.end == 0 ? e.u : e.v;
}

namespace {

struct LinkGraph {
    // Nodes: edge-end incidences at the vertex; edges: corners.
    std::vector<LinkGraphs::EndRef> nodes;
    std::map<LinkGraphs::EndRef, int> node_index;
    struct Arc {
        int a, b;
        int square, corner;
    };
    std::vector<Arc> arcs;
};

std::vector<LinkGraph> build_links(const SquareComplex& sc) {
    std::vector<LinkGraph> links(sc.num_vertices);
    auto node_of = [&](int v, LinkGraphs::EndRef r) {
        auto& L = links[v];
        auto it = L.node_index.find(r);
        if (it != L.node_index.end()) return it->second;
        int id = static_cast<int>(L.nodes.size());
        L.node_index[r] = id;
        L.nodes.push_back(r);
        return id;
    };
    // Ensure isolated incidences exist as nodes too.
    for (int e = 0; e < sc.num_edges(); ++e) {
        node_of(sc.edges[e].u, {e, 0});
        node_of(sc.edges[e].v, {e, 1});
    }
    for (int s = 0; s < sc.num_squares(); ++s)
        for (int i = 0; i < 4; ++i) {
            int v = sc.corner_vertex(s, i);
            auto p = LinkGraphs::corner_prev_end(sc, s, i);
            auto n = LinkGraphs::corner_next_end(sc, s, i);
            links[v].arcs.push_back({node_of(v, p), node_of(v, n), s, i});
        }
    return links;
}

} // namespace

bool is_simple(const SquareComplex& sc) {
    auto links = build_links(sc);
    for (const auto& L : links) {
        std::set<std::pair<int, int>> seen;
        for (const auto& a : L.arcs) {
            if (a.a == a.b) return false;  // loop in a link
            auto key = std::minmax(a.a, a.b);
            if (!seen.insert(key).second) return false;  // double edge in a link
        }
    }
    return true;
}

NpcVerdict is_npc(const SquareComplex& sc) {
    NpcVerdict verdict;
    auto links = build_links(sc);
    for (int v = 0; v < sc.num_vertices; ++v) {
        const auto& L = links[v];
        const int n = static_cast<int>(L.nodes.size());
        // Simple cycles of length 1, 2, 3 by direct search.
        for (const auto& a : L.arcs)
            if (a.a == a.b) {
                verdict.ok = false;
                verdict.witness_vertex = v;
                verdict.witness_cycle = {{a.square, a.corner}};
                return verdict;
            }
        const int m = static_cast<int>(L.arcs.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (std::minmax(L.arcs[i].a, L.arcs[i].b) != std::minmax(L.arcs[j].a, L.arcs[j].b)) continue;
                verdict.ok = false;
                verdict.witness_vertex = v;
                verdict.witness_cycle = {{L.arcs[i].square, L.arcs[i].corner}, {L.arcs[j].square, L.arcs[j].corner}};
                return verdict;
            }
        // Triangles on distinct nodes.
        std::vector<std::vector<std::pair<int, int>>> adj(n);  // node -> (other, arc id)
        for (int i = 0; i < m; ++i) {
            adj[L.arcs[i].a].push_back({L.arcs[i].b, i});
            adj[L.arcs[i].b].push_back({L.arcs[i].a, i});
        }
        for (int x = 0; x < n; ++x)
            for (auto [y, ai] : adj[x]) {
                if (y <= x) continue;
                for (auto [z, aj] : adj[y]) {
                    if (z <= y) continue;
                    for (auto [w, ak] : adj[z])
                        if (w == x) {
                            verdict.ok = false;
                            verdict.witness_vertex = v;
                            verdict.witness_cycle = {{L.arcs[ai].square, L.arcs[ai].corner},
                                                     {L.arcs[aj].square, L.arcs[aj].corner},
                                                     {L.arcs[ak].square, L.arcs[ak].corner}};
                            return verdict;
                        }
                }
            }
    }
    return verdict;
}

std::string square_complex_to_json(const SquareComplex& sc) {
    json j;
    j["vertices"] = sc.num_vertices;
    if (!sc.vertex_tags.empty()) {
        std::vector<std::string> tags;
        for (auto t : sc.vertex_tags)
            tags.push_back(t == VertexTag::EdgeCell   ? "edge"
                           : t == VertexTag::FaceCell ? "face"
                           : t == VertexTag::PolyCell ? "poly"
                                                      : "plain");
        j["vertex_tags"] = tags;
    }
    j["edges"] = json::array();
    for (const auto& e : sc.edges) {
        json je = {{"ends", {e.u, e.v}}};
        if (e.tag != EdgeTag::Untagged) je["tag"] = (e.tag == EdgeTag::Internal ? "internal" : "external");
        j["edges"].push_back(je);
    }
    j["squares"] = json::array();
    for (const auto& s : sc.squares)
        j["squares"].push_back({{"sides", {s.side[0], s.side[1], s.side[2], s.side[3]}},
                                {"dirs", {s.fwd[0], s.fwd[1], s.fwd[2], s.fwd[3]}}});
    return j.dump(1);
}

SquareComplex square_complex_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail("BadInput", std::string("invalid JSON: ") + e.what());
    }
    SquareComplex sc;
    sc.num_vertices = j.at("vertices").get<int>();
    if (j.contains("vertex_tags")) {
        for (const auto& t : j["vertex_tags"]) {
            std::string s = t.get<std::string>();
            sc.vertex_tags.push_back(s == "edge"   ? VertexTag::EdgeCell
                                     : s == "face" ? VertexTag::FaceCell
                                     : s == "poly" ? VertexTag::PolyCell
                                                   : VertexTag::Plain);
        }
    }
    for (const auto& je : j.value("edges", json::array())) {
        SquareComplex::EdgeCell e;
        e.u = je.at("ends")[0];
        e.v = je.at("ends")[1];
        if (je.contains("tag"))
            e.tag = je["tag"] == "internal" ? EdgeTag::Internal : EdgeTag::External;
        sc.edges.push_back(e);
    }
    for (const auto& js : j.value("squares", json::array())) {
        SquareComplex::Square s;
        for (int i = 0; i < 4; ++i) {
            s.side[i] = js.at("sides")[i];
            s.fwd[i] = js.at("dirs")[i];
        }
        sc.squares.push_back(s);
    }
    sc.validate();
    return sc;
}

} // namespace specialcheck::squares

#include "specialcheck/surfaces.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace specialcheck::surfaces {

using cellkit::make_edge;

FlatStep flat_neighbor(const Decomposition& d, const QuotientComplex& qc, FaceSide side, Edge e) {
    auto [p, f] = side;
    const auto& P = d.polyhedra[p];
    int cls = qc.edge_index.at({p, e});
    require(qc.edge_class_size(cls) == 4, "NotRightAngled",
            "edge class has " + std::to_string(qc.edge_class_size(cls)) + " members, not 4");
    int g = P.other_face_at(e, f);
    auto [pp, gp] = d.partner_face(p, g);
    int a = d.map_vertex(p, g, e.first);
    int b = d.map_vertex(p, g, e.second);
    Edge ep = make_edge(a, b);
    int f1 = d.polyhedra[pp].other_face_at(ep, gp);
    return {{pp, f1}, ep};
}

FlatSurface surface_closure(const Decomposition& d, const QuotientComplex& qc, FaceSide seed) {
    FlatSurface out;
    std::deque<FaceSide> q{seed};
    out.sides.insert(seed);
    while (!q.empty()) {
        auto side = q.front();
        q.pop_front();
        const auto& P = d.polyhedra[side.first];
        const auto& cyc = P.faces()[side.second];
        const int s = static_cast<int>(cyc.size());
        for (int k = 0; k < s; ++k) {
            Edge e = make_edge(cyc[k], cyc[(k + 1) % s]);
            auto step = flat_neighbor(d, qc, side, e);
            if (out.sides.insert(step.side).second) q.push_back(step.side);
        }
    }

    std::set<int> classes;
    for (const auto& side : out.sides) classes.insert(qc.face_index.at(side));
    out.face_classes.assign(classes.begin(), classes.end());

    // Orientable iff no face class is reached through both of its sides.
    std::map<int, int> class_side_count;
    for (const auto& side : out.sides) class_side_count[qc.face_index.at(side)]++;
    out.orientable = true;
    for (auto [c, n] : class_side_count)
        if (n == 2) out.orientable = false;
    out.pi1_index = out.orientable ? 1 : 2;

    // Euler characteristic of the glued ideal-polygon complex. Polygons are
    // face classes with a fixed representative side; flags (class, slot) glue
    // by the flat-neighbor rule.
    auto representative = [&](int cls) { return qc.face_classes[cls][0]; };
    auto to_representative = [&](FaceSide side, Edge e) -> std::pair<FaceSide, Edge> {
        FaceSide rep = representative(qc.face_index.at(side));
        if (rep == side) return {side, e};
        int a = d.map_vertex(side.first, side.second, e.first);
        int b = d.map_vertex(side.first, side.second, e.second);
        return {rep, make_edge(a, b)};
    };

    struct Flag {
        int cls;
        int slot;
        bool operator<(const Flag& o) const { return std::tie(cls, slot) < std::tie(o.cls, o.slot); }
        bool operator==(const Flag& o) const { return cls == o.cls && slot == o.slot; }
    };
    auto slot_of = [&](FaceSide side, Edge e) {
        const auto& cyc = d.polyhedra[side.first].faces()[side.second];
        const int s = static_cast<int>(cyc.size());
        for (int k = 0; k < s; ++k)
            if (make_edge(cyc[k], cyc[(k + 1) % s]) == e) return k;
        fail("BadInput", "edge not on face");
    };

    // Vertex-correspondence of the flat gluing for the corner cycles.
    std::map<Flag, std::pair<Flag, std::map<int, int>>> glue;
    for (int cls : out.face_classes) {
        FaceSide rep = representative(cls);
        const auto& cyc = d.polyhedra[rep.first].faces()[rep.second];
        const int s = static_cast<int>(cyc.size());
        for (int k = 0; k < s; ++k) {
            Edge e = make_edge(cyc[k], cyc[(k + 1) % s]);
            auto step = flat_neighbor(d, qc, rep, e);
            // Vertex map across the gluing (through the intermediate pairing).
            const auto& P = d.polyhedra[rep.first];
            int g = P.other_face_at(e, rep.second);
            std::map<int, int> vmap;
            for (int v : {e.first, e.second}) vmap[v] = d.map_vertex(rep.first, g, v);
            // Normalize the target onto its representative side.
            auto [nside, nedge] = to_representative(step.side, step.edge);
            if (nside != step.side)
                for (auto& [v, w] : vmap) w = d.map_vertex(step.side.first, step.side.second, w);
            glue[{cls, k}] = {{qc.face_index.at(nside), slot_of(nside, nedge)}, vmap};
        }
    }

    int F = static_cast<int>(out.face_classes.size());
    int flag_count = 0;
    for (int cls : out.face_classes) {
        FaceSide rep = representative(cls);
        flag_count += static_cast<int>(d.polyhedra[rep.first].faces()[rep.second].size());
    }
    int E = flag_count / 2;

    // Corner cycles: corners (cls, position) identified by the gluings.
    struct Corner {
        int cls, pos;
        bool operator<(const Corner& o) const { return std::tie(cls, pos) < std::tie(o.cls, o.pos); }
    };
    std::map<Corner, int> corner_id;
    std::vector<Corner> corners;
    for (int cls : out.face_classes) {
        FaceSide rep = representative(cls);
        const int s = static_cast<int>(d.polyhedra[rep.first].faces()[rep.second].size());
        for (int k = 0; k < s; ++k) {
            corner_id[{cls, k}] = static_cast<int>(corners.size());
            corners.push_back({cls, k});
        }
    }
    std::vector<int> parent(corners.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& [flag, target] : glue) {
        const auto& [tflag, vmap] = target;
        // Identify the two endpoint corners of the glued edges.
        FaceSide rep = representative(flag.cls);
        const auto& cyc = d.polyhedra[rep.first].faces()[rep.second];
        const int s = static_cast<int>(cyc.size());
        FaceSide trep = representative(tflag.cls);
        const auto& tcyc = d.polyhedra[trep.first].faces()[trep.second];
        const int ts = static_cast<int>(tcyc.size());
        for (int endpos : {flag.slot, (flag.slot + 1) % s}) {
            int v = cyc[endpos];
            int w = vmap.at(v);
            int tpos = -1;
            for (int t = 0; t < ts; ++t)
                if (tcyc[t] == w) tpos = t;
            parent[find(corner_id.at({flag.cls, endpos}))] = find(corner_id.at({tflag.cls, tpos}));
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < corners.size(); ++i) roots.insert(find(static_cast<int>(i)));
    out.punctures = static_cast<int>(roots.size());
    out.euler_closed = F - E + out.punctures;
    return out;
}

FaceSide midline_face_side(const squares::StandardSquareComplex& ssc, const hyperplanes::Midline& m) {
    int p = ssc.square_source[m.square].first;
    auto [f, g] = ssc.square_faces[m.square];
    // Axis 0 crosses the external side in face f; its parallel external side
    // lies in face g, and vice versa.
    return {p, m.axis == 0 ? g : f};
}

FlatSurface hyperplane_surface(const squares::StandardSquareComplex& ssc, const Decomposition& d,
                               const QuotientComplex& qc, const hyperplanes::Hyperplane& h) {
    require(!h.midlines.empty(), "BadInput", "hyperplane has no midlines");
    return surface_closure(d, qc, midline_face_side(ssc, h.midlines[0]));
}

RelationReport hyperplane_surface_relations(const squares::StandardSquareComplex& ssc, const Decomposition& d,
                                            const QuotientComplex& qc) {
    RelationReport rep;
    const auto& sc = ssc.sc;
    auto hps = hyperplanes::hyperplanes(sc);
    std::vector<int> edge2h(sc.num_edges(), -1);
    for (const auto& h : hps)
        for (int e : h.dual_edges) edge2h[e] = h.id;

    std::map<int, FlatSurface> surf;
    for (const auto& h : hps) surf[h.id] = hyperplane_surface(ssc, d, qc, h);

    // Crossing pairs: surfaces must contain perpendicular faces of one polyhedron.
    std::set<std::pair<int, int>> crossing_done;
    for (int s = 0; s < sc.num_squares(); ++s) {
        int h0 = edge2h[sc.squares[s].side[0]];  // axis-0 hyperplane crosses side 0
        int h1 = edge2h[sc.squares[s].side[1]];
        if (h0 == h1) continue;
        ++rep.crossing_pairs_checked;
        int p = ssc.square_source[s].first;
        auto [f, g] = ssc.square_faces[s];
        // Axis 0 carries face g, axis 1 carries face f, and f ∩ g is the
        // square's source edge.
        FaceSide s0{p, g}, s1{p, f};
        auto contains_class = [&](const FlatSurface& sf, FaceSide side) {
            return std::find(sf.face_classes.begin(), sf.face_classes.end(), qc.face_index.at(side)) !=
                   sf.face_classes.end();
        };
        if (!contains_class(surf[h0], s0))
            rep.violations.push_back("crossing pair misses a perpendicular face (axis 0)");
        if (!contains_class(surf[h1], s1))
            rep.violations.push_back("crossing pair misses a perpendicular face (axis 1)");
        rep.crossing_face_sides.push_back({s0, s1});
        crossing_done.insert(std::minmax(h0, h1));
    }

    // External-edge osculations: the two squares on an external edge carry
    // parallel midlines; their hyperplanes are equal with nonorientable
    // surface, or distinct with equal orientable surfaces.
    for (int e = 0; e < sc.num_edges(); ++e) {
        if (sc.edges[e].tag != squares::EdgeTag::External) continue;
        std::vector<std::pair<int, int>> incidences;  // (square, side)
        for (int s = 0; s < sc.num_squares(); ++s)
            for (int i = 0; i < 4; ++i)
                if (sc.squares[s].side[i] == e) incidences.push_back({s, i});
        if (incidences.size() != 2) continue;  // boundary-ish fixture
        ++rep.external_osculations_checked;
        auto parallel_h = [&](std::pair<int, int> inc) {
            auto [s, i] = inc;
            // The midline parallel to side i is the one crossing sides i+1, i+3.
            int axis = (i + 1) % 2;
            return edge2h[sc.squares[s].side[axis]];
        };
        int h1 = parallel_h(incidences[0]);
        int h2 = parallel_h(incidences[1]);
        if (h1 == h2) {
            if (surf[h1].orientable)
                rep.violations.push_back("self-parallel hyperplane with orientable surface at external edge " +
                                         std::to_string(e));
        } else {
            if (!surf[h1].same_surface(surf[h2]))
                rep.violations.push_back("parallel hyperplanes with different surfaces at external edge " +
                                         std::to_string(e));
            else if (!surf[h1].orientable)
                rep.violations.push_back("distinct parallel hyperplanes with nonorientable surface at edge " +
                                         std::to_string(e));
        }
    }
    return rep;
}

} // namespace specialcheck::surfaces

#include "specialcheck/cellkit.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

namespace specialcheck::cellkit {

using nlohmann::json;

PolyhedronCombinatorics PolyhedronCombinatorics::build(std::vector<std::vector<int>> faces) {
    require(!faces.empty(), "BadInput", "empty face list");
    PolyhedronCombinatorics P;

    std::set<int> vset;
    for (const auto& f : faces) {
        require(f.size() >= 3, "BadInput", "face with fewer than 3 vertices");
        std::set<int> fv(f.begin(), f.end());
        require(fv.size() == f.size(), "BadInput", "repeated vertex in a face cycle");
        vset.insert(f.begin(), f.end());
    }

    // Every edge must lie in exactly two face sides.
    std::map<Edge, std::vector<Dart>> sides;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        for (int k = 0; k < static_cast<int>(f.size()); ++k)
            sides[make_edge(f[k], f[(k + 1) % f.size()])].push_back({fi, k});
    }
    for (const auto& [e, ds] : sides)
        require(ds.size() == 2, "EdgeDegree",
                "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} lies in " +
                    std::to_string(ds.size()) + " faces");

    // Orientation normalization: flip face cycles so that every edge is
    // traversed once in each direction. Failure means the surface is not an
    // orientable closed surface built coherently, hence not a 2-sphere.
    auto traverses_forward = [&](const std::vector<int>& f, int k, Edge e) {
        return f[k] == e.first && f[(k + 1) % f.size()] == e.second;
    };
    std::vector<int> flip(faces.size(), -1);
    std::deque<int> bfs;
    for (int seed = 0; seed < static_cast<int>(faces.size()); ++seed) {
        if (flip[seed] != -1) continue;
        flip[seed] = 0;
        bfs.push_back(seed);
        while (!bfs.empty()) {
            int fi = bfs.front();
            bfs.pop_front();
            const auto& f = faces[fi];
            for (int k = 0; k < static_cast<int>(f.size()); ++k) {
                Edge e = make_edge(f[k], f[(k + 1) % f.size()]);
                const auto& ds = sides[e];
                Dart other = (ds[0].face == fi && ds[0].pos == k) ? ds[1] : ds[0];
                // Same direction of traversal before flips?
                bool same_dir = traverses_forward(faces[fi], k, e) ==
                                traverses_forward(faces[other.face], other.pos, e);
                int needed = same_dir ? 1 - flip[fi] : flip[fi];
                if (other.face == fi) {
                    // A face meeting an edge twice cannot be coherently oriented.
                    require(!same_dir, "NotSphere", "face traverses an edge twice in the same direction");
                    continue;
                }
                if (flip[other.face] == -1) {
                    flip[other.face] = needed;
                    bfs.push_back(other.face);
                } else {
                    require(flip[other.face] == needed, "NotSphere", "face cycles are not coherently orientable");
                }
            }
        }
    }
    for (size_t i = 0; i < faces.size(); ++i)
        if (flip[i] == 1) std::reverse(faces[i].begin(), faces[i].end());

    P.faces_ = std::move(faces);
    P.vertices_.assign(vset.begin(), vset.end());

    // Rebuild side map on the normalized cycles.
    P.edge_sides_.clear();
    std::map<Edge, std::vector<Dart>> sides2;
    for (int fi = 0; fi < P.num_faces(); ++fi)
        for (int k = 0; k < P.face_size(fi); ++k) sides2[P.slot_edge(fi, k)].push_back({fi, k});
    for (auto& [e, ds] : sides2) {
        P.edges_.push_back(e);
        P.edge_sides_[e] = {ds[0], ds[1]};
    }

    for (int v : P.vertices_) P.valence_[v] = 0;
    for (const auto& e : P.edges_) {
        P.valence_[e.first]++;
        P.valence_[e.second]++;
    }

    // Connectivity of the face-adjacency graph.
    {
        std::vector<int> seen(P.num_faces(), 0);
        std::deque<int> q{0};
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int fi = q.front();
            q.pop_front();
            for (int k = 0; k < P.face_size(fi); ++k) {
                Dart o = P.opposite({fi, k});
                if (!seen[o.face]) {
                    seen[o.face] = 1;
                    ++cnt;
                    q.push_back(o.face);
                }
            }
        }
        require(cnt == P.num_faces(), "NotSphere", "face complex is disconnected");
    }

    require(P.num_vertices() - P.num_edges() + P.num_faces() == 2, "NotSphere",
            "Euler characteristic is not 2");

    // Manifold vertex links: the corners at each vertex must form one cycle.
    for (int v : P.vertices_) {
        auto star = P.vertex_star(v);
        require(static_cast<int>(star.size()) == P.valence_[v], "NotSphere",
                "vertex link is not a single cycle at vertex " + std::to_string(v));
    }

    // Polyhedron condition: no two distinct faces share more than one edge.
    std::map<std::pair<int, int>, int> shared;
    for (const auto& [e, ds] : P.edge_sides_) {
        int a = ds[0].face, b = ds[1].face;
        if (a == b) continue;
        auto key = std::minmax(a, b);
        int n = ++shared[key];
        require(n <= 1, "DoubleAdjacency",
                "faces " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                    " share two edges");
        P.dual_edges_.insert(key);
    }
    // A face sharing an edge with itself would have been rejected above; also
    // record dual loops as forbidden.
    for (const auto& [e, ds] : P.edge_sides_)
        require(ds[0].face != ds[1].face, "DoubleAdjacency", "face shares an edge with itself");

    return P;
}

int PolyhedronCombinatorics::valence(int v) const {
    auto it = valence_.find(v);
    require(it != valence_.end(), "BadInput", "unknown vertex");
    return it->second;
}

int PolyhedronCombinatorics::face_vertex(int f, int k) const {
    const auto& fc = faces_[f];
    return fc[((k % static_cast<int>(fc.size())) + fc.size()) % fc.size()];
}

Edge PolyhedronCombinatorics::slot_edge(int f, int k) const {
    return make_edge(face_vertex(f, k), face_vertex(f, k + 1));
}

const std::array<Dart, 2>& PolyhedronCombinatorics::edge_sides(Edge e) const {
    auto it = edge_sides_.find(e);
    require(it != edge_sides_.end(), "BadInput", "unknown edge");
    return it->second;
}

Dart PolyhedronCombinatorics::opposite(Dart d) const {
    const auto& ds = edge_sides(slot_edge(d.face, d.pos));
    return (ds[0] == d) ? ds[1] : ds[0];
}

int PolyhedronCombinatorics::other_face_at(Edge e, int f) const {
    const auto& ds = edge_sides(e);
    if (ds[0].face == f && ds[1].face != f) return ds[1].face;
    if (ds[1].face == f && ds[0].face != f) return ds[0].face;
    require(ds[0].face == f || ds[1].face == f, "BadInput", "face does not contain edge");
    return ds[0].face;  // unreachable for valid polyhedra
}

std::vector<Dart> PolyhedronCombinatorics::vertex_star(int v) const {
    // Corners at v: darts (f,k) with faces[f][k] == v. Rotation: from corner
    // (f,k), the incoming dart is (f,k-1); its opposite (g,j) leaves v in the
    // neighboring face, giving corner (g,j).
    Dart start{-1, -1};
    for (int fi = 0; fi < num_faces() && start.face < 0; ++fi)
        for (int k = 0; k < face_size(fi); ++k)
            if (faces_[fi][k] == v) {
                start = {fi, k};
                break;
            }
    require(start.face >= 0, "BadInput", "vertex not in any face");
    std::vector<Dart> cycle;
    Dart cur = start;
    do {
        cycle.push_back(cur);
        Dart in = prev(cur);
        Dart o = opposite(in);
        // o is the dart v -> (previous vertex) in the adjacent face; its tail is v.
        cur = o;
        if (static_cast<int>(cycle.size()) > 4 * num_edges()) fail("NotSphere", "vertex star does not close");
    } while (!(cur == start));
    return cycle;
}

std::string PolyhedronCombinatorics::encode(Dart start, bool mirror) const {
    std::map<int, int> vlabel;
    auto label = [&](int v) {
        auto it = vlabel.find(v);
        if (it != vlabel.end()) return it->second;
        int id = static_cast<int>(vlabel.size());
        vlabel[v] = id;
        return id;
    };
    std::vector<int> face_seen(num_faces(), 0);
    std::deque<Dart> q{start};
    std::ostringstream os;
    while (!q.empty()) {
        Dart d = q.front();
        q.pop_front();
        if (face_seen[d.face]) continue;
        face_seen[d.face] = 1;
        int s = face_size(d.face);
        os << "(";
        for (int t = 0; t < s; ++t) {
            int k = mirror ? (d.pos - t + 2 * s) % s : (d.pos + t) % s;
            os << label(faces_[d.face][k]) << (t + 1 < s ? "," : "");
        }
        os << ")";
        for (int t = 0; t < s; ++t) {
            // Enqueue neighbors in reading order; enter the neighbor at the
            // dart matching the shared edge, shifted to keep the walk
            // deterministic under mirroring.
            int k = mirror ? (d.pos - t - 1 + 2 * s) % s : (d.pos + t) % s;
            Dart o = opposite({d.face, k});
            if (!face_seen[o.face]) q.push_back(mirror ? o : next(o));
        }
    }
    return os.str();
}

std::string PolyhedronCombinatorics::canonical_code() const {
    std::string best;
    for (int fi = 0; fi < num_faces(); ++fi)
        for (int k = 0; k < face_size(fi); ++k)
            for (bool mirror : {false, true}) {
                std::string c = encode({fi, k}, mirror);
                if (best.empty() || c < best) best = c;
            }
    return best;
}

std::string PolyhedronCombinatorics::canonical_code_oriented() const {
    std::string best;
    for (int fi = 0; fi < num_faces(); ++fi)
        for (int k = 0; k < face_size(fi); ++k) {
            std::string c = encode({fi, k}, false);
            if (best.empty() || c < best) best = c;
        }
    return best;
}

std::vector<PolyhedronCombinatorics::Automorphism> PolyhedronCombinatorics::automorphisms() const {
    // The vertex relabeling of encode() is determined by (start dart, mirror);
    // two starts with identical codes compose to an automorphism.
    auto relabel = [&](Dart start, bool mirror) {
        std::map<int, int> vlabel;
        auto label = [&](int v) {
            auto it = vlabel.find(v);
            if (it != vlabel.end()) return it->second;
            int id = static_cast<int>(vlabel.size());
            vlabel[v] = id;
            return id;
        };
        std::vector<int> face_seen(num_faces(), 0);
        std::deque<Dart> q{start};
        while (!q.empty()) {
            Dart d = q.front();
            q.pop_front();
            if (face_seen[d.face]) continue;
            face_seen[d.face] = 1;
            int s = face_size(d.face);
            for (int t = 0; t < s; ++t) {
                int k = mirror ? (d.pos - t + 2 * s) % s : (d.pos + t) % s;
                label(faces_[d.face][k]);
            }
            for (int t = 0; t < s; ++t) {
                int k = mirror ? (d.pos - t - 1 + 2 * s) % s : (d.pos + t) % s;
                Dart o = opposite({d.face, k});
                if (!face_seen[o.face]) q.push_back(mirror ? o : next(o));
            }
        }
        return vlabel;
    };

    Dart ref{0, 0};
    std::string ref_code = encode(ref, false);
    auto ref_labels = relabel(ref, false);
    std::map<int, int> inv_ref;  // new label -> old vertex
    for (auto [v, l] : ref_labels) inv_ref[l] = v;

    std::vector<Automorphism> out;
    std::set<std::map<int, int>> seen;
    for (int fi = 0; fi < num_faces(); ++fi)
        for (int k = 0; k < face_size(fi); ++k)
            for (bool mirror : {false, true}) {
                if (encode({fi, k}, mirror) != ref_code) continue;
                auto lab = relabel({fi, k}, mirror);
                Automorphism a;
                a.orientation = mirror ? -1 : 1;
                // a maps ref-labelled vertex to this labelling's vertex carrying
                // the same label: a(v) = lab^{-1}(ref_labels(v)).
                std::map<int, int> inv_lab;
                for (auto [v, l] : lab) inv_lab[l] = v;
                for (auto [v, l] : ref_labels) a.vertex_map[v] = inv_lab[l];
                if (seen.insert(a.vertex_map).second) out.push_back(std::move(a));
                else {
                    // Same permutation can arise once orientation-preserving and
                    // once reversing only for degenerate complexes; keep first.
                }
            }
    return out;
}

void Decomposition::validate() const {
    std::map<std::pair<int, int>, int> covered;
    for (size_t pi = 0; pi < pairings.size(); ++pi) {
        const auto& p = pairings[pi];
        require(p.src_poly >= 0 && p.src_poly < static_cast<int>(polyhedra.size()) && p.dst_poly >= 0 &&
                    p.dst_poly < static_cast<int>(polyhedra.size()),
                "InconsistentPairing", "pairing references a missing polyhedron");
        const auto& SP = polyhedra[p.src_poly];
        const auto& DP = polyhedra[p.dst_poly];
        require(p.src_face >= 0 && p.src_face < SP.num_faces() && p.dst_face >= 0 && p.dst_face < DP.num_faces(),
                "InconsistentPairing", "pairing references a missing face");
        require(!(p.src_poly == p.dst_poly && p.src_face == p.dst_face), "InconsistentPairing",
                "a face may not be paired with itself");
        const auto& sf = SP.faces()[p.src_face];
        const auto& df = DP.faces()[p.dst_face];
        require(sf.size() == df.size() && p.corr.size() == sf.size(), "InconsistentPairing",
                "correspondence size mismatch");
        // corr must read dst's cycle with some rotation, reversed unless allowed.
        const int s = static_cast<int>(sf.size());
        bool found = false, found_forward = false;
        for (int rot = 0; rot < s && !found; ++rot) {
            bool rev = true, fwd = true;
            for (int k = 0; k < s; ++k) {
                if (p.corr[k] != df[(rot - k + 2 * s) % s]) rev = false;
                if (p.corr[k] != df[(rot + k) % s]) fwd = false;
            }
            if (rev) found = true;
            if (fwd) found_forward = true;
        }
        if (!found) {
            require(found_forward, "InconsistentPairing", "correspondence is not a cyclic bijection");
            require(allow_orientation_preserving, "InconsistentPairing",
                    "correspondence preserves cyclic orientation (gluings must reverse it)");
        }
        for (auto side : {std::make_pair(p.src_poly, p.src_face), std::make_pair(p.dst_poly, p.dst_face)}) {
            int n = ++covered[side];
            require(n <= 1, "InconsistentPairing", "face paired twice");
        }
    }
    for (int pi = 0; pi < static_cast<int>(polyhedra.size()); ++pi)
        for (int f = 0; f < polyhedra[pi].num_faces(); ++f)
            require(covered.count({pi, f}), "UnpairedFace",
                    "face " + std::to_string(f) + " of polyhedron " + std::to_string(pi) + " is unpaired");
    if (!colors.empty()) {
        require(colors.size() == polyhedra.size(), "BadInput", "color table shape mismatch");
        for (size_t i = 0; i < colors.size(); ++i)
            require(static_cast<int>(colors[i].size()) == polyhedra[i].num_faces(), "BadInput",
                    "color table shape mismatch");
    }
}

int Decomposition::total_edges() const {
    int t = 0;
    for (const auto& P : polyhedra) t += P.num_edges();
    return t;
}

std::pair<int, int> Decomposition::pairing_at(int poly, int face) const {
    for (size_t pi = 0; pi < pairings.size(); ++pi) {
        const auto& p = pairings[pi];
        if (p.src_poly == poly && p.src_face == face) return {static_cast<int>(pi), +1};
        if (p.dst_poly == poly && p.dst_face == face) return {static_cast<int>(pi), -1};
    }
    fail("UnpairedFace", "face not covered by any pairing");
}

int Decomposition::map_vertex(int poly, int face, int v) const {
    auto [pi, dir] = pairing_at(poly, face);
    const auto& p = pairings[pi];
    if (dir > 0) {
        const auto& sf = polyhedra[p.src_poly].faces()[p.src_face];
        for (size_t k = 0; k < sf.size(); ++k)
            if (sf[k] == v) return p.corr[k];
    } else {
        const auto& sf = polyhedra[p.src_poly].faces()[p.src_face];
        for (size_t k = 0; k < sf.size(); ++k)
            if (p.corr[k] == v) return sf[k];
    }
    fail("BadInput", "vertex not on the face");
}

std::pair<int, int> Decomposition::partner_face(int poly, int face) const {
    auto [pi, dir] = pairing_at(poly, face);
    const auto& p = pairings[pi];
    return dir > 0 ? std::make_pair(p.dst_poly, p.dst_face) : std::make_pair(p.src_poly, p.src_face);
}

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

QuotientComplex quotient_complex(const Decomposition& d) {
    d.validate();
    QuotientComplex qc;
    qc.source = &d;

    // Index cells.
    std::vector<std::pair<int, int>> verts;          // (poly, vertex)
    std::map<std::pair<int, int>, int> vidx;
    std::vector<std::pair<int, Edge>> edges;         // (poly, edge)
    std::map<std::pair<int, Edge>, int> eidx;
    for (int pi = 0; pi < static_cast<int>(d.polyhedra.size()); ++pi) {
        for (int v : d.polyhedra[pi].vertices()) {
            vidx[{pi, v}] = static_cast<int>(verts.size());
            verts.push_back({pi, v});
        }
        for (const auto& e : d.polyhedra[pi].edges()) {
            eidx[{pi, e}] = static_cast<int>(edges.size());
            edges.push_back({pi, e});
        }
    }

    UnionFind vu(static_cast<int>(verts.size()));
    UnionFind eu(static_cast<int>(edges.size()));
    for (const auto& p : d.pairings) {
        const auto& sf = d.polyhedra[p.src_poly].faces()[p.src_face];
        const int s = static_cast<int>(sf.size());
        for (int k = 0; k < s; ++k) {
            vu.unite(vidx.at({p.src_poly, sf[k]}), vidx.at({p.dst_poly, p.corr[k]}));
            Edge se = make_edge(sf[k], sf[(k + 1) % s]);
            Edge de = make_edge(p.corr[k], p.corr[(k + 1) % s]);
            eu.unite(eidx.at({p.src_poly, se}), eidx.at({p.dst_poly, de}));
        }
    }

    std::map<int, int> vroot2class;
    for (size_t i = 0; i < verts.size(); ++i) {
        int r = vu.find(static_cast<int>(i));
        auto it = vroot2class.find(r);
        int c;
        if (it == vroot2class.end()) {
            c = static_cast<int>(qc.vertex_classes.classes.size());
            vroot2class[r] = c;
            qc.vertex_classes.classes.emplace_back();
        } else {
            c = it->second;
        }
        qc.vertex_classes.classes[c].push_back(verts[i]);
        qc.vertex_classes.index[verts[i]] = c;
    }
    std::map<int, int> eroot2class;
    for (size_t i = 0; i < edges.size(); ++i) {
        int r = eu.find(static_cast<int>(i));
        auto it = eroot2class.find(r);
        int c;
        if (it == eroot2class.end()) {
            c = static_cast<int>(qc.edge_classes.size());
            eroot2class[r] = c;
            qc.edge_classes.emplace_back();
        } else {
            c = it->second;
        }
        qc.edge_classes[c].push_back(edges[i]);
        qc.edge_index[edges[i]] = c;
    }
    std::set<std::pair<int, int>> seen_faces;
    for (const auto& p : d.pairings) {
        qc.face_index[{p.src_poly, p.src_face}] = static_cast<int>(qc.face_classes.size());
        qc.face_index[{p.dst_poly, p.dst_face}] = static_cast<int>(qc.face_classes.size());
        qc.face_classes.push_back({std::make_pair(p.src_poly, p.src_face), std::make_pair(p.dst_poly, p.dst_face)});
    }
    return qc;
}

EdgeCycleVerdict edge_cycle_check(const QuotientComplex& qc) {
    EdgeCycleVerdict v;
    for (int c = 0; c < qc.num_edge_classes(); ++c) {
        if (qc.edge_class_size(c) != 4) {
            v.ok = false;
            v.witness_class = c;
            v.witness_size = qc.edge_class_size(c);
            return v;
        }
    }
    return v;
}

std::string decomposition_to_json(const Decomposition& d) {
    json j;
    j["polyhedra"] = json::array();
    for (const auto& P : d.polyhedra) j["polyhedra"].push_back({{"faces", P.faces()}});
    j["pairings"] = json::array();
    for (const auto& p : d.pairings)
        j["pairings"].push_back({{"src", {p.src_poly, p.src_face}}, {"dst", {p.dst_poly, p.dst_face}}, {"corr", p.corr}});
    if (d.allow_orientation_preserving) j["allow_orientation_preserving"] = true;
    if (!d.colors.empty()) j["colors"] = d.colors;
    return j.dump(1);
}

Decomposition decomposition_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail("BadInput", std::string("invalid JSON: ") + e.what());
    }
    Decomposition d;
    require(j.contains("polyhedra"), "BadInput", "missing 'polyhedra'");
    for (const auto& pj : j["polyhedra"])
        d.polyhedra.push_back(PolyhedronCombinatorics::build(pj.at("faces").get<std::vector<std::vector<int>>>()));
    for (const auto& pj : j.value("pairings", json::array())) {
        FacePairing p;
        p.src_poly = pj.at("src")[0];
        p.src_face = pj.at("src")[1];
        p.dst_poly = pj.at("dst")[0];
        p.dst_face = pj.at("dst")[1];
        p.corr = pj.at("corr").get<std::vector<int>>();
        d.pairings.push_back(std::move(p));
    }
    d.allow_orientation_preserving = j.value("allow_orientation_preserving", false);
    if (j.contains("colors")) d.colors = j["colors"].get<std::vector<std::vector<int>>>();
    return d;
}

} // namespace specialcheck::cellkit

#include "specialcheck/polyhedra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <future>
#include <mutex>
#include <set>
#include <thread>

namespace specialcheck::polyhedra {

using cellkit::Dart;
using cellkit::Edge;
using cellkit::make_edge;

namespace {

bool faces_adjacent(const PolyhedronCombinatorics& P, int f, int g, Edge* shared = nullptr) {
    for (const auto& e : P.edges()) {
        const auto& ds = P.edge_sides(e);
        if ((ds[0].face == f && ds[1].face == g) || (ds[0].face == g && ds[1].face == f)) {
            if (shared) *shared = e;
            return true;
        }
    }
    return false;
}

bool three_share_vertex(const PolyhedronCombinatorics& P, const std::vector<int>& faces) {
    std::map<int, int> count;
    for (int f : faces) {
        std::set<int> fv(P.faces()[f].begin(), P.faces()[f].end());
        for (int v : fv) count[v]++;
    }
    for (auto [v, c] : count)
        if (c >= 3) return true;
    return false;
}

std::vector<int> canonical_cycle(std::vector<int> c) {
    std::vector<int> best = c;
    const int s = static_cast<int>(c.size());
    for (int pass = 0; pass < 2; ++pass) {
        for (int r = 0; r < s; ++r) {
            std::rotate(c.begin(), c.begin() + 1, c.end());
            if (c < best) best = c;
        }
        std::reverse(c.begin(), c.end());
    }
    return best;
}

} // namespace

std::vector<PrismaticCircuit> prismatic_circuits(const PolyhedronCombinatorics& P, int k) {
    require(k == 3 || k == 4, "BadInput", "only prismatic 3- and 4-circuits are supported");
    std::vector<PrismaticCircuit> out;
    const int F = P.num_faces();
    std::set<std::vector<int>> seen;
    auto emit = [&](std::vector<int> cyc) {
        auto canon = canonical_cycle(cyc);
        if (!seen.insert(canon).second) return;
        PrismaticCircuit c;
        c.faces = canon;
        for (size_t i = 0; i < canon.size(); ++i) {
            Edge e;
            faces_adjacent(P, canon[i], canon[(i + 1) % canon.size()], &e);
            c.crossed_edges.push_back(e);
        }
        out.push_back(std::move(c));
    };
    if (k == 3) {
        for (int a = 0; a < F; ++a)
            for (int b = a + 1; b < F; ++b) {
                if (!faces_adjacent(P, a, b)) continue;
                for (int c = b + 1; c < F; ++c) {
                    if (!faces_adjacent(P, b, c) || !faces_adjacent(P, a, c)) continue;
                    if (three_share_vertex(P, {a, b, c})) continue;
                    emit({a, b, c});
                }
            }
    } else {
        for (int a = 0; a < F; ++a)
            for (int b = 0; b < F; ++b) {
                if (b == a || !faces_adjacent(P, a, b)) continue;
                for (int c = 0; c < F; ++c) {
                    if (c == a || c == b || !faces_adjacent(P, b, c)) continue;
                    for (int d = 0; d < F; ++d) {
                        if (d == a || d == b || d == c) continue;
                        if (!faces_adjacent(P, c, d) || !faces_adjacent(P, d, a)) continue;
                        if (three_share_vertex(P, {a, b, c, d})) continue;
                        emit({a, b, c, d});
                    }
                }
            }
    }
    return out;
}

AndreevVerdict andreev_validate(const PolyhedronCombinatorics& P) {
    AndreevVerdict v;
    // Polyhedron axiom: faces sharing an edge share no vertex beyond its endpoints.
    for (const auto& e : P.edges()) {
        const auto& ds = P.edge_sides(e);
        std::set<int> a(P.faces()[ds[0].face].begin(), P.faces()[ds[0].face].end());
        int common = 0;
        for (int w : P.faces()[ds[1].face]) common += a.count(w);
        if (common > 2) {
            v.witness = "faces of edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        "} share an extra vertex";
            return v;
        }
    }
    for (int vertex : P.vertices())
        if (P.valence(vertex) != 4) {
            v.witness = "vertex " + std::to_string(vertex) + " has valence " + std::to_string(P.valence(vertex));
            return v;
        }
    if (!prismatic_circuits(P, 3).empty()) {
        v.witness = "prismatic 3-circuit";
        return v;
    }
    if (!prismatic_circuits(P, 4).empty()) {
        v.witness = "prismatic 4-circuit";
        return v;
    }
    // If f0 and f2 each share an edge with f1, they may share vertices only on f1.
    const int F = P.num_faces();
    for (int f1 = 0; f1 < F; ++f1) {
        std::vector<int> nb;
        for (auto [a, b] : P.dual_edges()) {
            if (a == f1) nb.push_back(b);
            if (b == f1) nb.push_back(a);
        }
        std::set<int> f1v(P.faces()[f1].begin(), P.faces()[f1].end());
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                std::set<int> vi(P.faces()[nb[i]].begin(), P.faces()[nb[i]].end());
                for (int w : P.faces()[nb[j]])
                    if (vi.count(w) && !f1v.count(w)) {
                        v.witness = "faces " + std::to_string(nb[i]) + "," + std::to_string(nb[j]) +
                                    " flanking " + std::to_string(f1) + " share vertex " + std::to_string(w);
                        return v;
                    }
            }
    }
    // No essential tangency 3-circuit: three faces pairwise meeting at ideal
    // vertices (vertex contact without a shared edge) whose contacts do not
    // lie on a single face. For truncations of 3-valent polyhedra this is
    // exactly the absence of prismatic 3-circuits in the crushtacean.
    {
        std::map<std::pair<int, int>, int> tangent_at;
        for (int a = 0; a < F; ++a)
            for (int b = a + 1; b < F; ++b) {
                if (faces_adjacent(P, a, b)) continue;
                std::set<int> av(P.faces()[a].begin(), P.faces()[a].end());
                for (int w : P.faces()[b])
                    if (av.count(w)) tangent_at[{a, b}] = w;
            }
        for (const auto& [ab, vab] : tangent_at)
            for (int c = ab.second + 1; c < F; ++c) {
                auto itc1 = tangent_at.find({ab.first, c});
                auto itc2 = tangent_at.find({ab.second, c});
                if (itc1 == tangent_at.end() || itc2 == tangent_at.end()) continue;
                int x = vab, y = itc1->second, z = itc2->second;
                bool on_common_face = false;
                for (int f = 0; f < F; ++f) {
                    std::set<int> fv(P.faces()[f].begin(), P.faces()[f].end());
                    if (fv.count(x) && fv.count(y) && fv.count(z)) on_common_face = true;
                }
                if (!on_common_face) {
                    v.witness = "essential tangency 3-circuit on faces " + std::to_string(ab.first) + "," +
                                std::to_string(ab.second) + "," + std::to_string(c);
                    return v;
                }
            }
    }
    v.ok = true;
    return v;
}

bool is_crushtacean(const PolyhedronCombinatorics& P) {
    for (int v : P.vertices())
        if (P.valence(v) != 3) return false;
    return true;
}

std::pair<PolyhedronCombinatorics, PolyhedronCombinatorics> decompose_crushtacean(
    const PolyhedronCombinatorics& C, const PrismaticCircuit& circuit) {
    require(is_crushtacean(C), "BadInput", "not a 3-valent sphere polyhedron");
    require(circuit.faces.size() == 3, "NotPrismatic", "need a prismatic 3-circuit");
    // Revalidate against C.
    bool valid = false;
    for (const auto& c : prismatic_circuits(C, 3))
        if (c.faces == canonical_cycle(circuit.faces)) valid = true;
    require(valid, "NotPrismatic", "not a prismatic 3-circuit of this polyhedron");

    std::vector<Edge> cut;
    for (size_t i = 0; i < 3; ++i) {
        Edge e;
        faces_adjacent(C, circuit.faces[i], circuit.faces[(i + 1) % 3], &e);
        cut.push_back(e);
    }
    // Sides: components of the vertex graph without the cut edges.
    std::map<int, int> side;
    for (int v : C.vertices()) side[v] = -1;
    int comp = 0;
    for (int seed : C.vertices()) {
        if (side[seed] != -1) continue;
        require(comp < 2, "NotPrismatic", "cut does not separate into two sides");
        side[seed] = comp;
        std::deque<int> q{seed};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const auto& e : C.edges()) {
                if (std::find(cut.begin(), cut.end(), e) != cut.end()) continue;
                int y = -1;
                if (e.first == x) y = e.second;
                if (e.second == x) y = e.first;
                if (y >= 0 && side[y] == -1) {
                    side[y] = comp;
                    q.push_back(y);
                }
            }
        }
        ++comp;
    }
    require(comp == 2, "NotPrismatic", "cut does not separate into two sides");

    int w = *std::max_element(C.vertices().begin(), C.vertices().end()) + 1;
    auto build_side = [&](int s) {
        std::vector<std::vector<int>> faces;
        std::set<int> circuit_faces(circuit.faces.begin(), circuit.faces.end());
        for (int f = 0; f < C.num_faces(); ++f) {
            const auto& cyc = C.faces()[f];
            if (!circuit_faces.count(f)) {
                if (side.at(cyc[0]) == s) faces.push_back(cyc);
                continue;
            }
            // Keep the contiguous arc on side s and close with w.
            const int n = static_cast<int>(cyc.size());
            int start = -1;
            for (int i = 0; i < n; ++i)
                if (side.at(cyc[i]) == s && side.at(cyc[(i + n - 1) % n]) != s) start = i;
            require(start >= 0, "NotPrismatic", "circuit face has no arc on one side");
            std::vector<int> nf;
            for (int i = start; side.at(cyc[i % n]) == s; ++i) nf.push_back(cyc[i % n]);
            nf.push_back(w);
            faces.push_back(nf);
        }
        return PolyhedronCombinatorics::build(faces);
    };
    auto C0 = build_side(0);
    auto C1 = build_side(1);
    require(C0.num_vertices() + C1.num_vertices() == C.num_vertices() + 2, "NotPrismatic",
            "vertex identity v+2 = v0+v1 violated");
    return {C0, C1};
}

FullDecomposition full_decomposition(const PolyhedronCombinatorics& C, bool exhaustive) {
    FullDecomposition out;
    std::function<void(const PolyhedronCombinatorics&, std::vector<PolyhedronCombinatorics>&)> rec =
        [&](const PolyhedronCombinatorics& P, std::vector<PolyhedronCombinatorics>& sink) {
            auto circuits = prismatic_circuits(P, 3);
            if (circuits.empty()) {
                sink.push_back(P);
                return;
            }
            std::sort(circuits.begin(), circuits.end(),
                      [](const PrismaticCircuit& a, const PrismaticCircuit& b) { return a.faces < b.faces; });
            auto [a, b] = decompose_crushtacean(P, circuits.front());
            rec(a, sink);
            rec(b, sink);
        };
    rec(C, out.pieces);
    for (const auto& p : out.pieces) out.piece_codes.push_back(p.canonical_code());
    std::sort(out.piece_codes.begin(), out.piece_codes.end());

    if (exhaustive) {
        std::set<std::vector<std::string>> results;
        std::function<void(const std::vector<PolyhedronCombinatorics>&)> explore =
            [&](const std::vector<PolyhedronCombinatorics>& state) {
                int split_at = -1;
                std::vector<PrismaticCircuit> circuits;
                for (size_t i = 0; i < state.size(); ++i) {
                    circuits = prismatic_circuits(state[i], 3);
                    if (!circuits.empty()) {
                        split_at = static_cast<int>(i);
                        break;
                    }
                }
                if (split_at < 0) {
                    std::vector<std::string> codes;
                    for (const auto& p : state) codes.push_back(p.canonical_code());
                    std::sort(codes.begin(), codes.end());
                    results.insert(codes);
                    return;
                }
                for (const auto& c : circuits) {
                    auto next = state;
                    auto [a, b] = decompose_crushtacean(state[split_at], c);
                    next[split_at] = a;
                    next.push_back(b);
                    explore(next);
                }
            };
        explore({C});
        out.order_independent = (results.size() == 1 && *results.begin() == out.piece_codes);
    }
    return out;
}

PolyhedronCombinatorics lobell(int n) {
    require(n >= 3, "BadN", "Loebell polyhedra need n >= 3");
    auto a = [&](int i) { return (i % n + n) % n; };
    auto c = [&](int i) { return n + (i % n + n) % n; };
    auto m = [&](int i) { return 2 * n + (i % (2 * n) + 2 * n) % (2 * n); };
    std::vector<std::vector<int>> faces;
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(a(i));
    for (int i = 0; i < n; ++i) bottom.push_back(c(i));
    faces.push_back(top);
    faces.push_back(bottom);
    for (int i = 0; i < n; ++i)
        faces.push_back({a(i), a(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)});
    for (int i = 0; i < n; ++i)
        faces.push_back({c(i), c(i + 1), m(2 * i + 3), m(2 * i + 2), m(2 * i + 1)});
    return PolyhedronCombinatorics::build(faces);
}

int dual_distance(const PolyhedronCombinatorics& P, int f, int g) {
    std::vector<int> dist(P.num_faces(), -1);
    dist[f] = 0;
    std::deque<int> q{f};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (auto [u, v] : P.dual_edges()) {
            int y = (u == x) ? v : (v == x) ? u : -1;
            if (y >= 0 && dist[y] == -1) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    return dist[g];
}

int AutomorphismGroup::orientation_preserving() const {
    int n = 0;
    for (const auto& a : elements) n += (a.orientation > 0);
    return n;
}

bool AutomorphismGroup::has_edge_involution(cellkit::Edge e, int orientation) const {
    for (const auto& a : elements) {
        if (a.orientation != orientation) continue;
        if (a.vertex_map.at(e.first) != e.second || a.vertex_map.at(e.second) != e.first) continue;
        bool involution = true;
        for (auto [u, v] : a.vertex_map)
            if (a.vertex_map.at(v) != u) involution = false;
        if (involution) return true;
    }
    return false;
}

AutomorphismGroup automorphism_group(const PolyhedronCombinatorics& P) {
    AutomorphismGroup g;
    g.elements = P.automorphisms();
    return g;
}

bool is_regular(const PolyhedronCombinatorics& P) {
    // Flag count 4E equals the automorphism order exactly for the fully
    // flag-transitive polyhedra.
    return automorphism_group(P).order() == 4 * P.num_edges();
}

Truncation truncate(const PolyhedronCombinatorics& C) {
    Truncation out;
    std::map<Edge, int> edge_id;
    for (int i = 0; i < C.num_edges(); ++i) edge_id[C.edges()[i]] = i;
    std::vector<std::vector<int>> faces;
    std::vector<int> colors;
    for (int f = 0; f < C.num_faces(); ++f) {
        const auto& cyc = C.faces()[f];
        std::vector<int> nf;
        for (size_t k = 0; k < cyc.size(); ++k)
            nf.push_back(edge_id.at(make_edge(cyc[k], cyc[(k + 1) % cyc.size()])));
        out.white_source[static_cast<int>(faces.size())] = f;
        faces.push_back(nf);
        colors.push_back(0);
    }
    for (int v : C.vertices()) {
        auto star = C.vertex_star(v);
        std::vector<int> nf;
        for (const auto& corner : star) {
            // Corner (f,k) at v: the edge from v along the face.
            Edge e = C.slot_edge(corner.face, corner.pos);
            nf.push_back(edge_id.at(e));
        }
        std::reverse(nf.begin(), nf.end());
        out.black_source[static_cast<int>(faces.size())] = v;
        faces.push_back(nf);
        colors.push_back(1);
    }
    out.P = PolyhedronCombinatorics::build(faces);
    out.face_color = colors;
    return out;
}

namespace {

// Vertex split of a triangulation at v with cut corners i < j of its rotation.
std::optional<PolyhedronCombinatorics> vertex_split(const PolyhedronCombinatorics& T, int v, int i, int j) {
    auto star = T.vertex_star(v);  // corners (f, k) with faces[f][k] == v
    const int d = static_cast<int>(star.size());
    // Neighbor u_t and face F_t at corner t: the triangle (v, u_t, u_{t+1}).
    std::vector<int> nb(d), face_at(d);
    for (int t = 0; t < d; ++t) {
        face_at[t] = star[t].face;
        nb[t] = T.face_vertex(star[t].face, star[t].pos + 1);
    }
    int w = *std::max_element(T.vertices().begin(), T.vertices().end()) + 1;
    std::set<int> keep_v;  // faces keeping v (arc i..j-1)
    for (int t = i; t != j; t = (t + 1) % d) keep_v.insert(face_at[t]);
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < T.num_faces(); ++f) {
        auto cyc = T.faces()[f];
        bool has_v = std::find(cyc.begin(), cyc.end(), v) != cyc.end();
        if (has_v && !keep_v.count(f))
            for (auto& x : cyc)
                if (x == v) x = w;
        faces.push_back(cyc);
    }
    faces.push_back({v, w, nb[i]});
    faces.push_back({w, v, nb[j]});
    try {
        return PolyhedronCombinatorics::build(faces);
    } catch (const Error&) {
        return std::nullopt;
    }
}

template <typename Item, typename Expand>
std::vector<Item> parallel_expand(const std::vector<Item>& level, Expand&& expand, int jobs) {
    std::vector<Item> out;
    std::set<std::string> seen;
    std::mutex mu;
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            auto results = expand(level[i]);
            std::lock_guard<std::mutex> lock(mu);
            for (auto& [code, item] : results)
                if (seen.insert(code).second) out.push_back(item);
        }
    };
    if (jobs <= 1 || level.size() < 2) {
        work(0, level.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (level.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t b = t * chunk, e = std::min(level.size(), (t + 1) * chunk);
            if (b < e) threads.emplace_back(work, b, e);
        }
        for (auto& th : threads) th.join();
    }
    return out;
}

} // namespace

std::vector<PolyhedronCombinatorics> enumerate_triangulations(int vmax, int jobs) {
    std::vector<PolyhedronCombinatorics> all;
    std::vector<PolyhedronCombinatorics> level{
        PolyhedronCombinatorics::build({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}})};
    if (vmax < 4) return {};
    all.insert(all.end(), level.begin(), level.end());
    for (int n = 5; n <= vmax; ++n) {
        auto expand = [&](const PolyhedronCombinatorics& T) {
            std::vector<std::pair<std::string, PolyhedronCombinatorics>> results;
            for (int v : T.vertices()) {
                int d = T.valence(v);
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j) {
                        auto split = vertex_split(T, v, i, j);
                        if (!split) continue;
                        results.push_back({split->canonical_code(), *split});
                    }
            }
            return results;
        };
        level = parallel_expand(level, expand, jobs);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

namespace {

PolyhedronCombinatorics dual_of(const PolyhedronCombinatorics& T) {
    std::vector<std::vector<int>> faces;
    for (int v : T.vertices()) {
        auto star = T.vertex_star(v);
        std::vector<int> cyc;
        for (const auto& corner : star) cyc.push_back(corner.face);
        faces.push_back(cyc);
    }
    return PolyhedronCombinatorics::build(faces);
}

bool three_connected(const PolyhedronCombinatorics& G) {
    const auto& vs = G.vertices();
    if (vs.size() < 4) return false;
    auto connected_without = [&](int x, int y) {
        std::set<int> skip{x, y};
        int seed = -1;
        for (int v : vs)
            if (!skip.count(v)) {
                seed = v;
                break;
            }
        std::set<int> seen{seed};
        std::deque<int> q{seed};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (const auto& e : G.edges()) {
                int b = (e.first == a) ? e.second : (e.second == a) ? e.first : -1;
                if (b < 0 || skip.count(b) || seen.count(b)) continue;
                seen.insert(b);
                q.push_back(b);
            }
        }
        return seen.size() == vs.size() - 2;
    };
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!connected_without(vs[i], vs[j])) return false;
    return true;
}

std::optional<PolyhedronCombinatorics> delete_edge(const PolyhedronCombinatorics& G, Edge e) {
    if (G.valence(e.first) <= 3 || G.valence(e.second) <= 3) return std::nullopt;
    const auto& sides = G.edge_sides(e);
    int f = sides[0].face, g = sides[1].face;
    if (f == g) return std::nullopt;
    // Merge: walk f from the head of its e-dart all the way to its tail, then
    // g likewise.
    auto walk = [&](int face, Dart dart) {
        std::vector<int> seq;
        const int s = G.face_size(face);
        for (int t = 1; t < s; ++t) seq.push_back(G.face_vertex(face, dart.pos + t));
        return seq;
    };
    std::vector<int> merged = walk(f, sides[0]);
    auto rest = walk(g, sides[1]);
    merged.insert(merged.end(), rest.begin(), rest.end());
    std::set<int> distinct(merged.begin(), merged.end());
    if (distinct.size() != merged.size()) return std::nullopt;
    std::vector<std::vector<int>> faces;
    for (int t = 0; t < G.num_faces(); ++t) {
        if (t == f || t == g) continue;
        faces.push_back(G.faces()[t]);
    }
    faces.push_back(merged);
    try {
        auto out = PolyhedronCombinatorics::build(faces);
        if (!three_connected(out)) return std::nullopt;
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::vector<PolyhedronCombinatorics> enumerate_polyhedral_maps(int emax, int jobs) {
    // Seeds: triangulations with up to 2*emax/3 vertices (3-connected graphs
    // on n vertices have at least ceil(3n/2) edges).
    int nmax = (2 * emax) / 3;
    auto tris = enumerate_triangulations(nmax, jobs);
    std::vector<PolyhedronCombinatorics> out;
    std::set<std::string> seen;
    std::deque<PolyhedronCombinatorics> frontier;
    for (auto& T : tris) {
        if (seen.insert(T.canonical_code()).second) {
            frontier.push_back(T);
            if (T.num_edges() <= emax) out.push_back(T);
        }
    }
    while (!frontier.empty()) {
        auto G = frontier.front();
        frontier.pop_front();
        if (G.num_edges() <= 6) continue;
        for (const auto& e : G.edges()) {
            auto del = delete_edge(G, e);
            if (!del) continue;
            if (!seen.insert(del->canonical_code()).second) continue;
            if (del->num_edges() <= emax) out.push_back(*del);
            frontier.push_back(*del);
        }
    }
    return out;
}

PolyhedronCombinatorics medial(const PolyhedronCombinatorics& G) {
    std::map<Edge, int> edge_id;
    for (int i = 0; i < G.num_edges(); ++i) edge_id[G.edges()[i]] = i;
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < G.num_faces(); ++f) {
        const auto& cyc = G.faces()[f];
        std::vector<int> nf;
        for (size_t k = 0; k < cyc.size(); ++k)
            nf.push_back(edge_id.at(make_edge(cyc[k], cyc[(k + 1) % cyc.size()])));
        faces.push_back(nf);
    }
    for (int v : G.vertices()) {
        auto star = G.vertex_star(v);
        std::vector<int> nf;
        for (const auto& corner : star) nf.push_back(edge_id.at(G.slot_edge(corner.face, corner.pos)));
        std::reverse(nf.begin(), nf.end());
        faces.push_back(nf);
    }
    return PolyhedronCombinatorics::build(faces);
}

CatalogEntry make_catalog_entry(const PolyhedronCombinatorics& P) {
    CatalogEntry e;
    e.code = P.canonical_code();
    e.vertices = P.num_vertices();
    e.edges = P.num_edges();
    for (const auto& f : P.faces()) e.face_vector[static_cast<int>(f.size())]++;
    e.aut_order = automorphism_group(P).order();
    e.P = P;
    return e;
}

std::vector<CatalogEntry> enumerate_crushtaceans(int vmax, bool indecomposable_only, int jobs) {
    require(vmax <= 14, "BadInput", "crushtacean enumeration is desk-scale (vmax <= 14)");
    int tri_vmax = vmax / 2 + 2;
    auto tris = enumerate_triangulations(tri_vmax, jobs);
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    for (const auto& T : tris) {
        auto C = dual_of(T);
        if (C.num_vertices() > vmax) continue;
        if (indecomposable_only && !prismatic_circuits(C, 3).empty()) continue;
        if (!seen.insert(C.canonical_code()).second) continue;
        out.push_back(make_catalog_entry(C));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tie(a.vertices, a.code) < std::tie(b.vertices, b.code);
    });
    return out;
}

std::vector<CatalogEntry> enumerate_rightangled(int vmax, int jobs) {
    require(vmax <= 16, "BadInput", "right-angled enumeration is desk-scale (vmax <= 16)");
    auto maps = enumerate_polyhedral_maps(vmax, jobs);
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    for (const auto& G : maps) {
        if (G.num_edges() > vmax) continue;
        auto M = medial(G);
        if (!seen.insert(M.canonical_code()).second) continue;
        if (!andreev_validate(M).ok) continue;
        out.push_back(make_catalog_entry(M));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tie(a.vertices, a.code) < std::tie(b.vertices, b.code);
    });
    return out;
}

} // namespace specialcheck::polyhedra

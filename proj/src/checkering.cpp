#include "specialcheck/checkering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace specialcheck::checkering {

std::vector<Checkering> polyhedron_checkerings(const PolyhedronCombinatorics& P) {
    const int F = P.num_faces();
    std::vector<int> color(F, -1);
    color[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (auto [a, b] : P.dual_edges()) {
            if (a != f && b != f) continue;
            int g = (a == f) ? b : a;
            if (color[g] == -1) {
                color[g] = 1 - color[f];
                q.push_back(g);
            } else if (color[g] == color[f]) {
                return {};
            }
        }
    }
    Checkering c0 = color, c1 = color;
    for (auto& c : c1) c = 1 - c;
    return {c0, c1};
}

namespace {

// Per-polyhedron checkering states: base coloring (lexicographically first)
// or its complement. Returns the base colorings, or nullopt.
std::optional<std::vector<Checkering>> base_colorings(const Decomposition& d) {
    std::vector<Checkering> base;
    for (const auto& P : d.polyhedra) {
        auto cs = polyhedron_checkerings(P);
        if (cs.empty()) return std::nullopt;
        base.push_back(std::min(cs[0], cs[1]));
    }
    return base;
}

} // namespace

std::optional<std::vector<Checkering>> decomposition_checkering(const Decomposition& d) {
    d.validate();
    auto base = base_colorings(d);
    if (!base) return std::nullopt;
    const int n = static_cast<int>(d.polyhedra.size());
    // state[p] in {0,1}: base coloring or complement.
    std::vector<int> state(n, -1);
    for (int seed = 0; seed < n; ++seed) {
        if (state[seed] != -1) continue;
        state[seed] = 0;
        std::deque<int> q{seed};
        while (!q.empty()) {
            int p = q.front();
            q.pop_front();
            for (const auto& pr : d.pairings) {
                int a = pr.src_poly, b = pr.dst_poly;
                if (a != p && b != p) continue;
                // Preservation: color of src face == color of dst face.
                int cs = (*base)[pr.src_poly][pr.src_face];
                int cd = (*base)[pr.dst_poly][pr.dst_face];
                // state[src] ^ cs == state[dst] ^ cd  =>  state[dst] = state[src] ^ cs ^ cd.
                int from = (a == p) ? a : b;
                int to = (a == p) ? b : a;
                int needed = state[from] ^ cs ^ cd;
                if (state[to] == -1) {
                    state[to] = needed;
                    q.push_back(to);
                } else if (state[to] != needed) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Checkering> out;
    for (int p = 0; p < n; ++p) {
        Checkering c = (*base)[p];
        if (state[p] == 1)
            for (auto& v : c) v = 1 - v;
        out.push_back(std::move(c));
    }
    return out;
}

int checkering_constraint_components(const Decomposition& d) {
    const int n = static_cast<int>(d.polyhedra.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& pr : d.pairings) parent[find(pr.src_poly)] = find(pr.dst_poly);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

Decomposition checkered_double_cover(const Decomposition& d) {
    d.validate();
    auto base = base_colorings(d);
    require(base.has_value(), "NoCheckering", "some polyhedron has a non-bipartite dual graph");
    Decomposition cover;
    cover.allow_orientation_preserving = d.allow_orientation_preserving;
    const int n = static_cast<int>(d.polyhedra.size());
    for (int i = 0; i < n; ++i) {
        cover.polyhedra.push_back(d.polyhedra[i]);  // copy 0: base coloring
        cover.polyhedra.push_back(d.polyhedra[i]);  // copy 1: complement
    }
    cover.colors.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        cover.colors[2 * i] = (*base)[i];
        Checkering inv = (*base)[i];
        for (auto& v : inv) v = 1 - v;
        cover.colors[2 * i + 1] = inv;
    }
    for (const auto& pr : d.pairings) {
        int cs = (*base)[pr.src_poly][pr.src_face];
        int cd = (*base)[pr.dst_poly][pr.dst_face];
        for (int j = 0; j < 2; ++j) {
            // Copy j of the source pairs with the copy carrying equal color.
            int jp = (cs == cd) ? j : 1 - j;
            cellkit::FacePairing lifted = pr;
            lifted.src_poly = 2 * pr.src_poly + j;
            lifted.dst_poly = 2 * pr.dst_poly + jp;
            cover.pairings.push_back(lifted);
        }
    }
    return cover;
}

bool decomposition_connected(const Decomposition& d) {
    const int n = static_cast<int>(d.polyhedra.size());
    if (n == 0) return true;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& pr : d.pairings) parent[find(pr.src_poly)] = find(pr.dst_poly);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

namespace {

// Does the boundary correspondence extend to an orientation-reversing
// isomorphism src -> dst? Flag propagation from the seed dart.
bool extends_reversing(const PolyhedronCombinatorics& S, int sf, const PolyhedronCombinatorics& D, int df,
                       const std::vector<int>& corr) {
    using cellkit::Dart;
    const auto& scyc = S.faces()[sf];
    const auto& dcyc = D.faces()[df];
    const int m = static_cast<int>(scyc.size());
    // Image of dart (sf, 0): the dart of df with tail corr[1], head corr[0].
    int seed_img = -1;
    for (int t = 0; t < static_cast<int>(dcyc.size()); ++t)
        if (dcyc[t] == corr[1] && dcyc[(t + 1) % dcyc.size()] == corr[0]) seed_img = t;
    if (seed_img < 0) return false;
    (void)m;

    std::map<Dart, Dart> img;
    std::deque<Dart> q;
    img[{sf, 0}] = {df, seed_img};
    q.push_back({sf, 0});
    while (!q.empty()) {
        Dart x = q.front();
        q.pop_front();
        Dart y = img.at(x);
        // Orientation-reversing: next goes to prev; opposite to opposite.
        std::pair<Dart, Dart> moves[2] = {{S.next(x), D.prev(y)}, {S.opposite(x), D.opposite(y)}};
        for (auto& [nx, ny] : moves) {
            auto it = img.find(nx);
            if (it == img.end()) {
                img[nx] = ny;
                q.push_back(nx);
            } else if (!(it->second == ny)) {
                return false;
            }
        }
    }
    // Vertex map: tail of x maps to head of img(x); must be well-defined and injective.
    std::map<int, int> vmap;
    std::map<int, int> seen_target;
    for (auto& [x, y] : img) {
        int u = S.faces()[x.face][x.pos];
        int v = D.faces()[y.face][(y.pos + 1) % D.faces()[y.face].size()];
        auto it = vmap.find(u);
        if (it != vmap.end() && it->second != v) return false;
        vmap[u] = v;
    }
    for (auto& [u, v] : vmap) {
        auto it = seen_target.find(v);
        if (it != seen_target.end()) return false;
        seen_target[v] = u;
    }
    return vmap.size() == static_cast<size_t>(S.num_vertices()) &&
           seen_target.size() == static_cast<size_t>(D.num_vertices());
}

} // namespace

MirrorTable identity_mirrors(const PolyhedronCombinatorics& P) {
    MirrorTable table;
    for (int f = 0; f < P.num_faces(); ++f) {
        std::map<int, int> id;
        for (int v : P.vertices()) id[v] = v;
        table[f] = id;
    }
    return table;
}

namespace {

// A mirror entry maps P onto its reflected copy, which carries the same
// unoriented face structure; valid entries are exactly the unoriented
// automorphisms (face cycles map to face cycles up to rotation or reversal).
// The identity is the canonical one.
bool is_unoriented_automorphism(const PolyhedronCombinatorics& P, const std::map<int, int>& perm) {
    auto canon = [](std::vector<int> c) {
        auto best = c;
        const int s = static_cast<int>(c.size());
        for (int pass = 0; pass < 2; ++pass) {
            for (int r = 0; r < s; ++r) {
                std::rotate(c.begin(), c.begin() + 1, c.end());
                if (c < best) best = c;
            }
            std::reverse(c.begin(), c.end());
        }
        return best;
    };
    std::set<std::vector<int>> canon_faces;
    for (const auto& f : P.faces()) canon_faces.insert(canon(f));
    for (const auto& f : P.faces()) {
        std::vector<int> img;
        for (int v : f) {
            auto it = perm.find(v);
            if (it == perm.end()) return false;
            img.push_back(it->second);
        }
        if (!canon_faces.count(canon(img))) return false;
    }
    return true;
}

} // namespace

bool reflection_pairing_check(const Decomposition& d, const PolyhedronCombinatorics& reference,
                              const MirrorTable& mirrors) {
    d.validate();
    // Every polyhedron must carry the reference combinatorics.
    for (const auto& P : d.polyhedra)
        require(P.canonical_code() == reference.canonical_code(), "BadInput",
                "polyhedra are not copies of the reference");
    // Validate the mirror table: each entry is an involutive anti-automorphism
    // fixing its face pointwise.
    for (int f = 0; f < reference.num_faces(); ++f) {
        auto it = mirrors.find(f);
        require(it != mirrors.end(), "MissingMirror", "no mirror supplied for face " + std::to_string(f));
        const auto& perm = it->second;
        require(is_unoriented_automorphism(reference, perm), "MissingMirror",
                "supplied mirror is not an unoriented automorphism");
        for (int v : reference.faces()[f])
            require(perm.at(v) == v, "MissingMirror", "mirror does not fix its face pointwise");
        for (auto [u, v] : perm) require(perm.at(v) == u, "MissingMirror", "mirror is not an involution");
    }
    for (const auto& pr : d.pairings) {
        if (!extends_reversing(d.polyhedra[pr.src_poly], pr.src_face, d.polyhedra[pr.dst_poly], pr.dst_face,
                               pr.corr))
            return false;
    }
    return true;
}

} // namespace specialcheck::checkering

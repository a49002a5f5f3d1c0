#include "specialcheck/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace specialcheck::lorentz {

namespace {

// Sign of det of four homogeneous points as columns; since all fourth
// coordinates are positive this equals the affine orientation in the Klein model.
int orient(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
    Mat4 m;
    for (int i = 0; i < 4; ++i) {
        m.m[i][0] = a[i];
        m.m[i][1] = b[i];
        m.m[i][2] = c[i];
        m.m[i][3] = d[i];
    }
    return m.det().sign();
}

bool collinear(const Vec4& a, const Vec4& b, const Vec4& c) {
    // Projective points collinear iff the 4x3 matrix has rank <= 2:
    // all 3x3 minors vanish.
    for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> rows{};
        int t = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) rows[t++] = i;
        QuadExt det = a[rows[0]] * (b[rows[1]] * c[rows[2]] - b[rows[2]] * c[rows[1]]) -
                      b[rows[0]] * (a[rows[1]] * c[rows[2]] - a[rows[2]] * c[rows[1]]) +
                      c[rows[0]] * (a[rows[1]] * b[rows[2]] - a[rows[2]] * b[rows[1]]);
        if (!det.is_zero()) return false;
    }
    return true;
}

} // namespace

bool KleinHull::has_edge(int i, int j) const {
    auto p = std::minmax(i, j);
    return std::find(edges.begin(), edges.end(), std::make_pair(p.first, p.second)) != edges.end();
}

std::vector<int> KleinHull::faces_at(int v) const {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (std::find(faces[f].begin(), faces[f].end(), v) != faces[f].end()) out.push_back(static_cast<int>(f));
    return out;
}

KleinHull klein_hull(const std::vector<Vec4>& pts) {
    const int n = static_cast<int>(pts.size());
    require(n >= 4, "Degenerate", "need at least 4 points");
    for (const auto& p : pts) require(p[3].sign() > 0, "BadInput", "points must have positive last coordinate");

    // Distinct projective points required: equal rays would not be vertices.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool proportional = (pts[i] * pts[j][3] == pts[j] * pts[i][3]);
            require(!proportional, "BadInput", "duplicate projective point");
        }

    // Interior reference point: the (homogeneous) sum of all inputs.
    Vec4 centroid = pts[0];
    for (int i = 1; i < n; ++i) centroid = centroid + pts[i];

    // Full-dimensionality check.
    bool full = false;
    for (int i = 1; i < n && !full; ++i)
        for (int j = i + 1; j < n && !full; ++j)
            for (int k = j + 1; k < n && !full; ++k)
                if (orient(pts[0], pts[i], pts[j], pts[k]) != 0) full = true;
    require(full, "Degenerate", "coplanar point set");

    // A supporting plane through each affinely independent triple with all
    // points on one closed side is a facet plane; collect on-sets.
    std::set<std::vector<int>> face_sets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (collinear(pts[i], pts[j], pts[k])) continue;
                int pos = 0, neg = 0;
                std::vector<int> on;
                for (int t = 0; t < n; ++t) {
                    int s = orient(pts[i], pts[j], pts[k], pts[t]);
                    if (s > 0) ++pos;
                    else if (s < 0) ++neg;
                    else on.push_back(t);
                }
                if (pos && neg) continue;
                std::sort(on.begin(), on.end());
                face_sets.insert(on);
            }

    KleinHull hull;
    std::set<std::pair<int, int>> edge_set;
    std::set<int> vert_set;

    // Polygon edges inside a facet: (u,v) is a polygon edge iff all other
    // facet points sit on one strict side of plane(u, v, centroid).
    for (const auto& fs : face_sets) {
        std::map<int, std::vector<int>> adj;
        const int fsz = static_cast<int>(fs.size());
        for (int a = 0; a < fsz; ++a)
            for (int b = a + 1; b < fsz; ++b) {
                int u = fs[a], v = fs[b];
                int pos = 0, neg = 0;
                bool edge_ok = true;
                for (int w : fs) {
                    if (w == u || w == v) continue;
                    int s = orient(pts[u], pts[v], centroid, pts[w]);
                    if (s > 0) ++pos;
                    else if (s < 0) ++neg;
                    else edge_ok = false;  // collinear with the edge: u..w..v
                    if ((pos && neg) || !edge_ok) break;
                }
                if (edge_ok && !(pos && neg)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
            }
        // Walk the convex polygon cycle.
        std::vector<int> cycle;
        int start = fs[0];
        require(adj[start].size() == 2, "Degenerate", "facet polygon walk failed");
        int prev = -1, cur = start;
        do {
            cycle.push_back(cur);
            auto& nb = adj[cur];
            require(nb.size() == 2, "Degenerate", "facet polygon walk failed");
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        } while (cur != start && cycle.size() <= fs.size());
        require(cycle.size() == fs.size(), "Degenerate", "facet has interior points");
        // Outward orientation: centroid on the negative side.
        if (orient(pts[cycle[0]], pts[cycle[1]], pts[cycle[2]], centroid) > 0)
            std::reverse(cycle.begin(), cycle.end());
        // Canonical rotation for determinism.
        auto mn = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), mn, cycle.end());
        hull.faces.push_back(cycle);
        for (size_t t = 0; t < cycle.size(); ++t) {
            int u = cycle[t], v = cycle[(t + 1) % cycle.size()];
            edge_set.insert(std::minmax(u, v));
            vert_set.insert(u);
        }
    }
    std::sort(hull.faces.begin(), hull.faces.end());
    hull.edges.assign(edge_set.begin(), edge_set.end());
    hull.hull_vertices.assign(vert_set.begin(), vert_set.end());
    require(static_cast<int>(hull.hull_vertices.size()) == n, "InteriorPoint",
            "an input point is not a vertex of the hull");
    return hull;
}

std::optional<CoplanarNormal> coplanar_normal(const std::vector<Vec4>& vectors) {
    require(vectors.size() >= 4, "BadInput", "need at least 4 vectors");
    std::vector<std::vector<QuadExt>> a;
    std::vector<QuadExt> b;
    for (const auto& v : vectors) {
        a.push_back({v[0], v[1], v[2], v[3]});
        b.push_back(QuadExt(1));
    }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    CoplanarNormal out;
    if (sol->unique) {
        out.n = Vec4(sol->x[0], sol->x[1], sol->x[2], sol->x[3]);
        return out;
    }
    // Underdetermined: minimal-norm solution n = Bᵀ(BBᵀ)⁻¹1 over an
    // independent row subset B.
    out.degenerate_span = true;
    std::vector<Vec4> basis;
    for (const auto& v : vectors) {
        std::vector<std::vector<QuadExt>> trial;
        for (const auto& u : basis) trial.push_back({u[0], u[1], u[2], u[3]});
        trial.push_back({v[0], v[1], v[2], v[3]});
        // Independence check: rank of trial == size.
        std::vector<QuadExt> zero(trial.size(), QuadExt(0));
        auto chk = solve_linear(trial, zero);
        if (chk && chk->rank == static_cast<int>(trial.size())) basis.push_back(v);
    }
    const size_t k = basis.size();
    std::vector<std::vector<QuadExt>> gram(k, std::vector<QuadExt>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    auto y = solve_linear(gram, std::vector<QuadExt>(k, QuadExt(1)));
    require(y && y->unique, "Degenerate", "Gram system unsolvable");
    Vec4 nvec(QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(0));
    for (size_t i = 0; i < k; ++i) nvec = nvec + basis[i] * y->x[i];
    out.n = nvec;
    return out;
}

QuadExt tilt_excess(const Vec4& n, const Vec4& w) { return dot(n, w) - QuadExt(1); }

} // namespace specialcheck::lorentz

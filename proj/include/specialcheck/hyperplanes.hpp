#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specialcheck/squares.hpp"

namespace specialcheck::hyperplanes {

using squares::SquareComplex;

/// A midline of a square: axis 0 crosses sides 0 and 2, axis 1 crosses
/// sides 1 and 3. Its dual edges are the two crossed sides' edge cells.
struct Midline {
    int square = -1;
    int axis = 0;
    int crossed_side(int k) const { return axis + 2 * k; }   // k in {0,1}
    int parallel_side(int k) const { return (axis + 1 + 2 * k) % 4; }
};

/// A hyperplane is a connected component of the midline complex whose nodes
/// are the edge cells of the ambient complex; edges in no square form bare
/// single-node hyperplanes.
struct Hyperplane {
    int id = -1;
    std::vector<Midline> midlines;
    std::vector<int> dual_edges;  // ambient edge indices, sorted
};

std::vector<Hyperplane> hyperplanes(const SquareComplex& sc);

/// The edge-end incidence (edge, end); end 0 = stored tail, 1 = stored head.
using EndRef = squares::LinkGraphs::EndRef;

/// Horizontal boundary of the I-bundle over a hyperplane: a graph whose nodes
/// are edge-end incidences of dual edges and whose arcs cover the midlines
/// (one arc per parallel side of each midline's square).
struct RegularNeighborhood {
    int hyperplane = -1;
    bool two_sided = false;
    /// Component id (0 or 1 when two-sided, all 0 when one-sided) per node.
    std::vector<EndRef> nodes;
    std::vector<int> node_component;
    struct BoundaryArc {
        int midline_index;     // into Hyperplane::midlines
        int ambient_edge;      // the parallel side's edge cell
        int a, b;              // node indices
    };
    std::vector<BoundaryArc> arcs;
    int num_components = 0;
    /// Per component: contains external / internal / untagged parallel edges.
    struct ComponentProfile {
        bool external = false, internal = false, untagged = false;
    };
    std::vector<ComponentProfile> component_profile;

    int node_index(EndRef r) const;
};

RegularNeighborhood regular_neighborhood(const SquareComplex& sc, const Hyperplane& h);

struct SelfOsculation {
    int hyperplane = -1;
    int vertex = -1;
    EndRef first, second;
    /// "direct", "indirect", or "unoriented" for one-sided hyperplanes.
    std::string kind;
};

struct InterOsculation {
    int h1 = -1, h2 = -1;
    int vertex = -1;
    EndRef first, second;
    bool crossing_square_exists = true;
    /// Tags of the two contact edges (external/internal/untagged).
    std::string contact_tags;
};

struct PathologyReport {
    std::vector<int> self_intersecting;
    std::vector<int> one_sided;
    std::vector<SelfOsculation> self_osculations;
    std::vector<InterOsculation> inter_osculations;

    bool clean() const {
        return self_intersecting.empty() && one_sided.empty() && self_osculations.empty() &&
               inter_osculations.empty();
    }
};

/// Detects self-intersection, one-sidedness, direct/indirect self-osculation
/// and inter-osculation. Requires a simple complex (error NotSimple).
PathologyReport pathology_report(const SquareComplex& sc);

struct SpecialVerdict {
    bool ok = false;
    std::string reason;
};

/// C-special: bipartite one-skeleton and an empty pathology report.
SpecialVerdict is_c_special(const SquareComplex& sc);

struct RacgNerve {
    int generators = 0;                          // one per hyperplane
    std::vector<std::pair<int, int>> edges;      // crossing pairs
    std::string presentation;                    // ASCII Coxeter presentation
};

/// Nerve of the right-angled Coxeter group receiving pi_1: one involutive
/// generator per hyperplane, commuting iff the hyperplanes share a square.
/// Requires is_c_special (error NotSpecial).
RacgNerve racg_nerve(const SquareComplex& sc);

} // namespace specialcheck::hyperplanes

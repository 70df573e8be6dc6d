#pragma once

#include <map>
#include <vector>

#include "scaffold/planar.hpp"

namespace scaffold {

/// SL(3)-web in a disk.
///
/// Nodes 0..nb-1 are the boundary vertices b_1..b_nb in counterclockwise
/// order; the rest are interior.  Dart 2e/2e+1 indexing as in PlanarDigraph.
/// Interior rotations are cyclic CCW; a boundary vertex's rotation lists its
/// web darts CCW starting from the b_{a+1} side and ending at the b_{a-1}
/// side (the disk closes the circle).
struct Web {
    int nb = 0;
    std::vector<int> color;  // 0 = black, 1 = white
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;

    int V() const { return (int)color.size(); }
    int E() const { return (int)edges.size(); }
    bool is_boundary(int v) const { return v < nb; }
    int degree(int v) const { return (int)rot[v].size(); }

    int dart_base(int d) const { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; }
    int dart_tip(int d) const { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; }
    static int dart_reverse(int d) { return d ^ 1; }

    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return (int)edges.size() - 1;
    }
};

/// One strand: boundary-to-boundary dart path, plus its terminal label.
struct Strand {
    std::vector<int> darts;
    int label = 0;  // 1-based terminal boundary index
};

struct StrandTriple {
    int vertex = -1;            // interior web node
    std::array<int, 3> labels;  // sorted, repeats possible on non-normal webs
};

struct WebFlags {
    bool structural = false;   // trivalent interior, bipartite, consistent rotations
    bool non_elliptic = false;
    bool standard = false;
    bool black_boundary = false;
    bool normal = false;
    bool cyclicless = false;
    std::vector<std::string> notes;
};

namespace webs {

/// Augmented combinatorial map: the web plus the disk boundary arcs.  Face
/// ids refer to this map; outer is the outside of the disk.
struct WebMap {
    PlanarDigraph aug;
    int web_edges = 0;
    int arc_dart(int a) const { return 2 * (web_edges + a); }  // arc b_{a} -> b_{a+1}, 0-based
};

WebMap build_map(const Web& w);

WebFlags validate_web(const Web& w);

std::vector<Strand> strands(const Web& w);

/// Label of the strand traversing each dart (terminal boundary index).
std::vector<int> strand_labels_by_dart(const Web& w);

std::vector<StrandTriple> strand_triples(const Web& w);

/// Dual CAT(0) planar graph (Q, z): faces become vertices, shared web edges
/// become directed edges with the black endpoint on the right.
LabeledGraph dual_graph(const Web& w);

/// Inverse of dual_graph for valid CCW-boundary graphs.
Web undual(const LabeledGraph& g);

struct Standardization {
    Web web;
    std::vector<int> labels;  // [n''] -> [n], composite map to original labels
};

/// Remove valence-0 boundary vertices, split valence >= 2, push white
/// boundary vertices inside.
Standardization standardize_web(const Web& w);

/// Planar basis expansion from strand triples: coefficient of h_{ijk} is
/// (# white - # black) interior vertices with strand triple (i,j,k),
/// computed on the standardization and pushed to the original labels.
/// Cyclic triples (lineality) are dropped.
std::map<Triple, long long> pb_expansion(const Web& w);

/// No strand triple of undual(g) is a cyclic interval mod n.
bool graph_cyclic_less(const LabeledGraph& g);

/// Strand labels (i, j) through the dual web edge of a graph edge v->w:
/// i has v on its right, j has w on its right.  Used by the membrane law.
std::pair<int, int> edge_strand_labels(const LabeledGraph& g, int edge_index);

/// Boundary-anchored isomorphism of webs (b_i -> b_i, rotations preserved).
bool web_isomorphic(const Web& a, const Web& b);

}  // namespace webs
}  // namespace scaffold

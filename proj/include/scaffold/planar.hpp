#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scaffold/plucker.hpp"

namespace scaffold {

/// Planar directed graph given by a rotation system.
///
/// Dart 2e is edge e seen from its tail, dart 2e+1 from its head.  rot[v]
/// lists the darts based at v in counterclockwise order.  Faces are orbits
/// of the walk that keeps the face on its left; the outer face is
/// distinguished (detected, or set explicitly by builders).
struct PlanarDigraph {
    int V = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)
    std::vector<std::vector<int>> rot;       // per-vertex CCW dart lists

    int dart_count() const { return 2 * (int)edges.size(); }
    int dart_base(int d) const { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; }
    int dart_tip(int d) const { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; }
    static int dart_reverse(int d) { return d ^ 1; }
    bool dart_forward(int d) const { return d % 2 == 0; }  // along edge orientation

    int add_edge(int tail, int head) {
        edges.emplace_back(tail, head);
        return (int)edges.size() - 1;
    }

    // --- derived structure (freeze() fills these) ---
    std::vector<std::vector<int>> faces;  // dart cycles; face on the left of each dart
    std::vector<int> face_of;             // dart -> face index
    int outer = -1;

    void freeze(std::optional<int> outer_face = std::nullopt);
    bool frozen() const { return !face_of.empty(); }

    int degree(int v) const { return (int)rot[v].size(); }
    /// position of dart d in rot[base(d)]
    int rot_index(int d) const;
    int rot_next(int d) const;  // next dart CCW around base(d)
    int rot_prev(int d) const;

    /// Outer face walk reversed: the boundary of Q traversed counterclockwise.
    /// Entry t is a dart whose base is the t-th boundary vertex.
    std::vector<int> boundary_walk() const;

    bool on_boundary(int v) const;
    bool edge_on_boundary(int e) const {
        return face_of[2 * e] == outer || face_of[2 * e + 1] == outer;
    }
    /// Cut edge: both sides on the outer face.
    bool is_cut_edge(int e) const {
        return face_of[2 * e] == outer && face_of[2 * e + 1] == outer;
    }

    /// Interior faces that are directed triangles, as face indices.
    std::vector<int> triangle_faces() const;
    /// Vertices of a triangular face in walk order.
    std::array<int, 3> triangle_vertices(int f) const;
    /// True if face f is a directed 3-cycle traversed along edge directions
    /// (counterclockwise / "white" triangle).
    bool triangle_ccw(int f) const;

    int triangles_at(int v) const;
};

struct ValidationIssue {
    std::string rule;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Full CAT(0) planar graph validation; report-based.
ValidationReport validate_cat0(const PlanarDigraph& g);

/// Labeled graph (Q, z); k = 3 for scaffolds, k = 2 for tree scaffolds.
struct LabeledGraph {
    PlanarDigraph g;
    std::vector<int> z;  // z[i-1] = vertex carrying label i
    int k = 3;

    int n() const { return (int)z.size(); }

    // all-pairs directed and combinatorial distances (freeze() fills)
    std::vector<std::vector<int>> delta;
    std::vector<std::vector<int>> comb;

    void freeze();
    bool frozen() const { return !delta.empty(); }
};

namespace cat0 {

constexpr int kInfinity = 1 << 28;

/// Directed distance with edge costs {1, k-1}; cut edges use the same
/// backward cost.
int directed_distance(const LabeledGraph& g, int v, int w);
int comb_distance(const LabeledGraph& g, int v, int w);

/// The unique coloring with c(anchor) = 0; throws on inconsistency.
std::vector<int> coloring(const LabeledGraph& g, int anchor);

struct FermatResult {
    long long sum = 0;
    std::vector<int> minimizers;
};

/// Fermat-Le distance sum over a multiset of label indices (1-based).
FermatResult fermat_le(const LabeledGraph& g, const std::vector<int>& index_multiset);

/// pi_I = -Sigma_Q(I)/k for all k-subsets I.
PlueckerVector pluecker_of_graph(const LabeledGraph& g);

/// Modified vector pi^{-c(z)/k}; entries must come out integral.
PlueckerVector modified_pluecker(const LabeledGraph& g);

/// mu(v) = (1/k)(delta(v, z_.) + c(v) 1 - c(z)), an integer vector
/// (canonically reduced so that min entry is 0, i.e. modulo all-ones).
std::vector<long long> barycenter_mu(const LabeledGraph& g, int v);

/// Unique neighbor of v minimizing delta(., z); asserts uniqueness and that
/// the drop is in {1, 2}.
int min_neighbor(const LabeledGraph& g, int v, int z);

/// Element of an F-set; virtual elements flank boundary out-edges, pads
/// bring |F(v)| up to 3 in the v = z case.
struct FElem {
    enum Kind { Real = 0, VirtMinus = 1, VirtPlus = 2, Pad = 3 } kind = Real;
    int vertex = -1;  // Real: neighbor id; Virt: the flanked out-neighbor
    int pad = 0;

    friend bool operator==(const FElem&, const FElem&) = default;
    friend auto operator<=>(const FElem&, const FElem&) = default;
};

struct FSet {
    bool full_fan = false;   // the v = z case
    std::vector<FElem> elems;

    friend bool operator==(const FSet& a, const FSet& b) {
        return a.full_fan == b.full_fan && a.elems == b.elems;
    }
};

/// F(v, z) per the three-case definition.
FSet f_set(const LabeledGraph& g, int v, int z);

/// The extended cyclic neighbor list around v (real in/out neighbors plus
/// virtual flanks), used for weak-cyclic-order checks.
std::vector<FElem> extended_fan(const LabeledGraph& g, int v);

bool is_parallel(const LabeledGraph& g, int v, int z1, int z2);

/// Focal point test for a triple of label indices (SDR + pairwise
/// non-parallel).
bool is_focal(const LabeledGraph& g, int v, const std::array<int, 3>& label_indices);

/// M_v = { I : v is a distance minimizer for I }.
std::vector<Triple> matroid_Mv(const LabeledGraph& g, int v);

/// k-generic variant (k = 2 tree scaffolds use pairs).
std::vector<Subset> matroid_Mv_subsets(const LabeledGraph& g, int v);

struct ScaffoldReport {
    bool weak = false;
    bool strong = false;
    std::vector<std::string> notes;
};

ScaffoldReport scaffold_check(const LabeledGraph& g);

struct ClassifyFlags {
    bool simple = false;
    bool ccw_labeled = false;
    bool boundary_ccw = false;
    bool normal = false;
    bool cyclicless = false;
    std::vector<int> acute_vertices;
    std::vector<int> cut_vertices;
};

ClassifyFlags classify(const LabeledGraph& g);

/// Wedge sum at labeled vertices v1 (of g1) and v2 (of g2); label intervals
/// must be proper cyclic intervals covering [n].
LabeledGraph sum_graphs(const LabeledGraph& g1, int v1, const LabeledGraph& g2, int v2);

/// Rooted planar isomorphism: a rotation- and label-preserving bijection.
bool labeled_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace cat0
}  // namespace scaffold

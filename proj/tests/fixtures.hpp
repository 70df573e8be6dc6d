#pragma once

// Shared test fixtures: concrete graphs and webs with coordinates, rotation
// systems derived from the embedding.

#include <cmath>
#include <vector>

#include "scaffold/planar.hpp"
#include "scaffold/web.hpp"

namespace fixtures {

using scaffold::LabeledGraph;
using scaffold::PlanarDigraph;
using scaffold::Web;

struct XY {
    double x, y;
};

inline XY polar(double deg, double r) {
    return {r * std::cos(deg * M_PI / 180.0), r * std::sin(deg * M_PI / 180.0)};
}

inline double angle_of(const XY& from, const XY& to) {
    return std::atan2(to.y - from.y, to.x - from.x);
}

/// Rotation systems from straight-line coordinates (CCW by angle).
inline PlanarDigraph make_planar(const std::vector<XY>& pts,
                                 const std::vector<std::pair<int, int>>& edges) {
    PlanarDigraph g;
    g.V = (int)pts.size();
    g.edges = edges;
    g.rot.assign(g.V, {});
    std::vector<std::vector<std::pair<double, int>>> fans(g.V);
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto [t, h] = edges[e];
        fans[t].push_back({angle_of(pts[t], pts[h]), 2 * e});
        fans[h].push_back({angle_of(pts[h], pts[t]), 2 * e + 1});
    }
    for (int v = 0; v < g.V; ++v) {
        std::sort(fans[v].begin(), fans[v].end());
        for (auto& [a, d] : fans[v]) g.rot[v].push_back(d);
    }
    g.freeze();
    return g;
}

inline LabeledGraph make_labeled(const std::vector<XY>& pts,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& labels, int k = 3) {
    LabeledGraph g;
    g.g = make_planar(pts, edges);
    g.z = labels;
    g.k = k;
    g.freeze();
    return g;
}

/// Web from coordinates; boundary vertices must be nodes 0..nb-1 in CCW
/// order around the disk center.
inline Web make_web(int nb, const std::vector<XY>& pts, const std::vector<int>& colors,
                    const std::vector<std::pair<int, int>>& edges) {
    Web w;
    w.nb = nb;
    w.color = colors;
    w.edges = edges;
    w.rot.assign(pts.size(), {});
    std::vector<std::vector<std::pair<double, int>>> fans(pts.size());
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto [u, v] = edges[e];
        fans[u].push_back({angle_of(pts[u], pts[v]), 2 * e});
        fans[v].push_back({angle_of(pts[v], pts[u]), 2 * e + 1});
    }
    XY c{0, 0};
    for (int b = 0; b < nb; ++b) {
        c.x += pts[b].x / nb;
        c.y += pts[b].y / nb;
    }
    for (int v = 0; v < (int)pts.size(); ++v) {
        if (v >= nb) {
            std::sort(fans[v].begin(), fans[v].end());
        } else {
            // start just past the direction toward the next boundary vertex
            double base = angle_of(pts[v], pts[(v + 1) % nb]);
            auto key = [&](double a) {
                double d = a - base;
                while (d <= 1e-9) d += 2 * M_PI;
                return d;
            };
            std::sort(fans[v].begin(), fans[v].end(),
                      [&](auto& p, auto& q) { return key(p.first) < key(q.first); });
        }
        for (auto& [a, d] : fans[v]) w.rot[v].push_back(d);
    }
    return w;
}

// ---- paper figures ----

/// The ten-vertex CCW-labeled graph (labels 1..6, extra vertices x, y, u, v).
/// Vertex ids: z1=0 z2=1 z3=2 z4=3 z5=4 z6=5 x=6 y=7 u=8 v=9.
inline LabeledGraph fig_q1() {
    double h = std::sqrt(3.0) / 2;
    std::vector<XY> pts = {
        {2, 2 * h}, {1.5, 3 * h}, {0.5, h}, {0, 0}, {2, 0},
        {3, 0},     {1, 2 * h},   {1, 0},   {2.5, h}, {1.5, h}};
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 6}, {6, 2}, {2, 3}, {3, 7}, {7, 4}, {4, 5}, {5, 8}, {8, 0},
        {6, 0}, {0, 9}, {9, 6}, {9, 8}, {9, 7}, {2, 9}, {7, 2}, {4, 9}, {8, 4}};
    return make_labeled(pts, edges, {0, 1, 2, 3, 4, 5});
}

/// Alternating hexagon with a labeled center (n=7) or without (n=6).
/// Vertex ids: boundary 0..5 (labels 1..6), center 6.
inline LabeledGraph fig37_hexagon(bool with_center_label) {
    std::vector<XY> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(polar(-60.0 + 60.0 * i, 2.0));
    pts.push_back({0, 0});
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5},
        {6, 0}, {1, 6}, {6, 2}, {3, 6}, {6, 4}, {5, 6}};
    std::vector<int> z = {0, 1, 2, 3, 4, 5};
    if (with_center_label) z.push_back(6);
    return make_labeled(pts, edges, z);
}

namespace detail {
inline std::pair<std::vector<XY>, std::vector<std::pair<int, int>>> fig37_right_shape() {
    double h = std::sqrt(3.0);
    // ids: P1=0 P2=1 Py=2 P6=3 Pw=4 Pz=5 P5=6 Px=7 P4=8 P3=9
    std::vector<XY> pts = {{3, 3 * h}, {2, 2 * h}, {4, 2 * h}, {5, h}, {3, h},
                           {1, h},     {6, 0},     {4, 0},     {2, 0}, {0, 0}};
    std::vector<std::pair<int, int>> edges = {
        {6, 3}, {7, 6}, {8, 7}, {9, 8}, {3, 2}, {2, 0}, {0, 1}, {1, 5}, {5, 9},
        {3, 7}, {7, 4}, {4, 8}, {8, 5}, {5, 4}, {4, 3}, {4, 1}, {2, 4}, {1, 2}};
    return {pts, edges};
}
}  // namespace detail

/// The normal cyclic-less graph on the right of the three-hexagon figure
/// (labels 1..6).
inline LabeledGraph fig37_right() {
    auto [pts, edges] = detail::fig37_right_shape();
    return make_labeled(pts, edges, {0, 1, 9, 8, 6, 3});
}

/// The n=9 normal graph of the worked nc-tableau example (same shape,
/// labels 1..9 with only w unlabeled).
inline LabeledGraph fig39_graph() {
    auto [pts, edges] = detail::fig37_right_shape();
    return make_labeled(pts, edges, {3, 2, 0, 1, 5, 9, 8, 7, 6});
}

/// Dilated triangle ("triforce"), labels 1..6 one per vertex.
inline LabeledGraph triforce36() {
    double h = std::sqrt(3.0) / 2;
    // A=0 B=1 C=2 D=3 E=4 F=5
    std::vector<XY> pts = {{0, 0}, {1, 0}, {2, 0}, {1.5, h}, {1, 2 * h}, {0.5, h}};
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {5, 3}, {1, 5}, {3, 1}};
    return make_labeled(pts, edges, {4, 5, 0, 1, 2, 3});
}

/// Single CCW triangle with a block labeling; blocks list the labels at
/// vertices C(top), A(left), B(right) in that order.
inline LabeledGraph triangle36(const std::vector<int>& at_c, const std::vector<int>& at_a,
                               const std::vector<int>& at_b, int n) {
    double h = std::sqrt(3.0) / 2;
    std::vector<XY> pts = {{0, 0}, {1, 0}, {0.5, h}};  // A=0 B=1 C=2
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}};
    std::vector<int> z(n, -1);
    for (int i : at_c) z[i - 1] = 2;
    for (int i : at_a) z[i - 1] = 0;
    for (int i : at_b) z[i - 1] = 1;
    return make_labeled(pts, edges, z);
}

/// Non-simple graph: a directed wheel joined by a cut edge to a vertex
/// carrying two triangles.
inline LabeledGraph fig_notsimple(const std::vector<int>& labels) {
    std::vector<XY> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(polar(45.0 * i, 1.0));  // 0..7
    pts.push_back({0, 0});                                            // 8 center
    pts.push_back({2, 0});                                            // 9
    pts.push_back({3, 0});                                            // 10
    pts.push_back({2.5, std::sqrt(3.0) / 2});                         // 11
    pts.push_back({1.5, -std::sqrt(3.0) / 2});                        // 12
    pts.push_back({2.5, -std::sqrt(3.0) / 2});                        // 13
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 7}, {0, 7},
        {8, 0}, {1, 8}, {8, 2}, {3, 8}, {8, 4}, {5, 8}, {8, 6}, {7, 8},
        {9, 0}, {9, 10}, {10, 11}, {11, 9}, {9, 12}, {12, 13}, {13, 9}};
    return make_labeled(pts, edges, labels);
}

/// First normal model of the two weight-3 ray orbits at n=8.
inline LabeledGraph fig38_graph_a() {
    double h = std::sqrt(3.0);
    // 1=0 2=1 8=2 u=3 v=4 7=5 3=6 4=7 5=8 6=9
    std::vector<XY> pts = {{3, 3 * h}, {2, 2 * h}, {4, 2 * h}, {1, h}, {3, h},
                           {5, h},     {0, 0},     {2, 0},     {4, 0}, {6, 0}};
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 3}, {3, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {5, 2}, {2, 0},
        {2, 4}, {4, 7}, {5, 8}, {8, 4}, {7, 3}, {4, 1}, {1, 2}, {4, 5}, {3, 4}};
    return make_labeled(pts, edges, {0, 1, 6, 7, 8, 9, 5, 2});
}

/// Second normal model of the weight-3 orbits at n=8.
inline LabeledGraph fig38_graph_b() {
    double h = std::sqrt(3.0);
    // lab4=0 lab3=1 lab5=2 center=3 lab2=4 lab6=5 lab7=6 lab8=7 lab1=8
    std::vector<XY> pts = {{2, 2 * h}, {4, 2 * h}, {1, h}, {3, h}, {5, h},
                           {0, 0},     {2, 0},     {4, 0}, {6, 0}};
    std::vector<std::pair<int, int>> edges = {
        {5, 6}, {6, 7}, {7, 8}, {8, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}, {2, 5},
        {2, 3}, {3, 4}, {6, 2}, {3, 6}, {7, 3}, {4, 7}};
    return make_labeled(pts, edges, {8, 4, 1, 0, 2, 5, 6, 7});
}

/// The hexagonal n=6 standard web (three whites around a black core).
inline Web web_hexagon6() {
    std::vector<XY> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(polar(60.0 + 60.0 * i, 2.2));  // b1..b6
    pts.push_back(polar(90, 1.0));   // 6 = w1
    pts.push_back(polar(210, 1.0));  // 7 = w2
    pts.push_back(polar(330, 1.0));  // 8 = w3
    pts.push_back({0, 0});           // 9 = bc
    std::vector<int> colors = {0, 0, 0, 0, 0, 0, 1, 1, 1, 0};
    std::vector<std::pair<int, int>> edges = {
        {9, 6}, {9, 7}, {9, 8}, {6, 0}, {6, 1}, {7, 2}, {7, 3}, {8, 4}, {8, 5}};
    return make_web(6, pts, colors, edges);
}

/// The n=12 standard web with an octagonal interior face, boundary numbered
/// as drawn in the figure.
inline Web web_12gon_fig() {
    std::vector<XY> pts;
    double bangles[12] = {112.5, 157.5, 180, 202.5, 247.5, 270, 292.5, 337.5, 0, 22.5, 67.5, 90};
    for (double a : bangles) pts.push_back(polar(a, 4.2));  // b1..b12 = 0..11
    pts.push_back(polar(90, 2.2));    // 12 wT
    pts.push_back(polar(135, 2.2));   // 13 bTL
    pts.push_back(polar(180, 2.2));   // 14 wL
    pts.push_back(polar(225, 2.2));   // 15 bBL
    pts.push_back(polar(270, 2.2));   // 16 wB
    pts.push_back(polar(315, 2.2));   // 17 bBR
    pts.push_back(polar(0, 2.2));     // 18 wR
    pts.push_back(polar(45, 2.2));    // 19 bTR
    pts.push_back(polar(135, 3.2));   // 20 eTL
    pts.push_back(polar(225, 3.2));   // 21 eBL
    pts.push_back(polar(315, 3.2));   // 22 eBR
    pts.push_back(polar(45, 3.2));    // 23 eTR
    std::vector<int> colors(24, 0);
    for (int v : {12, 14, 16, 18, 20, 21, 22, 23}) colors[v] = 1;
    std::vector<std::pair<int, int>> edges = {
        {12, 19}, {19, 18}, {18, 17}, {17, 16}, {16, 15}, {15, 14}, {14, 13}, {13, 12},
        {12, 11}, {14, 2},  {16, 5},  {18, 8},
        {20, 13}, {20, 0},  {20, 1},
        {21, 15}, {21, 3},  {21, 4},
        {22, 17}, {22, 6},  {22, 7},
        {23, 19}, {23, 9},  {23, 10}};
    return make_web(12, pts, colors, edges);
}

/// The same web with the boundary numbering of the worked examples (one
/// step behind the figure's numbering).
inline Web web_12gon() {
    Web fig = web_12gon_fig();
    Web w = fig;
    auto remap = [](int v) { return v < 12 ? (v + 11) % 12 : v; };
    for (auto& [u, v] : w.edges) {
        u = remap(u);
        v = remap(v);
    }
    for (int v = 0; v < 12; ++v) w.rot[remap(v)] = fig.rot[v];
    return w;
}

/// The n=12 running example graph (dual of the example-numbered web).
inline LabeledGraph big312_graph() { return scaffold::webs::dual_graph(web_12gon()); }

/// Tripod web: one white center joined to three of n black boundary
/// vertices (legs are 1-based labels).
inline Web web_tripod(int n, int l1, int l2, int l3) {
    std::vector<XY> pts;
    for (int i = 0; i < n; ++i) pts.push_back(polar(90.0 + 360.0 * i / n, 2.0));
    pts.push_back({0, 0});
    std::vector<int> colors(n, 0);
    colors.push_back(1);
    std::vector<std::pair<int, int>> edges = {{n, l1 - 1}, {n, l2 - 1}, {n, l3 - 1}};
    return make_web(n, pts, colors, edges);
}

}  // namespace fixtures

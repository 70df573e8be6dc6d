#include "scaffold/web.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace scaffold {
namespace webs {

WebMap build_map(const Web& w) {
    if (w.nb < 2) throw std::invalid_argument("build_map: need at least 2 boundary vertices");
    WebMap wm;
    wm.web_edges = w.E();
    wm.aug.V = w.V();
    wm.aug.edges = w.edges;
    for (int t = 0; t < w.nb; ++t) wm.aug.add_edge(t, (t + 1) % w.nb);
    wm.aug.rot.assign(w.V(), {});
    const int E = w.E();
    for (int v = 0; v < w.V(); ++v) {
        if (!w.is_boundary(v)) {
            wm.aug.rot[v] = w.rot[v];
        } else {
            auto& r = wm.aug.rot[v];
            r.push_back(2 * (E + v));  // arc toward the next boundary vertex
            for (int d : w.rot[v]) r.push_back(d);
            r.push_back(2 * (E + (v + w.nb - 1) % w.nb) + 1);  // arc toward the previous
        }
    }
    wm.aug.freeze();
    wm.aug.outer = wm.aug.face_of[2 * E + 1];  // left of the clockwise coastal dart
    return wm;
}

namespace {

int turn_exit(const Web& w, int entry_dart) {
    // entry dart ends at an interior vertex v; left turn at white, right at
    // black, in the CCW rotation at v.
    int v = w.dart_tip(entry_dart);
    int rev = Web::dart_reverse(entry_dart);
    const auto& r = w.rot[v];
    int pos = -1;
    for (int i = 0; i < (int)r.size(); ++i)
        if (r[i] == rev) pos = i;
    if (pos < 0) throw std::logic_error("turn_exit: dart missing from rotation");
    const int m = (int)r.size();
    return w.color[v] == 1 ? r[(pos + m - 1) % m] : r[(pos + 1) % m];
}

}  // namespace

std::vector<Strand> strands(const Web& w) {
    std::vector<Strand> out;
    std::vector<int> used(2 * w.E(), 0);
    for (int b = 0; b < w.nb; ++b) {
        for (int d0 : w.rot[b]) {
            if (used[d0]) continue;
            Strand s;
            int d = d0;
            while (true) {
                if (used[d]) throw std::domain_error("strands: cyclic strand (elliptic web)");
                used[d] = 1;
                s.darts.push_back(d);
                int v = w.dart_tip(d);
                if (w.is_boundary(v)) {
                    s.label = v + 1;
                    break;
                }
                d = turn_exit(w, d);
            }
            out.push_back(std::move(s));
        }
    }
    for (int d = 0; d < 2 * w.E(); ++d)
        if (!used[d]) throw std::domain_error("strands: cyclic strand (elliptic web)");
    return out;
}

std::vector<int> strand_labels_by_dart(const Web& w) {
    std::vector<int> lab(2 * w.E(), -1);
    for (const auto& s : strands(w))
        for (int d : s.darts) lab[d] = s.label;
    return lab;
}

std::vector<StrandTriple> strand_triples(const Web& w) {
    auto lab = strand_labels_by_dart(w);
    std::vector<StrandTriple> out;
    for (int v = w.nb; v < w.V(); ++v) {
        StrandTriple t;
        t.vertex = v;
        int c = 0;
        for (int d = 0; d < 2 * w.E(); ++d)
            if (w.dart_tip(d) == v) {
                if (c == 3) throw std::logic_error("strand_triples: vertex not trivalent");
                t.labels[c++] = lab[d];
            }
        if (c != 3) throw std::logic_error("strand_triples: interior vertex not trivalent");
        std::sort(t.labels.begin(), t.labels.end());
        out.push_back(t);
    }
    return out;
}

WebFlags validate_web(const Web& w) {
    WebFlags f;
    f.structural = true;
    auto note = [&](const std::string& s) {
        f.notes.push_back(s);
        f.structural = false;
    };
    for (int v = w.nb; v < w.V(); ++v)
        if (w.degree(v) != 3) note("interior vertex " + std::to_string(v) + " not trivalent");
    for (auto [u, v] : w.edges)
        if (w.color[u] == w.color[v]) note("edge joins same colors");
    if (!f.structural) return f;
    try {
        WebMap wm = build_map(w);
        f.non_elliptic = true;
        for (int fc = 0; fc < (int)wm.aug.faces.size(); ++fc) {
            if (fc == wm.aug.outer) continue;
            bool internal = true;
            for (int d : wm.aug.faces[fc])
                if (wm.aug.dart_base(d) < w.nb) internal = false;
            if (internal && wm.aug.faces[fc].size() < 6) f.non_elliptic = false;
        }
    } catch (const std::exception& e) {
        note(e.what());
        return f;
    }
    try {
        auto tris = strand_triples(w);
        f.normal = true;
        bool noncyclic = true;
        for (const auto& t : tris) {
            if (t.labels[0] == t.labels[1] || t.labels[1] == t.labels[2])
                f.normal = false;
            else if (is_cyclic_triple(Triple(t.labels[0], t.labels[1], t.labels[2]), w.nb))
                noncyclic = false;
        }
        f.cyclicless = f.normal && noncyclic;
    } catch (const std::exception&) {
        f.non_elliptic = false;
    }
    f.black_boundary = true;
    for (int b = 0; b < w.nb; ++b)
        if (w.color[b] != 0) f.black_boundary = false;
    f.standard = f.black_boundary;
    for (int b = 0; b < w.nb; ++b)
        if (w.degree(b) != 1) f.standard = false;
    return f;
}

LabeledGraph dual_graph(const Web& w) {
    auto flags = validate_web(w);
    if (!flags.structural || !flags.non_elliptic)
        throw std::domain_error("dual_graph: web is not a non-elliptic SL(3)-web");
    const int E = w.E();
    LabeledGraph out;
    out.k = 3;

    if (w.V() == w.nb) {  // no interior: the dual is a single vertex with all labels
        out.g.V = 1;
        out.g.rot.assign(1, {});
        out.g.freeze();
        out.z.assign(w.nb, 0);
        out.freeze();
        return out;
    }

    WebMap wm = build_map(w);
    const int F = (int)wm.aug.faces.size();
    std::vector<int> qv(F, -1);
    int nv = 0;
    for (int f = 0; f < F; ++f)
        if (f != wm.aug.outer) qv[f] = nv++;
    out.g.V = nv;

    // one Q edge per web edge, black endpoint on the right
    std::vector<int> qedge_of_webedge(E, -1);
    for (int e = 0; e < E; ++e) {
        int dW = (w.color[w.dart_base(2 * e)] == 1) ? 2 * e : 2 * e + 1;
        int tail = wm.aug.face_of[Web::dart_reverse(dW)];
        int head = wm.aug.face_of[dW];
        qedge_of_webedge[e] = out.g.add_edge(qv[tail], qv[head]);
    }

    out.g.rot.assign(nv, {});
    for (int f = 0; f < F; ++f) {
        if (f == wm.aug.outer) continue;
        for (int d : wm.aug.faces[f]) {
            if (d >= 2 * E) continue;  // arc darts have no dual
            int qe = qedge_of_webedge[d / 2];
            int qd = (out.g.edges[qe].first == qv[f]) ? 2 * qe : 2 * qe + 1;
            if (out.g.dart_base(qd) != qv[f]) throw std::logic_error("dual_graph: dart mismatch");
            out.g.rot[qv[f]].push_back(qd);
        }
    }

    // outer face of Q: every interior face winds around one interior web
    // vertex, crossing its edges in rotation order; the leftover face is
    // the outer one
    out.g.freeze();
    std::vector<int> webedge_of_qedge((int)out.g.edges.size(), -1);
    for (int e = 0; e < E; ++e) webedge_of_qedge[qedge_of_webedge[e]] = e;
    auto cyclic_equal = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size() || a.empty()) return false;
        const int m = (int)a.size();
        for (int s = 0; s < m; ++s) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) ok = (a[(s + i) % m] == b[i]);
            if (ok) return true;
        }
        return false;
    };
    std::vector<std::vector<int>> rotseq;
    for (int v = w.nb; v < w.V(); ++v) {
        std::vector<int> s;
        for (int d : w.rot[v]) s.push_back(d / 2);
        rotseq.push_back(s);
    }
    int outer_q = -1;
    for (int f = 0; f < (int)out.g.faces.size(); ++f) {
        std::vector<int> seq;
        for (int qd : out.g.faces[f]) seq.push_back(webedge_of_qedge[qd / 2]);
        bool matched = false;
        for (const auto& rs : rotseq)
            if (cyclic_equal(seq, rs)) matched = true;
        if (!matched) {
            if (outer_q != -1) throw std::logic_error("dual_graph: ambiguous outer face");
            outer_q = f;
        }
    }
    if (outer_q < 0) throw std::logic_error("dual_graph: no outer face found");
    out.g.outer = outer_q;

    out.z.resize(w.nb);
    for (int a = 1; a <= w.nb; ++a) {
        int t = (a - 2 + w.nb) % w.nb;  // arc b_{a-1} -> b_a
        out.z[a - 1] = qv[wm.aug.face_of[wm.arc_dart(t)]];
    }
    out.freeze();
    return out;
}

namespace {

struct UndualResult {
    Web web;
    std::vector<int> web_edge_of_graph_edge;  // -1 for none
};

// CCW positions p_a on the boundary walk for each label (first admissible
// greedy assignment); throws if the labeling is not CCW.
std::vector<int> ccw_positions(const LabeledGraph& g) {
    auto walk = g.g.boundary_walk();
    const int L = (int)walk.size();
    const int n = g.n();
    std::vector<int> wv(L);
    for (int t = 0; t < L; ++t) wv[t] = g.g.dart_base(walk[t]);
    for (int zi : g.z)
        if (!g.g.on_boundary(zi)) throw std::domain_error("undual: label off the boundary");
    for (int start = 0; start < L; ++start) {
        if (wv[start] != g.z[0]) continue;
        std::vector<int> pos(n);
        pos[0] = start;
        int off = 0;
        bool ok = true;
        for (int i = 2; i <= n && ok; ++i) {
            while (off < L && wv[(start + off) % L] != g.z[i - 1]) ++off;
            if (off >= L) ok = false;
            else pos[i - 1] = (start + off) % L;
        }
        if (ok) return pos;
    }
    throw std::domain_error("undual: labels are not in CCW order");
}

UndualResult undual_full(const LabeledGraph& g) {
    auto rep = validate_cat0(g.g);
    if (!rep.ok()) throw std::domain_error("undual: not a valid CAT(0) planar graph");
    UndualResult res;
    Web& w = res.web;
    const int n = g.n();
    w.nb = n;
    w.color.assign(n, 0);  // boundary all black
    w.rot.assign(n, {});
    res.web_edge_of_graph_edge.assign(g.g.edges.size(), -1);

    if (g.g.V == 1) return res;  // all labels on one vertex: all-degree-0 web

    auto walk = g.g.boundary_walk();
    for (int d : walk)
        if (!g.g.dart_forward(d)) throw std::domain_error("undual: boundary not CCW oriented");

    auto tris = g.g.triangle_faces();
    std::map<int, int> node_of_face;
    for (int f : tris) {
        node_of_face[f] = w.V();
        w.color.push_back(g.g.triangle_ccw(f) ? 1 : 0);
        w.rot.push_back({});
    }

    const int L = (int)walk.size();
    auto pos = ccw_positions(g);
    std::vector<int> gap_of_walk_pos(L, -1);
    for (int a = 0; a < n; ++a) {
        int from = pos[a];
        int to = pos[(a + 1) % n];
        for (int t = from; t != to; t = (t + 1) % L) gap_of_walk_pos[t] = a;
    }
    if (n == 1)
        for (int t = 0; t < L; ++t) gap_of_walk_pos[t] = 0;
    for (int t = 0; t < L; ++t)
        if (gap_of_walk_pos[t] < 0) throw std::logic_error("undual: uncovered boundary edge");

    // web edges; remember per graph dart which web dart crosses it
    std::vector<int> webdart_of_gdart(g.g.dart_count(), -1);
    for (int e = 0; e < (int)g.g.edges.size(); ++e) {
        int fa = g.g.face_of[2 * e], fb = g.g.face_of[2 * e + 1];
        if (fa != g.g.outer && fb != g.g.outer) {
            int we = w.add_edge(node_of_face.at(fa), node_of_face.at(fb));
            res.web_edge_of_graph_edge[e] = we;
            webdart_of_gdart[2 * e] = 2 * we;
            webdart_of_gdart[2 * e + 1] = 2 * we + 1;
        }
    }
    for (int t = 0; t < L; ++t) {
        int d = walk[t];
        int e = d / 2;
        int f = g.g.face_of[d] == g.g.outer ? g.g.face_of[PlanarDigraph::dart_reverse(d)]
                                            : g.g.face_of[d];
        int we = w.add_edge(node_of_face.at(f), gap_of_walk_pos[t]);
        res.web_edge_of_graph_edge[e] = we;
        int din = g.g.face_of[d] == g.g.outer ? PlanarDigraph::dart_reverse(d) : d;
        webdart_of_gdart[din] = 2 * we;  // based at the triangle node
    }

    // interior node rotations follow the triangle face walks
    for (int f : tris) {
        int node = node_of_face[f];
        for (int d : g.g.faces[f]) {
            int wd = webdart_of_gdart[d];
            if (wd < 0) throw std::logic_error("undual: missing web dart");
            if (w.dart_base(wd) != node) wd = Web::dart_reverse(wd);
            if (w.dart_base(wd) != node) throw std::logic_error("undual: dart base mismatch");
            w.rot[node].push_back(wd);
        }
    }
    // boundary node rotations run against the walk (from the next label's
    // side back to the previous one)
    for (int a = 0; a < n; ++a) {
        std::vector<int> mine;
        for (int t = 0; t < L; ++t)
            if (gap_of_walk_pos[t] == a) mine.push_back(t);
        for (auto it = mine.rbegin(); it != mine.rend(); ++it) {
            int e = walk[*it] / 2;
            int we = res.web_edge_of_graph_edge[e];
            w.rot[a].push_back(2 * we + 1);  // dart based at the boundary node
        }
    }
    return res;
}

}  // namespace

Web undual(const LabeledGraph& g) { return undual_full(g).web; }

Standardization standardize_web(const Web& w) {
    Standardization out;
    Web& s = out.web;
    struct NewB {
        int label;      // original 1-based label
        int src_dart;   // dart at the original boundary vertex
        int push_of;    // original white boundary vertex being pushed, or -1
        int push_side;  // 0 = left leg, 1 = right leg
    };
    std::vector<NewB> nbs;
    for (int b = 0; b < w.nb; ++b) {
        int d = w.degree(b);
        if (d == 0) continue;  // valence-0 boundary vertices are dropped
        // rot[b] runs from the next-label side to the previous side, so the
        // CCW boundary order of the split vertices is the reverse
        for (int j = d - 1; j >= 0; --j) {
            if (w.color[b] == 0) {
                nbs.push_back({b + 1, w.rot[b][j], -1, 0});
            } else {
                nbs.push_back({b + 1, w.rot[b][j], b, 0});
                nbs.push_back({b + 1, w.rot[b][j], b, 1});
            }
        }
    }
    s.nb = (int)nbs.size();
    out.labels.resize(s.nb);
    for (int i = 0; i < s.nb; ++i) out.labels[i] = nbs[i].label;
    s.color.assign(s.nb, 0);
    s.rot.assign(s.nb, {});

    std::vector<int> node_map(w.V(), -1);
    for (int v = w.nb; v < w.V(); ++v) {
        node_map[v] = s.V();
        s.color.push_back(w.color[v]);
        s.rot.push_back({});
    }
    std::map<std::pair<int, int>, int> pushed;  // (white boundary vertex, dart) -> interior node
    for (const auto& nb : nbs) {
        if (nb.push_of < 0) continue;
        auto key = std::make_pair(nb.push_of, nb.src_dart);
        if (!pushed.count(key)) {
            pushed[key] = s.V();
            s.color.push_back(1);
            s.rot.push_back({});
        }
    }

    std::map<std::pair<int, int>, int> black_new;
    std::map<std::pair<int, int>, std::pair<int, int>> push_legs;
    for (int i = 0; i < (int)nbs.size(); ++i) {
        if (nbs[i].push_of < 0) {
            black_new[{nbs[i].label - 1, nbs[i].src_dart}] = i;
        } else if (nbs[i].push_side == 0) {
            push_legs[{nbs[i].push_of, nbs[i].src_dart}].first = i;
        } else {
            push_legs[{nbs[i].push_of, nbs[i].src_dart}].second = i;
        }
    }
    auto endpoint = [&](int vert, int dart) -> int {
        if (!w.is_boundary(vert)) return node_map[vert];
        if (w.color[vert] == 0) return black_new.at({vert, dart});
        return pushed.at({vert, dart});
    };
    std::vector<int> edge_map(w.E(), -1);
    for (int e = 0; e < w.E(); ++e) {
        auto [u, v] = w.edges[e];
        edge_map[e] = s.add_edge(endpoint(u, 2 * e), endpoint(v, 2 * e + 1));
    }
    std::map<std::pair<int, int>, std::pair<int, int>> leg_edges;
    for (auto& [key, node] : pushed) {
        auto [li, ri] = push_legs.at(key);
        int el = s.add_edge(node, li);
        int er = s.add_edge(node, ri);
        leg_edges[key] = {el, er};
    }

    for (int v = w.nb; v < w.V(); ++v)
        for (int d : w.rot[v]) {
            int nd = 2 * edge_map[d / 2] + (d % 2);
            if (s.dart_base(nd) != node_map[v]) nd = Web::dart_reverse(nd);
            s.rot[node_map[v]].push_back(nd);
        }
    for (auto& [key, node] : pushed) {
        int d = key.second;
        int nd = 2 * edge_map[d / 2] + (d % 2);
        if (s.dart_base(nd) != node) nd = Web::dart_reverse(nd);
        auto [el, er] = leg_edges.at(key);
        // CCW at the pushed white: the old edge points inward, the left leg
        // sits on the previous-boundary side
        s.rot[node] = {nd, 2 * el, 2 * er};
    }
    for (int i = 0; i < (int)nbs.size(); ++i) {
        int dart;
        if (nbs[i].push_of < 0) {
            int e = edge_map[nbs[i].src_dart / 2];
            dart = 2 * e + (nbs[i].src_dart % 2);
            if (s.dart_base(dart) != i) dart = Web::dart_reverse(dart);
        } else {
            auto [el, er] = leg_edges.at({nbs[i].push_of, nbs[i].src_dart});
            dart = 2 * (nbs[i].push_side == 0 ? el : er) + 1;
        }
        if (s.dart_base(dart) != i) throw std::logic_error("standardize_web: bad boundary dart");
        s.rot[i] = {dart};
    }
    return out;
}

std::map<Triple, long long> pb_expansion(const Web& w) {
    auto flags = validate_web(w);
    if (!flags.structural || !flags.non_elliptic || !flags.black_boundary)
        throw std::domain_error("pb_expansion: need a non-elliptic web with black boundary");
    auto std_w = standardize_web(w);
    std::map<Triple, long long> coeff;
    if (std_w.web.V() == std_w.web.nb) return coeff;
    for (const auto& t : strand_triples(std_w.web)) {
        int a = std_w.labels[t.labels[0] - 1];
        int b = std_w.labels[t.labels[1] - 1];
        int c = std_w.labels[t.labels[2] - 1];
        if (a == b || b == c || a == c)
            throw std::domain_error("pb_expansion: degenerate strand triple (web not normal)");
        Triple j(a, b, c);
        if (is_cyclic_triple(j, w.nb)) continue;  // lineality
        coeff[j] += std_w.web.color[t.vertex] == 1 ? 1 : -1;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = (it->second == 0) ? coeff.erase(it) : std::next(it);
    return coeff;
}

bool graph_cyclic_less(const LabeledGraph& g) {
    if (g.g.V == 1) return true;
    auto w = undual(g);
    for (const auto& t : strand_triples(w)) {
        if (t.labels[0] == t.labels[1] || t.labels[1] == t.labels[2]) continue;
        if (is_cyclic_triple(Triple(t.labels[0], t.labels[1], t.labels[2]), g.n())) return false;
    }
    return true;
}

std::pair<int, int> edge_strand_labels(const LabeledGraph& g, int edge_index) {
    auto res = undual_full(g);
    auto lab = strand_labels_by_dart(res.web);
    int we = res.web_edge_of_graph_edge.at(edge_index);
    if (we < 0) throw std::domain_error("edge_strand_labels: edge has no dual web edge");
    // i = the strand traversing the dual edge black-to-white (tail of the
    // graph edge on its right), j = the reverse one
    int d = 2 * we;
    if (res.web.color[res.web.dart_base(d)] != 0) d = Web::dart_reverse(d);
    if (res.web.color[res.web.dart_base(d)] != 0)
        throw std::logic_error("edge_strand_labels: no black endpoint");
    return {lab[d], lab[Web::dart_reverse(d)]};
}

bool web_isomorphic(const Web& a, const Web& b) {
    if (a.nb != b.nb || a.V() != b.V() || a.E() != b.E()) return false;
    for (int v = 0; v < a.nb; ++v)
        if (a.degree(v) != b.degree(v) || a.color[v] != b.color[v]) return false;
    std::map<int, int> dmap;
    std::vector<std::pair<int, int>> stack;
    bool ok = true;
    auto push = [&](int da, int db) {
        auto it = dmap.find(da);
        if (it != dmap.end()) return it->second == db;
        dmap[da] = db;
        stack.push_back({da, db});
        return true;
    };
    for (int v = 0; v < a.nb && ok; ++v)
        for (int t = 0; t < a.degree(v) && ok; ++t) ok = push(a.rot[v][t], b.rot[v][t]);
    auto rot_step = [](const Web& w, int d) {
        int v = w.dart_base(d);
        const auto& r = w.rot[v];
        int pos = -1;
        for (int i = 0; i < (int)r.size(); ++i)
            if (r[i] == d) pos = i;
        return r[(pos + 1) % (int)r.size()];
    };
    while (ok && !stack.empty()) {
        auto [da, db] = stack.back();
        stack.pop_back();
        int va = a.dart_base(da), vb = b.dart_base(db);
        if (a.is_boundary(va) != b.is_boundary(vb) || a.color[va] != b.color[vb]) return false;
        if (!a.is_boundary(va)) ok = ok && push(rot_step(a, da), rot_step(b, db));
        ok = ok && push(Web::dart_reverse(da), Web::dart_reverse(db));
    }
    if (!ok || (int)dmap.size() != 2 * a.E()) return false;
    for (auto [da, db] : dmap) {
        int va = a.dart_base(da), vb = b.dart_base(db);
        if (a.is_boundary(va) && va != vb) return false;
    }
    return true;
}

}  // namespace webs
}  // namespace scaffold

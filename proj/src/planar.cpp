#include "scaffold/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "scaffold/web.hpp"

namespace scaffold {

void PlanarDigraph::freeze(std::optional<int> outer_face) {
    if ((int)rot.size() != V) throw std::invalid_argument("PlanarDigraph: rot size != V");
    const int D = dart_count();
    std::vector<int> seen(D, 0);
    for (int v = 0; v < V; ++v)
        for (int d : rot[v]) {
            if (d < 0 || d >= D) throw std::invalid_argument("PlanarDigraph: bad dart id");
            if (dart_base(d) != v) throw std::invalid_argument("PlanarDigraph: dart at wrong vertex");
            if (seen[d]++) throw std::invalid_argument("PlanarDigraph: dart repeated");
        }
    for (int d = 0; d < D; ++d)
        if (!seen[d]) throw std::invalid_argument("PlanarDigraph: dart missing from rotation");

    faces.clear();
    face_of.assign(D, -1);
    for (int d0 = 0; d0 < D; ++d0) {
        if (face_of[d0] != -1) continue;
        std::vector<int> walk;
        int d = d0;
        while (face_of[d] == -1) {
            face_of[d] = (int)faces.size();
            walk.push_back(d);
            d = rot_prev(dart_reverse(d));  // keep the face on the left
        }
        faces.push_back(walk);
    }

    if (outer_face) {
        outer = *outer_face;
    } else if (faces.empty()) {
        outer = -1;  // single vertex
    } else {
        // Longest walk; on a tie prefer a face that is not an all-forward
        // directed cycle, so a lone directed triangle reads as white.
        auto all_forward = [&](int f) {
            for (int d : faces[f]) if (!dart_forward(d)) return false;
            return true;
        };
        outer = 0;
        for (int f = 1; f < (int)faces.size(); ++f) {
            if (faces[f].size() > faces[outer].size() ||
                (faces[f].size() == faces[outer].size() && all_forward(outer) && !all_forward(f)))
                outer = f;
        }
    }
}

int PlanarDigraph::rot_index(int d) const {
    const auto& r = rot[dart_base(d)];
    for (int i = 0; i < (int)r.size(); ++i)
        if (r[i] == d) return i;
    throw std::logic_error("rot_index: dart not found");
}

int PlanarDigraph::rot_next(int d) const {
    const auto& r = rot[dart_base(d)];
    return r[(rot_index(d) + 1) % r.size()];
}

int PlanarDigraph::rot_prev(int d) const {
    const auto& r = rot[dart_base(d)];
    return r[(rot_index(d) + (int)r.size() - 1) % r.size()];
}

std::vector<int> PlanarDigraph::boundary_walk() const {
    if (outer < 0) return {};
    std::vector<int> walk = faces[outer];
    std::reverse(walk.begin(), walk.end());
    for (int& d : walk) d = dart_reverse(d);
    return walk;
}

bool PlanarDigraph::on_boundary(int v) const {
    if (outer < 0) return true;
    for (int d : faces[outer])
        if (dart_base(d) == v) return true;
    return false;
}

std::vector<int> PlanarDigraph::triangle_faces() const {
    std::vector<int> out;
    for (int f = 0; f < (int)faces.size(); ++f) {
        if (f == outer || faces[f].size() != 3) continue;
        bool fwd = dart_forward(faces[f][0]);
        bool uniform = true;
        for (int d : faces[f]) uniform &= (dart_forward(d) == fwd);
        if (uniform) out.push_back(f);
    }
    return out;
}

std::array<int, 3> PlanarDigraph::triangle_vertices(int f) const {
    return {dart_base(faces[f][0]), dart_base(faces[f][1]), dart_base(faces[f][2])};
}

bool PlanarDigraph::triangle_ccw(int f) const { return dart_forward(faces[f][0]); }

int PlanarDigraph::triangles_at(int v) const {
    int cnt = 0;
    for (int f : triangle_faces()) {
        auto tv = triangle_vertices(f);
        if (tv[0] == v || tv[1] == v || tv[2] == v) ++cnt;
    }
    return cnt;
}

ValidationReport validate_cat0(const PlanarDigraph& g_in) {
    ValidationReport rep;
    auto fail = [&](const std::string& rule, const std::string& wit) {
        rep.issues.push_back({rule, wit});
    };
    PlanarDigraph g = g_in;
    if (!g.frozen() || g.edges.empty()) {
        try {
            g.freeze(g_in.frozen() && g_in.outer >= 0 ? std::optional<int>(g_in.outer)
                                                      : std::nullopt);
        } catch (const std::exception& e) {
            fail("rotation-system", e.what());
            return rep;
        }
    }
    if (g.V == 0) {
        fail("nonempty", "graph has no vertices");
        return rep;
    }
    if (g.V == 1 && g.edges.empty()) return rep;  // a single vertex is valid

    // connectivity, ignoring directions
    {
        std::vector<int> vis(g.V, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.rot[v]) {
                int w = g.dart_tip(d);
                if (!vis[w]) { vis[w] = 1; q.push(w); }
            }
        }
        for (int v = 0; v < g.V; ++v)
            if (!vis[v]) fail("connected", "vertex " + std::to_string(v) + " unreachable");
    }
    if (!rep.ok()) return rep;

    std::set<std::pair<int, int>> undirected;
    for (auto [t, h] : g.edges) {
        if (t == h) fail("no-loops", "loop at vertex " + std::to_string(t));
        if (!undirected.insert({std::min(t, h), std::max(t, h)}).second)
            fail("no-2-cycles-or-multi-edges",
                 "two edges between " + std::to_string(t) + " and " + std::to_string(h));
    }

    for (int f = 0; f < (int)g.faces.size(); ++f) {
        if (f == g.outer) continue;
        if (g.faces[f].size() != 3) {
            fail("interior-faces-triangles",
                 "interior face with " + std::to_string(g.faces[f].size()) + " sides");
            continue;
        }
        bool fwd = g.dart_forward(g.faces[f][0]);
        for (int d : g.faces[f])
            if (g.dart_forward(d) != fwd) {
                fail("interior-faces-oriented",
                     "mixed-orientation triangle at vertex " + std::to_string(g.dart_base(d)));
                break;
            }
    }

    for (int v = 0; v < g.V; ++v)
        if (!g.on_boundary(v) && g.degree(v) < 6)
            fail("interior-degree>=6",
                 "interior vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    std::vector<int> vtx_tri(g.V, 0);
    for (int f : g.triangle_faces())
        for (int d : g.faces[f]) vtx_tri[g.dart_base(d)] = 1;
    for (int v = 0; v < g.V; ++v)
        if (!vtx_tri[v]) fail("vertex-on-face", "vertex " + std::to_string(v) + " lies on no triangle");
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        bool on_tri = g.face_of[2 * e] != g.outer || g.face_of[2 * e + 1] != g.outer;
        if (!on_tri && !g.is_cut_edge(e))
            fail("edge-on-face", "edge " + std::to_string(e) + " lies on no triangle");
    }
    return rep;
}

void LabeledGraph::freeze() {
    if (!g.frozen()) g.freeze();
    const int V = g.V;
    delta.assign(V, std::vector<int>(V, cat0::kInfinity));
    comb.assign(V, std::vector<int>(V, cat0::kInfinity));
    const int back = k - 1;
    for (int s = 0; s < V; ++s) {
        delta[s][s] = 0;
        comb[s][s] = 0;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [t, h] : g.edges)
            for (int s = 0; s < V; ++s) {
                if (delta[s][t] + 1 < delta[s][h]) { delta[s][h] = delta[s][t] + 1; changed = true; }
                if (delta[s][h] + back < delta[s][t]) { delta[s][t] = delta[s][h] + back; changed = true; }
                if (comb[s][t] + 1 < comb[s][h]) { comb[s][h] = comb[s][t] + 1; changed = true; }
                if (comb[s][h] + 1 < comb[s][t]) { comb[s][t] = comb[s][h] + 1; changed = true; }
            }
    }
    for (int i = 1; i <= n(); ++i)
        if (z[i - 1] < 0 || z[i - 1] >= V)
            throw std::invalid_argument("LabeledGraph: label " + std::to_string(i) + " out of range");
}

namespace cat0 {

namespace {
const LabeledGraph& need_frozen(const LabeledGraph& g) {
    if (!g.frozen()) throw std::logic_error("LabeledGraph: call freeze() first");
    return g;
}
}  // namespace

int directed_distance(const LabeledGraph& g, int v, int w) {
    need_frozen(g);
    return g.delta[v][w];
}

int comb_distance(const LabeledGraph& g, int v, int w) {
    need_frozen(g);
    return g.comb[v][w];
}

std::vector<int> coloring(const LabeledGraph& g, int anchor) {
    const int V = g.g.V;
    std::vector<int> c(V, -1);
    c[anchor] = 0;
    std::queue<int> q;
    q.push(anchor);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.g.rot[v]) {
            int w = g.g.dart_tip(d);
            int want = g.g.dart_forward(d) ? (c[v] + 1) % g.k : (c[v] + g.k - 1) % g.k;
            if (c[w] == -1) {
                c[w] = want;
                q.push(w);
            } else if (c[w] != want) {
                throw std::domain_error("coloring: inconsistent orientation");
            }
        }
    }
    for (int v = 0; v < V; ++v)
        if (c[v] == -1) throw std::domain_error("coloring: graph not connected");
    return c;
}

FermatResult fermat_le(const LabeledGraph& g, const std::vector<int>& idx) {
    need_frozen(g);
    FermatResult out;
    long long best = -1;
    for (int x = 0; x < g.g.V; ++x) {
        long long s = 0;
        for (int i : idx) s += g.delta[x][g.z.at(i - 1)];
        if (best < 0 || s < best) {
            best = s;
            out.minimizers.clear();
        }
        if (s == best) out.minimizers.push_back(x);
    }
    out.sum = best;
    return out;
}

PlueckerVector pluecker_of_graph(const LabeledGraph& g) {
    need_frozen(g);
    PlueckerVector pi(g.n(), g.k);
    for (const auto& s : all_subsets(g.n(), g.k)) {
        auto r = fermat_le(g, s);
        pi.at(s) = Rational(-r.sum, g.k);
    }
    return pi;
}

PlueckerVector modified_pluecker(const LabeledGraph& g) {
    auto pi = pluecker_of_graph(g);
    auto c = coloring(g, g.z.at(0));
    LinealityShift x{std::vector<Rational>(g.n())};
    for (int i = 1; i <= g.n(); ++i) x.x[i - 1] = Rational(-c[g.z[i - 1]], g.k);
    auto out = trop::lineality_apply(pi, x);
    if (!out.is_integral()) throw std::domain_error("modified_pluecker: non-integral entries");
    return out;
}

std::vector<long long> barycenter_mu(const LabeledGraph& g, int v) {
    need_frozen(g);
    auto c = coloring(g, g.z.at(0));
    std::vector<long long> mu(g.n());
    for (int i = 1; i <= g.n(); ++i) {
        long long num = g.delta[v][g.z[i - 1]] + c[v] - c[g.z[i - 1]];
        if (((num % g.k) + g.k) % g.k != 0)
            throw std::logic_error("barycenter_mu: distance incompatible with coloring");
        mu[i - 1] = num / g.k - (num % g.k != 0 && num < 0 ? 1 : 0);
    }
    long long mn = *std::min_element(mu.begin(), mu.end());
    for (auto& m : mu) m -= mn;
    return mu;
}

int min_neighbor(const LabeledGraph& g, int v, int zv) {
    need_frozen(g);
    if (v == zv) throw std::domain_error("min_neighbor: v == z");
    int best = -1, cnt = 0;
    for (int d : g.g.rot[v]) {
        int u = g.g.dart_tip(d);
        if (best == -1 || g.delta[u][zv] < g.delta[best][zv]) {
            best = u;
            cnt = 1;
        } else if (g.delta[u][zv] == g.delta[best][zv]) {
            ++cnt;
        }
    }
    if (best == -1) throw std::domain_error("min_neighbor: isolated vertex");
    if (cnt != 1) throw std::domain_error("min_neighbor: minimizing neighbor not unique");
    int drop = g.delta[v][zv] - g.delta[best][zv];
    if (drop != 1 && drop != 2) throw std::domain_error("min_neighbor: drop not in {1,2}");
    return best;
}

std::vector<FElem> extended_fan(const LabeledGraph& g, int v) {
    std::vector<FElem> fan;
    const auto& r = g.g.rot[v];
    const int deg = (int)r.size();
    for (int i = 0; i < deg; ++i) {
        int d = r[i];
        fan.push_back(FElem{FElem::Real, g.g.dart_tip(d), 0});
        // the corner between d and the next dart lies in face_of(d)
        if (g.g.outer >= 0 && g.g.face_of[d] == g.g.outer) {
            if (g.g.dart_forward(d)) fan.push_back(FElem{FElem::VirtPlus, g.g.dart_tip(d), 0});
            int dn = r[(i + 1) % deg];
            if (g.g.dart_forward(dn)) fan.push_back(FElem{FElem::VirtMinus, g.g.dart_tip(dn), 0});
        }
    }
    return fan;
}

namespace {
std::vector<FElem> full_f_of(const LabeledGraph& g, int v) {
    // F(v): incoming neighbors plus virtual flanks, padded to size >= 3.
    std::vector<FElem> out;
    const auto& r = g.g.rot[v];
    const int deg = (int)r.size();
    for (int i = 0; i < deg; ++i) {
        int d = r[i];
        if (!g.g.dart_forward(d)) out.push_back(FElem{FElem::Real, g.g.dart_tip(d), 0});
        if (g.g.outer >= 0 && g.g.face_of[d] == g.g.outer) {
            if (g.g.dart_forward(d)) out.push_back(FElem{FElem::VirtPlus, g.g.dart_tip(d), 0});
            int dn = r[(i + 1) % deg];
            if (g.g.dart_forward(dn)) out.push_back(FElem{FElem::VirtMinus, g.g.dart_tip(dn), 0});
        }
    }
    int padi = 0;
    while ((int)out.size() < 3) out.push_back(FElem{FElem::Pad, v, padi++});
    return out;
}
}  // namespace

FSet f_set(const LabeledGraph& g, int v, int zv) {
    need_frozen(g);
    FSet out;
    if (v == zv) {
        out.full_fan = true;
        out.elems = full_f_of(g, v);
        return out;
    }
    int f = min_neighbor(g, v, zv);
    int dart_vf = -1;
    for (int d : g.g.rot[v])
        if (g.g.dart_tip(d) == f) dart_vf = d;
    if (dart_vf < 0) throw std::logic_error("f_set: neighbor dart missing");
    if (!g.g.dart_forward(dart_vf)) {
        out.elems = {FElem{FElem::Real, f, 0}};
        return out;
    }
    // outgoing minimizing edge: the two flanks of f in the extended fan
    auto fan = extended_fan(g, v);
    int pos = -1;
    for (int i = 0; i < (int)fan.size(); ++i)
        if (fan[i].kind == FElem::Real && fan[i].vertex == f) pos = i;
    if (pos < 0) throw std::logic_error("f_set: neighbor missing from fan");
    const int m = (int)fan.size();
    out.elems = {fan[(pos + m - 1) % m], fan[(pos + 1) % m]};
    return out;
}

bool is_parallel(const LabeledGraph& g, int v, int z1, int z2) {
    need_frozen(g);
    while (true) {
        if (z1 == z2 && z1 != v) return true;
        if (v == z1 || v == z2) return false;
        FSet f1 = f_set(g, v, z1), f2 = f_set(g, v, z2);
        if (!(f1 == f2)) return false;
        if (f1.elems.size() == 1) return true;
        int m1 = min_neighbor(g, v, z1);
        if (m1 != min_neighbor(g, v, z2)) return false;
        v = m1;  // follow the common witness path
    }
}

namespace {
bool has_sdr(const std::vector<std::vector<FElem>>& sets) {
    std::vector<FElem> chosen;
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == sets.size()) return true;
        for (const auto& e : sets[i]) {
            if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
            chosen.push_back(e);
            bool ok = self(self, i + 1);
            chosen.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, 0);
}
}  // namespace

bool is_focal(const LabeledGraph& g, int v, const std::array<int, 3>& labels) {
    need_frozen(g);
    std::array<int, 3> zs = {g.z.at(labels[0] - 1), g.z.at(labels[1] - 1), g.z.at(labels[2] - 1)};
    std::vector<std::vector<FElem>> sets;
    for (int zv : zs) sets.push_back(f_set(g, v, zv).elems);
    if (!has_sdr(sets)) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (is_parallel(g, v, zs[i], zs[j])) return false;
    return true;
}

std::vector<Triple> matroid_Mv(const LabeledGraph& g, int v) {
    std::vector<Triple> out;
    for (const auto& s : matroid_Mv_subsets(g, v)) out.emplace_back(s[0], s[1], s[2]);
    return out;
}

std::vector<Subset> matroid_Mv_subsets(const LabeledGraph& g, int v) {
    need_frozen(g);
    std::vector<Subset> out;
    for (const auto& s : all_subsets(g.n(), g.k)) {
        auto r = fermat_le(g, s);
        if (std::find(r.minimizers.begin(), r.minimizers.end(), v) != r.minimizers.end())
            out.push_back(s);
    }
    return out;
}

ScaffoldReport scaffold_check(const LabeledGraph& g) {
    need_frozen(g);
    ScaffoldReport rep;
    bool colorable = true;
    try {
        coloring(g, 0);
    } catch (const std::exception& e) {
        colorable = false;
        rep.notes.push_back(std::string("coloring: ") + e.what());
    }
    bool tropical = trop::check_tropical(pluecker_of_graph(g));
    if (!tropical) rep.notes.push_back("tropical Pluecker relation fails");
    rep.weak = tropical && colorable;
    if (!rep.weak) return rep;

    bool loopless = true;
    for (int v = 0; v < g.g.V; ++v) {
        std::set<int> covered;
        for (const auto& s : matroid_Mv_subsets(g, v)) covered.insert(s.begin(), s.end());
        if ((int)covered.size() != g.n()) {
            loopless = false;
            rep.notes.push_back("M_v has a loop at vertex " + std::to_string(v));
        }
    }
    std::set<std::vector<long long>> mus;
    bool injective = true;
    for (int v = 0; v < g.g.V; ++v)
        if (!mus.insert(barycenter_mu(g, v)).second) {
            injective = false;
            rep.notes.push_back("mu not injective at vertex " + std::to_string(v));
        }
    rep.strong = loopless && injective;
    return rep;
}

namespace {
bool ccw_labeled(const LabeledGraph& g) {
    auto walk = g.g.boundary_walk();
    const int L = (int)walk.size();
    if (L == 0) return true;  // single vertex
    for (int zi : g.z)
        if (!g.g.on_boundary(zi)) return false;
    std::vector<int> wv(L);
    for (int t = 0; t < L; ++t) wv[t] = g.g.dart_base(walk[t]);
    const int n = g.n();
    for (int start = 0; start < L; ++start) {
        if (wv[start] != g.z[0]) continue;
        int pos = 0;
        bool ok = true;
        for (int i = 2; i <= n && ok; ++i) {
            while (pos < L && wv[(start + pos) % L] != g.z[i - 1]) ++pos;
            if (pos >= L) ok = false;
        }
        if (ok) return true;
    }
    return false;
}
}  // namespace

ClassifyFlags classify(const LabeledGraph& g) {
    need_frozen(g);
    ClassifyFlags out;
    auto walk = g.g.boundary_walk();
    std::vector<int> wv;
    for (int d : walk) wv.push_back(g.g.dart_base(d));

    std::map<int, int> visits;
    for (int v : wv) ++visits[v];
    for (auto [v, c] : visits)
        if (c > 1) out.cut_vertices.push_back(v);
    out.simple = (g.g.V == 1) || out.cut_vertices.empty();

    out.boundary_ccw = true;
    for (int d : walk)
        if (!g.g.dart_forward(d)) out.boundary_ccw = false;

    out.ccw_labeled = ccw_labeled(g);

    for (int v = 0; v < g.g.V; ++v)
        if (g.g.on_boundary(v) && g.g.degree(v) == 2 && g.g.triangles_at(v) == 1)
            out.acute_vertices.push_back(v);

    bool acute_labeled = true;
    for (int v : out.acute_vertices)
        if (std::find(g.z.begin(), g.z.end(), v) == g.z.end()) acute_labeled = false;
    out.normal = (g.g.V == 1) || (out.ccw_labeled && out.boundary_ccw && acute_labeled);

    if (out.simple && g.g.V >= 3 && !g.g.edges.empty()) {
        long long total = 0;
        for (auto [v, c] : visits) total += std::max(4 - g.g.degree(v), 0);
        if (total < 6) throw std::logic_error("classify: Gauss-Bonnet violated on a simple graph");
    }

    out.cyclicless = out.normal && webs::graph_cyclic_less(g);
    return out;
}

LabeledGraph sum_graphs(const LabeledGraph& g1, int v1, const LabeledGraph& g2, int v2) {
    const int n = g1.n();
    if (g2.n() != n || g1.k != g2.k) throw std::invalid_argument("sum_graphs: shape mismatch");
    std::vector<int> block1, block2;
    for (int i = 1; i <= n; ++i) {
        if (g1.z[i - 1] == v1) block1.push_back(i);
        if (g2.z[i - 1] == v2) block2.push_back(i);
    }
    auto is_proper_cyclic_block = [&](const std::vector<int>& b) {
        if (b.empty() || (int)b.size() == n) return false;
        std::set<int> s(b.begin(), b.end());
        for (int start : b) {
            if (s.count((start + n - 2) % n + 1)) continue;  // not the cyclic start
            for (int t = 0; t < (int)b.size(); ++t)
                if (!s.count((start + t - 1) % n + 1)) return false;
            return true;
        }
        return false;
    };
    if (!is_proper_cyclic_block(block1) || !is_proper_cyclic_block(block2))
        throw std::invalid_argument("sum_graphs: label blocks are not proper cyclic intervals");
    std::set<int> uni(block1.begin(), block1.end());
    uni.insert(block2.begin(), block2.end());
    if ((int)uni.size() != n) throw std::invalid_argument("sum_graphs: blocks do not cover [n]");

    LabeledGraph out;
    out.k = g1.k;
    out.g.V = g1.g.V + g2.g.V - 1;
    auto map2 = [&](int v) { return v == v2 ? v1 : (v < v2 ? g1.g.V + v : g1.g.V + v - 1); };
    out.g.edges = g1.g.edges;
    for (auto [t, h] : g2.g.edges) out.g.add_edge(map2(t), map2(h));
    const int off = 2 * (int)g1.g.edges.size();

    out.g.rot.assign(out.g.V, {});
    for (int v = 0; v < g1.g.V; ++v)
        if (v != v1) out.g.rot[v] = g1.g.rot[v];
    for (int v = 0; v < g2.g.V; ++v)
        if (v != v2) {
            out.g.rot[map2(v)] = g2.g.rot[v];
            for (int& d : out.g.rot[map2(v)]) d += off;
        }
    // merged rotation at the wedge point: linearize each fan at an
    // outer-face corner and concatenate
    auto linearized = [&](const PlanarDigraph& g, int v) {
        const auto& r = g.rot[v];
        if (r.empty()) return r;
        int cut = 0;
        for (int i = 0; i < (int)r.size(); ++i)
            if (g.face_of[r[i]] == g.outer) cut = (i + 1) % (int)r.size();
        std::vector<int> lin;
        for (int i = 0; i < (int)r.size(); ++i) lin.push_back(r[(cut + i) % r.size()]);
        return lin;
    };
    auto r1 = linearized(g1.g, v1);
    auto r2 = linearized(g2.g, v2);
    for (int& d : r2) d += off;
    out.g.rot[v1] = r1;
    out.g.rot[v1].insert(out.g.rot[v1].end(), r2.begin(), r2.end());

    out.z.resize(n);
    std::set<int> b1(block1.begin(), block1.end());
    for (int i = 1; i <= n; ++i)
        out.z[i - 1] = b1.count(i) ? map2(g2.z[i - 1]) : g1.z[i - 1];
    out.g.freeze();
    out.freeze();
    return out;
}

bool labeled_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.g.V != b.g.V || a.n() != b.n() || a.g.edges.size() != b.g.edges.size()) return false;
    if (a.g.V == 1) return true;
    int ra = a.z.at(0), rb = b.z.at(0);
    if (a.g.degree(ra) != b.g.degree(rb)) return false;
    for (int d0b : b.g.rot[rb]) {
        std::map<int, int> dmap;
        std::vector<std::pair<int, int>> stack;
        bool ok = true;
        auto push = [&](int da, int db) {
            auto it = dmap.find(da);
            if (it != dmap.end()) return it->second == db;
            if (a.g.dart_forward(da) != b.g.dart_forward(db)) return false;
            dmap[da] = db;
            stack.push_back({da, db});
            return true;
        };
        ok = push(a.g.rot[ra][0], d0b);
        while (ok && !stack.empty()) {
            auto [da, db] = stack.back();
            stack.pop_back();
            ok = push(a.g.rot_next(da), b.g.rot_next(db)) &&
                 push(PlanarDigraph::dart_reverse(da), PlanarDigraph::dart_reverse(db));
        }
        if (!ok || (int)dmap.size() != a.g.dart_count()) continue;
        std::vector<int> vmap(a.g.V, -1);
        bool good = true;
        for (auto [da, db] : dmap) {
            int va = a.g.dart_base(da), vb = b.g.dart_base(db);
            if (vmap[va] == -1) vmap[va] = vb;
            else if (vmap[va] != vb) { good = false; break; }
        }
        if (!good) continue;
        for (int i = 0; i < a.n() && good; ++i)
            if (vmap[a.z[i]] != b.z[i]) good = false;
        if (good) return true;
    }
    return false;
}

}  // namespace cat0
}  // namespace scaffold

#include "scaffold/nctab.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scaffold {
namespace nct {

namespace {
// Arcs (x < y), (x' < y') cross iff their endpoints interleave strictly.
bool arcs_cross(int x, int y, int xp, int yp) {
    return (x < xp && xp < y && y < yp) || (xp < x && x < yp && yp < y);
}
}  // namespace

bool is_noncrossing_pair(const Triple& s, const Triple& t, int) {
    if (arcs_cross(s.a, s.b, t.a, t.b)) return false;
    if (arcs_cross(s.b, s.c, t.b, t.c)) return false;
    if (s.b == t.b && arcs_cross(s.a, s.c, t.a, t.c)) return false;
    return true;
}

bool is_noncrossing(const NCTableau& t) {
    for (size_t i = 0; i < t.triples.size(); ++i)
        for (size_t j = i + 1; j < t.triples.size(); ++j)
            if (!is_noncrossing_pair(t.triples[i], t.triples[j], t.n)) return false;
    return true;
}

bool is_cyclicless(const NCTableau& t) {
    for (const auto& j : t.triples)
        if (is_cyclic_triple(j, t.n)) return false;
    return true;
}

StandardizedTab standardize_tab(const NCTableau& t) {
    if (!is_noncrossing(t)) throw std::domain_error("standardize_tab: tableau is crossing");
    const int r = t.weight();
    // role instances per letter: rights first (desc middle, then asc left),
    // middles, lefts (desc middle, then asc right)
    struct Slot {
        int kind;  // 0 = right, 1 = middle, 2 = left
        int tri;
        long long key1, key2;
    };
    std::vector<std::vector<Slot>> per_letter(t.n + 1);
    for (int i = 0; i < r; ++i) {
        const auto& J = t.triples[i];
        per_letter[J.a].push_back({2, i, -J.b, J.c});
        per_letter[J.b].push_back({1, i, 0, 0});
        per_letter[J.c].push_back({0, i, -J.b, J.a});
    }
    StandardizedTab out;
    out.tab.n = 3 * r;
    out.labels.assign(3 * r, 0);
    std::vector<int> left_pos(r), right_pos(r);
    std::vector<std::vector<int>> mid_pos_of_letter(t.n + 1);
    int pos = 0;
    for (int l = 1; l <= t.n; ++l) {
        auto slots = per_letter[l];
        std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
            if (a.kind != b.kind) return a.kind < b.kind;
            if (a.key1 != b.key1) return a.key1 < b.key1;
            return a.key2 < b.key2;
        });
        for (const auto& s : slots) {
            ++pos;
            out.labels[pos - 1] = l;
            if (s.kind == 2) left_pos[s.tri] = pos;
            else if (s.kind == 0) right_pos[s.tri] = pos;
            else mid_pos_of_letter[l].push_back(pos);
        }
    }
    // regroup per middle letter: sorted lefts and rights pair up in order,
    // middles in reverse
    for (int l = 1; l <= t.n; ++l) {
        std::vector<int> tris;
        for (int i = 0; i < r; ++i)
            if (t.triples[i].b == l) tris.push_back(i);
        if (tris.empty()) continue;
        std::vector<int> lefts, rights;
        for (int i : tris) {
            lefts.push_back(left_pos[i]);
            rights.push_back(right_pos[i]);
        }
        std::sort(lefts.begin(), lefts.end());
        std::sort(rights.begin(), rights.end());
        auto mids = mid_pos_of_letter[l];
        std::sort(mids.rbegin(), mids.rend());
        for (size_t i = 0; i < tris.size(); ++i)
            out.tab.triples.emplace_back(lefts[i], mids[i], rights[i]);
    }
    std::sort(out.tab.triples.begin(), out.tab.triples.end());
    if (!is_noncrossing(out.tab)) throw std::logic_error("standardize_tab: result is crossing");
    return out;
}

NCTableau destandardize(const NCTableau& std_tab, const std::vector<int>& content) {
    const int n = (int)content.size();
    std::vector<int> iota;  // position -> letter
    for (int l = 1; l <= n; ++l)
        for (int c = 0; c < content[l - 1]; ++c) iota.push_back(l);
    if ((int)iota.size() != std_tab.n)
        throw std::invalid_argument("destandardize: content incompatible with tableau size");
    NCTableau out;
    out.n = n;
    for (int l = 1; l <= n; ++l) {
        // triples of the standard tableau whose middles land at letter l
        std::vector<Triple> tris;
        for (const auto& J : std_tab.triples)
            if (iota.at(J.b - 1) == l) tris.push_back(J);
        if (tris.empty()) continue;
        std::vector<int> lefts, rights;
        for (const auto& J : tris) {
            lefts.push_back(J.a);
            rights.push_back(J.c);
        }
        std::sort(lefts.begin(), lefts.end());
        std::sort(rights.rbegin(), rights.rend());  // reversed pairing
        for (size_t i = 0; i < tris.size(); ++i)
            out.triples.emplace_back(iota.at(lefts[i] - 1), l, iota.at(rights[i] - 1));
    }
    std::sort(out.triples.begin(), out.triples.end());
    if (!is_noncrossing(out)) throw std::domain_error("destandardize: result is crossing");
    return out;
}

SSYT nc_to_ssyt(const NCTableau& t) {
    SSYT out;
    for (const auto& J : t.triples) {
        out.row1.push_back(J.a);
        out.row2.push_back(J.b);
        out.row3.push_back(J.c);
    }
    std::sort(out.row1.begin(), out.row1.end());
    std::sort(out.row2.begin(), out.row2.end());
    std::sort(out.row3.begin(), out.row3.end());
    for (int i = 0; i < out.r(); ++i)
        if (!(out.row1[i] < out.row2[i] && out.row2[i] < out.row3[i]))
            throw std::logic_error("nc_to_ssyt: columns not strictly increasing");
    return out;
}

NCTableau ssyt_to_nc(const SSYT& t, int n) {
    const int r = t.r();
    if ((int)t.row2.size() != r || (int)t.row3.size() != r)
        throw std::invalid_argument("ssyt_to_nc: ragged rows");
    for (int i = 0; i + 1 < r; ++i)
        if (t.row1[i] > t.row1[i + 1] || t.row2[i] > t.row2[i + 1] || t.row3[i] > t.row3[i + 1])
            throw std::invalid_argument("ssyt_to_nc: rows not weakly increasing");
    for (int i = 0; i < r; ++i)
        if (!(t.row1[i] < t.row2[i] && t.row2[i] < t.row3[i]))
            throw std::invalid_argument("ssyt_to_nc: columns not strictly increasing");

    // connect each letter of a row to the rightmost unused smaller letter in
    // the row above
    auto connect = [](const std::vector<int>& above, const std::vector<int>& row) {
        std::vector<int> match(row.size(), -1);
        std::vector<bool> used(above.size(), false);
        for (size_t i = 0; i < row.size(); ++i) {
            int best = -1;
            for (size_t j = 0; j < above.size(); ++j)
                if (!used[j] && above[j] < row[i]) best = (int)j;
            if (best < 0) throw std::invalid_argument("ssyt_to_nc: no partner available");
            used[best] = true;
            match[i] = best;
        }
        return match;
    };
    auto m21 = connect(t.row1, t.row2);
    auto m32 = connect(t.row2, t.row3);
    // regroup per middle value: only the letter multisets matter, and within
    // a fixed middle the noncrossing pairing nests (lefts ascending against
    // rights descending)
    NCTableau out;
    out.n = n;
    std::map<int, std::vector<int>> lefts, rights;
    for (int i = 0; i < r; ++i) lefts[t.row2[i]].push_back(t.row1[m21[i]]);
    for (int i = 0; i < r; ++i) rights[t.row2[m32[i]]].push_back(t.row3[i]);
    for (auto& [b, ls] : lefts) {
        auto rs = rights.at(b);
        if (ls.size() != rs.size()) throw std::logic_error("ssyt_to_nc: group size mismatch");
        std::sort(ls.begin(), ls.end());
        std::sort(rs.rbegin(), rs.rend());
        for (size_t i = 0; i < ls.size(); ++i) out.triples.emplace_back(ls[i], b, rs[i]);
    }
    std::sort(out.triples.begin(), out.triples.end());
    if (!is_noncrossing(out)) throw std::logic_error("ssyt_to_nc: result is crossing");
    return out;
}

namespace {

// Standard-web construction from a standard tableau on [3r] via m-diagram
// crossing resolution; boundary vertices are the positions.
Web standard_web(const NCTableau& k) {
    const int n = k.n;
    const int r = k.weight();
    Web w;
    w.nb = n;
    w.color.assign(n, 0);
    w.rot.assign(n, {});

    std::vector<int> ynode(r);
    for (int s = 0; s < r; ++s) {
        ynode[s] = w.V();
        w.color.push_back(1);
        w.rot.push_back({});
    }
    // crossings of the left arc (a_s, b_s) with the right arc (b_t, c_t):
    //   exit type: b_t < a_s < c_t < b_s (the left arc leaves the other)
    //   entry type: a_s < b_t < b_s < c_t (the left arc enters the other)
    struct Cross {
        int wnode, bnode;
        bool entry;
    };
    std::map<std::pair<int, int>, Cross> cross;  // (s, t)
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) {
            const auto& S = k.triples[s];
            const auto& T = k.triples[t];
            bool exit_type = T.b < S.a && S.a < T.c && T.c < S.b;
            bool entry_type = S.a < T.b && T.b < S.b && S.b < T.c;
            if (!exit_type && !entry_type) continue;
            Cross c;
            c.entry = entry_type;
            c.wnode = w.V();
            w.color.push_back(1);
            w.rot.push_back({});
            c.bnode = w.V();
            w.color.push_back(0);
            w.rot.push_back({});
            cross[{s, t}] = c;
        }

    // curve sequences; crossings ordered by position along each arc
    std::vector<std::vector<int>> lcurve(r), rcurve(r);
    for (int s = 0; s < r; ++s) {
        const auto& S = k.triples[s];
        lcurve[s].push_back(S.a - 1);  // boundary node
        // exit-type crossings first (innermost arcs first), then entry-type
        // (outermost first)
        std::vector<std::pair<int, int>> crossed;  // (sort key, t)
        for (int t = 0; t < r; ++t) {
            auto it = cross.find({s, t});
            if (it == cross.end()) continue;
            crossed.push_back({it->second.entry ? k.n + k.triples[t].b : k.triples[t].c, t});
        }
        std::sort(crossed.begin(), crossed.end());
        for (auto [key, t] : crossed) {
            lcurve[s].push_back(cross[{s, t}].wnode);
            lcurve[s].push_back(cross[{s, t}].bnode);
        }
        lcurve[s].push_back(ynode[s]);

        rcurve[s].push_back(ynode[s]);
        // entry-type crossings first (innermost left arcs first = largest
        // a_u), then exit-type (outermost first = smallest a_u)
        std::vector<std::pair<int, int>> crossed2;  // (sort key, u)
        for (int u = 0; u < r; ++u) {
            auto it = cross.find({u, s});
            if (it == cross.end()) continue;
            int au = k.triples[u].a;
            crossed2.push_back({it->second.entry ? -au : k.n + au, u});
        }
        std::sort(crossed2.begin(), crossed2.end());
        for (auto [key, u] : crossed2) {
            rcurve[s].push_back(cross[{u, s}].bnode);
            rcurve[s].push_back(cross[{u, s}].wnode);
        }
        rcurve[s].push_back(S.c - 1);
    }

    // edges along the curves and the stems
    std::map<std::pair<int, int>, int> edge_of;
    auto link = [&](int u, int v) {
        auto it = edge_of.find({u, v});
        if (it != edge_of.end()) return it->second / 2;  // both curves share the W-B edge
        int e = w.add_edge(u, v);
        edge_of[{u, v}] = 2 * e;
        edge_of[{v, u}] = 2 * e + 1;
        return e;
    };
    for (int s = 0; s < r; ++s) {
        for (size_t i = 0; i + 1 < lcurve[s].size(); ++i) link(lcurve[s][i], lcurve[s][i + 1]);
        for (size_t i = 0; i + 1 < rcurve[s].size(); ++i) link(rcurve[s][i], rcurve[s][i + 1]);
        link(ynode[s], k.triples[s].b - 1);  // stem
    }

    // rotations: Y = [stem, right-arc, left-arc] counterclockwise; crossing
    // white = [up to black, back along the left arc, on along the right
    // arc]; crossing black = [down to white, on along the left arc, back
    // along the right arc]
    for (int s = 0; s < r; ++s) {
        int y = ynode[s];
        int lprev = lcurve[s][lcurve[s].size() - 2];
        int rnext = rcurve[s][1];
        w.rot[y] = {edge_of.at({y, k.triples[s].b - 1}), edge_of.at({y, rnext}),
                    edge_of.at({y, lprev})};
    }
    for (auto& [key, c] : cross) {
        auto [s, t] = key;
        const auto& L = lcurve[s];
        const auto& R = rcurve[t];
        int li = -1, ri = -1;
        for (size_t i = 0; i < L.size(); ++i)
            if (L[i] == c.wnode) li = (int)i;
        for (size_t i = 0; i < R.size(); ++i)
            if (R[i] == c.wnode) ri = (int)i;
        int lbi = -1, rbi = -1;
        for (size_t i = 0; i < L.size(); ++i)
            if (L[i] == c.bnode) lbi = (int)i;
        for (size_t i = 0; i < R.size(); ++i)
            if (R[i] == c.bnode) rbi = (int)i;
        // white joins the a_s-side of L and the c_t-side of R, black the two
        // Y-sides; the planar order flips between exit and entry crossings
        int w_back = edge_of.at({c.wnode, L[li - 1]});
        int w_on = edge_of.at({c.wnode, R[ri + 1]});
        int b_on = edge_of.at({c.bnode, L[lbi + 1]});
        int b_back = edge_of.at({c.bnode, R[rbi - 1]});
        int wb = edge_of.at({c.wnode, c.bnode});
        int bw = edge_of.at({c.bnode, c.wnode});
        if (!c.entry) {
            w.rot[c.wnode] = {wb, w_back, w_on};
            w.rot[c.bnode] = {bw, b_on, b_back};
        } else {
            w.rot[c.wnode] = {wb, w_on, w_back};
            w.rot[c.bnode] = {bw, b_back, b_on};
        }
    }
    for (int b = 0; b < n; ++b) {
        std::vector<int> darts;
        for (int d = 0; d < 2 * w.E(); ++d)
            if (w.dart_base(d) == b) darts.push_back(d);
        if (darts.size() != 1) throw std::logic_error("standard_web: boundary valence != 1");
        w.rot[b] = darts;
    }
    return w;
}

}  // namespace

Web tymoczko_web(const NCTableau& t) {
    if (!is_noncrossing(t)) throw std::domain_error("tymoczko_web: tableau is crossing");
    auto std_t = standardize_tab(t);
    Web sw = standard_web(std_t.tab);
    // merge boundary blocks per the label map and insert degree-0 vertices
    // for unused letters
    Web w;
    w.nb = t.n;
    w.color.assign(t.n, 0);
    w.rot.assign(t.n, {});
    std::vector<int> node_map(sw.V(), -1);
    for (int v = sw.nb; v < sw.V(); ++v) {
        node_map[v] = w.V();
        w.color.push_back(sw.color[v]);
        w.rot.push_back({});
    }
    for (int p = 0; p < sw.nb; ++p) node_map[p] = std_t.labels[p] - 1;
    w.edges.reserve(sw.E());
    for (auto [u, v] : sw.edges) w.add_edge(node_map[u], node_map[v]);
    for (int v = sw.nb; v < sw.V(); ++v) w.rot[node_map[v]] = sw.rot[v];
    // merged boundary rotation: descending position order within each block
    for (int p = sw.nb - 1; p >= 0; --p) {
        int b = node_map[p];
        for (int d : sw.rot[p]) w.rot[b].push_back(d);
    }
    return w;
}

TMatrix t_sum(const NCTableau& t) {
    TMatrix m(t.n);
    for (const auto& j : t.triples) m += trop::t_vector(j, t.n);
    return m;
}

namespace {
void decompose_rec(const TMatrix& residual, const std::vector<Triple>& cands,
                   const std::vector<TMatrix>& tvecs, size_t start, int n,
                   std::vector<Triple>& chosen, std::vector<NCTableau>& found, size_t max_found) {
    if (found.size() >= max_found) return;
    if (residual.is_zero()) {
        NCTableau t;
        t.n = n;
        t.triples = chosen;
        std::sort(t.triples.begin(), t.triples.end());
        found.push_back(t);
        return;
    }
    for (size_t i = start; i < cands.size(); ++i) {
        const auto& tv = tvecs[i];
        bool fits = true;
        for (int s = 0; s < n - 3 && fits; ++s)
            fits = residual.row1[s] >= tv.row1[s] && residual.row2[s] >= tv.row2[s];
        if (!fits) continue;
        bool compatible = true;
        for (const auto& c : chosen)
            if (!is_noncrossing_pair(c, cands[i], n)) { compatible = false; break; }
        if (!compatible) continue;
        chosen.push_back(cands[i]);
        decompose_rec(residual - tv, cands, tvecs, i, n, chosen, found, max_found);
        chosen.pop_back();
        if (found.size() >= max_found) return;
    }
}
}  // namespace

NCTableau nc_decompose(const TMatrix& m, bool check_unique) {
    if (!m.nonnegative())
        throw std::domain_error("nc_decompose: matrix not in the positive cone");
    std::vector<Triple> cands;
    for (const auto& j : noncyclic_triples(m.n)) cands.push_back(j);
    // largest right endpoint first, then smallest left endpoint
    std::sort(cands.begin(), cands.end(), [](const Triple& x, const Triple& y) {
        if (x.c != y.c) return x.c > y.c;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<TMatrix> tvecs;
    for (const auto& j : cands) tvecs.push_back(trop::t_vector(j, m.n));
    std::vector<Triple> chosen;
    std::vector<NCTableau> found;
    decompose_rec(m, cands, tvecs, 0, m.n, chosen, found, check_unique ? 2 : 1);
    if (found.empty())
        throw std::domain_error("nc_decompose: no decomposition (not in the positive cone)");
    if (check_unique && found.size() > 1)
        throw std::domain_error("nc_decompose: decomposition not unique");
    return found.front();
}

std::vector<NCTableau> enumerate_tableaux(int n, int weight, bool cyclicless_only) {
    std::vector<Triple> cands;
    for (const auto& j : all_triples(n))
        if (!cyclicless_only || !is_cyclic_triple(j, n)) cands.push_back(j);
    std::vector<NCTableau> out;
    std::vector<Triple> cur;
    auto rec = [&](auto&& self, size_t start, int left) -> void {
        if (left == 0) {
            NCTableau t;
            t.n = n;
            t.triples = cur;
            std::sort(t.triples.begin(), t.triples.end());
            out.push_back(t);
            return;
        }
        for (size_t i = start; i < cands.size(); ++i) {
            bool ok = true;
            for (const auto& c : cur)
                if (!is_noncrossing_pair(c, cands[i], n)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(cands[i]);
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, weight);
    return out;
}

}  // namespace nct
}  // namespace scaffold

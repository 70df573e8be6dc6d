#include "scaffold/plucker.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace scaffold {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        long long den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        long long p = std::stoll(head.empty() || head == "-" ? head + "0" : head);
        long long frac = tail.empty() ? 0 : std::stoll(tail);
        bool neg = !head.empty() && head[0] == '-';
        return Rational(p * den + (neg ? -frac : frac), den);
    }
    return Rational(std::stoll(s));
}

PlueckerVector& PlueckerVector::operator+=(const PlueckerVector& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("PlueckerVector: shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}
PlueckerVector& PlueckerVector::operator-=(const PlueckerVector& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("PlueckerVector: shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}
PlueckerVector& PlueckerVector::operator*=(const Rational& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

TMatrix& TMatrix::operator+=(const TMatrix& o) {
    if (n != o.n) throw std::invalid_argument("TMatrix: shape mismatch");
    for (size_t i = 0; i < row1.size(); ++i) { row1[i] += o.row1[i]; row2[i] += o.row2[i]; }
    return *this;
}
TMatrix& TMatrix::operator-=(const TMatrix& o) {
    if (n != o.n) throw std::invalid_argument("TMatrix: shape mismatch");
    for (size_t i = 0; i < row1.size(); ++i) { row1[i] -= o.row1[i]; row2[i] -= o.row2[i]; }
    return *this;
}

namespace trop {

bool check_tropical(const PlueckerVector& pi) {
    const int n = pi.n(), k = pi.k();
    if (n < k + 2) throw std::domain_error("check_tropical: need n >= k+2");
    for (const auto& s : all_subsets(n, k - 2)) {
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (std::find(s.begin(), s.end(), i) == s.end()) rest.push_back(i);
        const int m = (int)rest.size();
        for (int ia = 0; ia < m; ++ia)
            for (int ib = ia + 1; ib < m; ++ib)
                for (int ic = ib + 1; ic < m; ++ic)
                    for (int id = ic + 1; id < m; ++id) {
                        int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
                        auto val = [&](int x, int y) {
                            Subset u = s;
                            u.push_back(x); u.push_back(y);
                            std::sort(u.begin(), u.end());
                            return pi.at(u);
                        };
                        Rational t1 = val(a, b) + val(c, d);
                        Rational t2 = val(a, c) + val(b, d);
                        Rational t3 = val(a, d) + val(b, c);
                        Rational mn = std::min({t1, t2, t3});
                        int hits = (t1 == mn) + (t2 == mn) + (t3 == mn);
                        if (hits < 2) return false;
                    }
    }
    return true;
}

bool check_positive(const PlueckerVector& pi) {
    const int n = pi.n(), k = pi.k();
    if (k != 3) throw std::domain_error("check_positive: k must be 3");
    if (n < k + 2) throw std::domain_error("check_positive: need n >= k+2");
    for (int s = 1; s <= n; ++s)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d) {
                        if (s == a || s == b || s == c || s == d) continue;
                        auto val = [&](int x, int y) { return pi.at(Triple(s, x, y)); };
                        Rational lhs = val(a, c) + val(b, d);
                        Rational rhs = std::min(val(a, b) + val(c, d), val(a, d) + val(b, c));
                        if (lhs != rhs) return false;
                    }
    return true;
}

PlueckerVector lineality_apply(const PlueckerVector& pi, const LinealityShift& x) {
    if ((int)x.x.size() != pi.n()) throw std::invalid_argument("lineality_apply: |x| != n");
    PlueckerVector out(pi.n(), pi.k());
    auto subs = all_subsets(pi.n(), pi.k());
    for (const auto& s : subs) {
        Rational v = pi.at(s);
        for (int i : s) v -= x.x[i - 1];
        out.at(s) = v;
    }
    return out;
}

std::vector<int> hypersimplex_distances(const Subset& j, int n) {
    const int k = (int)j.size();
    const long long total = binom(n, k);
    std::vector<int> dist(total, -1);
    std::deque<Subset> queue;
    dist[subset_rank(j)] = 0;
    queue.push_back(j);
    while (!queue.empty()) {
        Subset cur = queue.front();
        queue.pop_front();
        int d = dist[subset_rank(cur)];
        for (int idx = 0; idx < k; ++idx) {
            int x = cur[idx];
            int y = (x == 1) ? n : x - 1;  // step e_y - e_x replaces x by y = x-1 (mod n)
            if (std::find(cur.begin(), cur.end(), y) != cur.end()) continue;
            Subset nxt = cur;
            nxt[idx] = y;
            std::sort(nxt.begin(), nxt.end());
            long long r = subset_rank(nxt);
            if (dist[r] == -1) {
                dist[r] = d + 1;
                queue.push_back(nxt);
            }
        }
    }
    return dist;
}

namespace {
std::mutex g_h_mutex;
std::map<std::pair<int, long long>, PlueckerVector> g_h_cache;  // (n, rank(J)) -> h_J
}  // namespace

PlueckerVector planar_basis_h(const Triple& j, int n) {
    if (j.c > n) throw std::invalid_argument("planar_basis_h: J not a subset of [n]");
    std::lock_guard<std::mutex> lock(g_h_mutex);
    auto key = std::make_pair(n, triple_rank(j));
    auto it = g_h_cache.find(key);
    if (it != g_h_cache.end()) return it->second;
    auto dist = hypersimplex_distances({j.a, j.b, j.c}, n);
    PlueckerVector h(n, 3);
    for (long long r = 0; r < (long long)dist.size(); ++r) {
        if (dist[r] < 0) throw std::logic_error("planar_basis_h: unreachable vertex");
        h.raw()[r] = Rational(dist[r], n);
    }
    g_h_cache.emplace(key, h);
    return h;
}

void freeze_tables(int n) {
    for (const auto& t : all_triples(n)) planar_basis_h(t, n);
}

std::vector<std::pair<Triple, int>> cubical_array(const Triple& j, int n) {
    if (is_cyclic_triple(j, n)) throw std::domain_error("cubical_array: J is cyclic");
    auto next = [n](int i) { return i % n + 1; };
    std::vector<int> ends;  // cyclic endpoints of J: j with j+1 not in J
    for (int x : j.arr())
        if (!j.contains(next(x))) ends.push_back(x);
    std::vector<std::pair<Triple, int>> out;
    const int m = (int)ends.size();
    const auto base = j.arr();
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::set<int> cur(base.begin(), base.end());
        int bits = 0;
        for (int t = 0; t < m; ++t)
            if (mask & (1 << t)) {
                cur.erase(ends[t]);
                cur.insert(next(ends[t]));
                ++bits;
            }
        auto it = cur.begin();
        int a = *it++, b = *it++, c = *it;
        out.emplace_back(Triple(a, b, c), (bits % 2 == 0) ? -1 : +1);
    }
    return out;
}

Rational cross_ratio_u(const Triple& j, const PlueckerVector& pi) {
    Rational u;
    for (const auto& [t, sign] : cubical_array(j, pi.n()))
        u += Rational(sign) * pi.at(t);
    return u;
}

CanonicalForm canonical_form(const PlueckerVector& pi) {
    CanonicalForm cf;
    for (const auto& j : noncyclic_triples(pi.n())) {
        Rational u = cross_ratio_u(j, pi);
        if (!(u == Rational(0))) cf[j] = u;
    }
    return cf;
}

PlueckerVector from_h_expansion(const CanonicalForm& coeffs, int n) {
    PlueckerVector out(n, 3);
    for (const auto& [j, c] : coeffs) out += c * planar_basis_h(j, n);
    return out;
}

TMatrix t_vector_raw(const Triple& j, int n) {
    TMatrix t(n);
    for (int s = j.a; s <= j.b - 2; ++s) t.row1.at(s - 1) = 1;
    for (int s = j.b - 1; s <= j.c - 3; ++s) t.row2.at(s - 1) = 1;
    return t;
}

TMatrix t_vector(const Triple& j, int n) {
    if (j.c > n) throw std::invalid_argument("t_vector: J not a subset of [n]");
    if (is_cyclic_triple(j, n)) return TMatrix(n);
    return t_vector_raw(j, n);
}

TMatrix psi_project(const PlueckerVector& pi) {
    if (pi.k() != 3) throw std::domain_error("psi_project: k must be 3");
    TMatrix out(pi.n());
    for (const auto& j : noncyclic_triples(pi.n())) {
        Rational u = cross_ratio_u(j, pi);
        if (u == Rational(0)) continue;
        long long c = u.as_integer();
        TMatrix t = t_vector(j, pi.n());
        for (int s = 0; s < pi.n() - 3; ++s) {
            out.row1[s] += c * t.row1[s];
            out.row2[s] += c * t.row2[s];
        }
    }
    return out;
}

namespace {
// iota(i) = cyclic start of the fiber labels^{-1}(i); validates that labels
// is a weakly monotone cyclic surjection [n'] -> [n].
std::vector<int> block_starts(const std::vector<int>& labels, int n) {
    const int np = (int)labels.size();
    std::vector<int> start(n + 1, 0);
    int changes = 0;
    for (int a = 1; a <= np; ++a) {
        int prev = labels[(a + np - 2) % np];
        int cur = labels[a - 1];
        if (cur < 1 || cur > n) throw std::invalid_argument("relabel_expand: label out of range");
        if (cur != prev) {
            ++changes;
            if (start[cur]) throw std::invalid_argument("relabel_expand: labels not cyclically monotone");
            start[cur] = a;
        }
    }
    if (n == 1) {
        if (changes != 0) throw std::invalid_argument("relabel_expand: bad labels");
        start[1] = 1;
        return start;
    }
    if (changes != n) throw std::invalid_argument("relabel_expand: labels not a monotone surjection");
    // blocks must appear in cyclic order 1..n
    int a = start[1];
    for (int i = 1; i <= n; ++i) {
        if (start[i] == 0) throw std::invalid_argument("relabel_expand: labels not surjective");
        int expect = start[i % n + 1];
        while (labels[a - 1] == i) {
            a = a % np + 1;
            if (a == start[1] && i != n) throw std::invalid_argument("relabel_expand: labels out of order");
            if (a == expect) break;
        }
        if (a != expect) throw std::invalid_argument("relabel_expand: labels out of cyclic order");
    }
    return start;
}
}  // namespace

PlueckerVector relabel_expand(const PlueckerVector& pi, const std::vector<int>& labels) {
    const int np = pi.n();
    if ((int)labels.size() != np) throw std::invalid_argument("relabel_expand: |labels| != n'");
    int n = *std::max_element(labels.begin(), labels.end());
    auto start = block_starts(labels, n);
    PlueckerVector out(n, pi.k());
    for (const auto& s : all_subsets(n, pi.k())) {
        Subset lifted;
        for (int i : s) lifted.push_back(start[i]);
        std::sort(lifted.begin(), lifted.end());
        out.at(s) = pi.at(lifted);
    }
    return out;
}

PlueckerVector normalize_min_zero(const PlueckerVector& pi) {
    Rational mn = pi.raw().front();
    for (const auto& e : pi.raw()) mn = std::min(mn, e);
    PlueckerVector out = pi;
    for (auto& e : out.raw()) e -= mn;
    return out;
}

}  // namespace trop
}  // namespace scaffold

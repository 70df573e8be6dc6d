#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scaffold {

/// A k-subset of [n] with 1-based, strictly increasing entries.
using Subset = std::vector<int>;

/// 3-subset of [n], stored sorted, 1-based.
struct Triple {
    int a, b, c;

    Triple() : a(0), b(0), c(0) {}
    Triple(int x, int y, int z) : a(x), b(y), c(z) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        if (a == b || b == c) throw std::invalid_argument("Triple: repeated index");
    }

    std::array<int, 3> arr() const { return {a, b, c}; }
    bool contains(int i) const { return i == a || i == b || i == c; }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;

    std::string str() const {
        return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    }
};

/// True iff J is a cyclic interval {a, a+1, a+2} mod n.
inline bool is_cyclic_triple(const Triple& j, int n) {
    auto next = [n](int i) { return i % n + 1; };
    // As a set, J is cyclic iff some rotation of it is (x, x+1, x+2).
    for (int x : j.arr())
        if (j.contains(next(x)) && j.contains(next(next(x)))) return true;
    return false;
}

/// Cyclic interval [a, b] in [n] (1-based, inclusive, may wrap).
inline std::vector<int> cyclic_interval(int a, int b, int n) {
    std::vector<int> out;
    int i = a;
    out.push_back(i);
    while (i != b) {
        i = i % n + 1;
        out.push_back(i);
        if ((int)out.size() > n) throw std::logic_error("cyclic_interval: bad endpoints");
    }
    return out;
}

inline bool in_cyclic_interval(int x, int a, int b, int n) {
    int i = a;
    while (true) {
        if (i == x) return true;
        if (i == b) return false;
        i = i % n + 1;
    }
}

/// Binomial coefficients, small range.
inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Colexicographic rank of a sorted 1-based k-subset.
inline long long subset_rank(const Subset& s) {
    long long r = 0;
    for (int i = 0; i < (int)s.size(); ++i) r += binom(s[i] - 1, i + 1);
    return r;
}

inline long long triple_rank(const Triple& t) {
    return binom(t.a - 1, 1) + binom(t.b - 1, 2) + binom(t.c - 1, 3);
}

/// All k-subsets of [n] in colex order (rank order for subset_rank).
inline std::vector<Subset> all_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k > n) return out;
    Subset s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
        out.push_back(s);
        int i = 0;
        while (i < k) {
            int lim = (i + 1 < k) ? s[i + 1] - 1 : n;
            if (s[i] < lim) { ++s[i]; for (int j = 0; j < i; ++j) s[j] = j + 1; break; }
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

inline std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (const auto& s : all_subsets(n, 3)) out.emplace_back(s[0], s[1], s[2]);
    return out;
}

inline std::vector<Triple> noncyclic_triples(int n) {
    std::vector<Triple> out;
    for (const auto& t : all_triples(n))
        if (!is_cyclic_triple(t, n)) out.push_back(t);
    return out;
}

}  // namespace scaffold

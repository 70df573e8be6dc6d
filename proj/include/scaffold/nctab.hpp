#pragma once

#include <optional>
#include <vector>

#include "scaffold/plucker.hpp"
#include "scaffold/web.hpp"

namespace scaffold {

/// Multiset of pairwise noncrossing triples over [n], kept sorted.
struct NCTableau {
    int n = 0;
    std::vector<Triple> triples;

    int weight() const { return (int)triples.size(); }
    std::vector<int> content() const {
        std::vector<int> c(n, 0);
        for (const auto& t : triples)
            for (int i : t.arr()) ++c[i - 1];
        return c;
    }
    friend bool operator==(const NCTableau&, const NCTableau&) = default;
};

/// Semistandard Young tableau of shape 3 x r (rows weakly increasing,
/// columns strictly increasing).
struct SSYT {
    std::vector<int> row1, row2, row3;
    int r() const { return (int)row1.size(); }
};

namespace nct {

/// Arc-noncrossing clauses for a pair of triples.
bool is_noncrossing_pair(const Triple& a, const Triple& b, int n);

bool is_noncrossing(const NCTableau& t);
bool is_cyclicless(const NCTableau& t);

struct StandardizedTab {
    NCTableau tab;            // standard tableau on [3r]
    std::vector<int> labels;  // [3r] -> [n]
};

/// Standardization: perturb coinciding letters (left endpoints right, right
/// endpoints left, middles regrouped in reverse).
StandardizedTab standardize_tab(const NCTableau& t);

/// Inverse of standardization given the original content vector.
NCTableau destandardize(const NCTableau& std_tab, const std::vector<int>& content);

SSYT nc_to_ssyt(const NCTableau& t);
NCTableau ssyt_to_nc(const SSYT& t, int n);

/// Tymoczko's m-diagram resolution, semistandardized: a normal non-elliptic
/// web with boundary degrees given by the content.
Web tymoczko_web(const NCTableau& t);

TMatrix t_sum(const NCTableau& t);

/// The unique cyclic-less noncrossing tableau with t_sum = m, found by
/// depth-first search over candidates ordered by (right endpoint desc, left
/// endpoint asc).  Throws if none exists; with check_unique, also throws if
/// more than one exists.
NCTableau nc_decompose(const TMatrix& m, bool check_unique = false);

/// All noncrossing tableaux over [n] of exactly the given weight
/// (cyclic-less only if requested); for enumeration-style verification.
std::vector<NCTableau> enumerate_tableaux(int n, int weight, bool cyclicless_only);

}  // namespace nct
}  // namespace scaffold

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "scaffold/rational.hpp"
#include "scaffold/triples.hpp"

namespace scaffold {

/// Total map from k-subsets of [n] to exact rationals, dense by colex rank.
/// k = 3 throughout the pipeline; k = 2 is used for tree scaffolds and
/// check_tropical accepts any k >= 2.
class PlueckerVector {
public:
    PlueckerVector() : n_(0), k_(3) {}
    PlueckerVector(int n, int k = 3)
        : n_(n), k_(k), entries_(binom(n, k)) {
        if (n < k) throw std::invalid_argument("PlueckerVector: n < k");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    long long size() const { return (long long)entries_.size(); }

    const Rational& at(const Subset& s) const { return entries_.at(subset_rank(s)); }
    Rational& at(const Subset& s) { return entries_.at(subset_rank(s)); }
    const Rational& at(const Triple& t) const { return entries_.at(triple_rank(t)); }
    Rational& at(const Triple& t) { return entries_.at(triple_rank(t)); }
    const Rational& at3(int a, int b, int c) const { return at(Triple(a, b, c)); }
    Rational& at3(int a, int b, int c) { return at(Triple(a, b, c)); }

    const std::vector<Rational>& raw() const { return entries_; }
    std::vector<Rational>& raw() { return entries_; }

    bool is_integral() const {
        for (const auto& e : entries_) if (!e.is_integer()) return false;
        return true;
    }

    friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;

    PlueckerVector& operator+=(const PlueckerVector& o);
    PlueckerVector& operator-=(const PlueckerVector& o);
    PlueckerVector& operator*=(const Rational& c);
    friend PlueckerVector operator+(PlueckerVector a, const PlueckerVector& b) { return a += b; }
    friend PlueckerVector operator-(PlueckerVector a, const PlueckerVector& b) { return a -= b; }
    friend PlueckerVector operator*(const Rational& c, PlueckerVector a) { return a *= c; }

private:
    int n_;
    int k_;
    std::vector<Rational> entries_;
};

/// x in the lineality action pi^x_I = pi_I - sum_{i in I} x_i.
struct LinealityShift {
    std::vector<Rational> x;  // length n, 1-based access via x[i-1]
};

/// 2 x (n-3) integer matrix: the image of Psi in noncrossing-fan coordinates.
struct TMatrix {
    int n = 0;
    std::vector<long long> row1, row2;  // length n-3

    explicit TMatrix(int n_ = 3)
        : n(n_), row1(std::max(0, n_ - 3)), row2(std::max(0, n_ - 3)) {}

    bool nonnegative() const {
        for (auto v : row1) if (v < 0) return false;
        for (auto v : row2) if (v < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (auto v : row1) if (v) return false;
        for (auto v : row2) if (v) return false;
        return true;
    }
    long long weight_bound() const {  // cheap upper bound on decomposition size
        long long m = 0;
        for (auto v : row1) m = std::max(m, v);
        for (auto v : row2) m = std::max(m, v);
        return m;
    }

    friend bool operator==(const TMatrix&, const TMatrix&) = default;
    TMatrix& operator+=(const TMatrix& o);
    TMatrix& operator-=(const TMatrix& o);
    friend TMatrix operator+(TMatrix a, const TMatrix& b) { return a += b; }
    friend TMatrix operator-(TMatrix a, const TMatrix& b) { return a -= b; }
};

/// Coefficient map over non-cyclic triples; the canonical form of a vector
/// modulo lineality (its planar-basis expansion).
using CanonicalForm = std::map<Triple, Rational>;

namespace trop {

/// Tropical Pluecker relation: for every (k-2)-set S and a<b<c<d disjoint
/// from S, the min of the three pairings is attained at least twice.
bool check_tropical(const PlueckerVector& pi);

/// Positive relation (k = 3): pi_Sac + pi_Sbd = min(pi_Sab + pi_Scd,
/// pi_Sad + pi_Sbc).
bool check_positive(const PlueckerVector& pi);

PlueckerVector lineality_apply(const PlueckerVector& pi, const LinealityShift& x);

/// Planar basis element h_J: entries d(e_J, e_I)/n where d is the directed
/// hypersimplex distance (steps replace i+1 by i, cyclically).  Memoized per
/// (n, k, J); call freeze_tables(n) before concurrent use.
PlueckerVector planar_basis_h(const Triple& j, int n);

/// Directed hypersimplex distance table from e_J (BFS); exposed for tests.
std::vector<int> hypersimplex_distances(const Subset& j, int n);

/// Tropical planar cross-ratio u^t_J (J non-cyclic): signed sum over the
/// cubical array D_J.
Rational cross_ratio_u(const Triple& j, const PlueckerVector& pi);

/// The cubical array D_J as (subset, sign) pairs.
std::vector<std::pair<Triple, int>> cubical_array(const Triple& j, int n);

/// u-coordinates over all non-cyclic J; complete invariant modulo lineality.
CanonicalForm canonical_form(const PlueckerVector& pi);

/// Reassembles sum_J c_J h_J from a coefficient map.
PlueckerVector from_h_expansion(const CanonicalForm& coeffs, int n);

/// t_J: row 1 = indicator of [j1, j2-2], row 2 = indicator of [j2-1, j3-3];
/// zero when J is a cyclic triple.
TMatrix t_vector(const Triple& j, int n);

/// The raw interval formula without the cyclic-triple special case; this is
/// the form in which the exchange identities hold for all sorted index
/// ranges.
TMatrix t_vector_raw(const Triple& j, int n);

/// Psi(pi) = sum over non-cyclic J of u^t_J(pi) t_J.  Requires the
/// u-coordinates to be integral.
TMatrix psi_project(const PlueckerVector& pi);

/// Pullback along the section of a weakly monotone cyclic surjection
/// labels: [n'] -> [n] (result_I = pi'_{iota(I)} where iota(i) is the cyclic
/// start of the block labels^{-1}(i)).  On h-coordinates this is
/// h_{a,b,c} -> h_{labels(a), labels(b), labels(c)}.
PlueckerVector relabel_expand(const PlueckerVector& pi, const std::vector<int>& labels);

/// Representative of pi modulo lineality with min_I pi_I = 0.
PlueckerVector normalize_min_zero(const PlueckerVector& pi);

/// Precomputes hypersimplex distance tables for this n (thread-safety hook).
void freeze_tables(int n);

}  // namespace trop
}  // namespace scaffold

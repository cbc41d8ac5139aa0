#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincover/rational.hpp"

namespace chaincover {

// A finite labelled point set with an exact metric. Point ids are dense in
// 0..n-1. Distances are cached as exact squared rationals so that strict
// threshold comparisons never touch floating point: d(x,y) < eps is decided
// as d^2 < eps^2.
class FiniteSpace {
public:
    // An empty placeholder; real spaces come from the factories below.
    FiniteSpace() = default;

    // Euclidean metric from exact coordinates. All points must share the
    // same dimension. Duplicate coordinates are allowed (pseudometric).
    static FiniteSpace from_points(std::vector<std::vector<Rational>> coords,
                                   int basepoint);

    // Explicit symmetric table. When `squared` is true the entries are
    // squared distances; this permits spaces whose distances are square
    // roots of rationals (the regular hexagon, for one).
    static FiniteSpace from_distance_table(
        const std::vector<std::vector<Rational>>& table, int basepoint,
        bool squared = false);

    // Bare point set carrying no metric; only explicit relations apply.
    static FiniteSpace from_size(int n, int basepoint);

    bool has_metric() const { return has_metric_; }

    int size() const { return n_; }
    int basepoint() const { return basepoint_; }
    bool has_coords() const { return !coords_.empty(); }
    int dimension() const { return coords_.empty() ? 0 : static_cast<int>(coords_[0].size()); }
    const std::vector<Rational>& coords(int id) const { return coords_.at(id); }

    const Rational& dist_sq(int a, int b) const;
    // Strict comparison d(a,b) < eps.
    bool within(int a, int b, const Rational& eps) const;
    // 1-D signed difference x_a - x_b. Requires dimension 1.
    Rational diff1d(int a, int b) const;

private:
    void validate_basepoint() const;

    int n_ = 0;
    int basepoint_ = 0;
    bool has_metric_ = true;
    std::vector<std::vector<Rational>> coords_;  // empty for table metrics
    std::vector<Rational> dist_sq_;              // row-major n*n cache
};

// An open interval (lo, hi) with exact endpoints.
struct OpenInterval {
    Rational lo;
    Rational hi;
    bool contains(const Rational& v) const { return lo < v && v < hi; }
};

// A finite reflexive symmetric relation over point ids. The diagonal is
// always implied; only off-diagonal pairs are stored, unordered as (i<j).
class Entourage {
public:
    Entourage() = default;
    Entourage(int n, std::vector<std::pair<int, int>> pairs,
              std::string provenance);

    int point_count() const { return n_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::string& provenance() const { return provenance_; }

    bool contains(int a, int b) const;
    // Sorted E-neighbors of x inclusive of x itself: B(x,E).
    const std::vector<int>& neighbors(int x) const;
    bool refines(const Entourage& other) const;
    bool same_pairs(const Entourage& other) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;  // sorted, i<j, unique
    std::string provenance_;
    std::vector<std::vector<int>> adjacency_;  // includes self
};

// Metric entourage {(x,y) : d(x,y) < eps}. Throws if eps <= 0.
Entourage entourage_from_scale(const FiniteSpace& space, const Rational& eps);
// Same, with a custom provenance label (used for derived relations).
Entourage entourage_from_scale(const FiniteSpace& space, const Rational& eps,
                               const std::string& provenance);

// Difference-set entourage on a 1-D space: (x,y) included iff x-y lies in
// the symmetrized union of the open intervals.
Entourage entourage_from_diff_intervals(const FiniteSpace& space,
                                        const std::vector<OpenInterval>& intervals);

// Explicit pair-list entourage; validates ids and symmetrizes.
Entourage entourage_from_pairs(const FiniteSpace& space,
                               const std::vector<std::pair<int, int>>& pairs);

// Pairwise intersection; provenance records both operands.
Entourage intersect(const Entourage& a, const Entourage& b);

std::vector<int> ball(const Entourage& e, int x);

// Union-find partition: a block per chain component. Blocks are sorted and
// listed in order of their least element.
std::vector<std::vector<int>> chain_components(const FiniteSpace& space,
                                               const Entourage& e);

// True iff B(a,W) is contained in S for every a in S.
bool is_uniformly_open(const std::vector<int>& s, const Entourage& w);

// Smallest W-uniformly-open superset of S: the union of W-components
// meeting S. Throws on empty S.
std::vector<int> saturate(const std::vector<int>& s, const Entourage& w);

}  // namespace chaincover

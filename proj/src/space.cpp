#include "chaincover/space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chaincover {

FiniteSpace FiniteSpace::from_points(std::vector<std::vector<Rational>> coords,
                                     int basepoint) {
    if (coords.empty()) throw std::invalid_argument("space needs at least one point");
    const std::size_t dim = coords[0].size();
    for (const auto& c : coords)
        if (c.size() != dim)
            throw std::invalid_argument("inconsistent coordinate dimension");

    FiniteSpace s;
    s.n_ = static_cast<int>(coords.size());
    s.basepoint_ = s.n_ == 1 ? 0 : basepoint;
    s.coords_ = std::move(coords);
    s.validate_basepoint();

    s.dist_sq_.assign(static_cast<std::size_t>(s.n_) * s.n_, Rational(0));
    for (int a = 0; a < s.n_; ++a) {
        for (int b = a + 1; b < s.n_; ++b) {
            Rational acc(0);
            for (std::size_t k = 0; k < dim; ++k) {
                Rational d = s.coords_[a][k] - s.coords_[b][k];
                acc += d * d;
            }
            s.dist_sq_[a * s.n_ + b] = acc;
            s.dist_sq_[b * s.n_ + a] = acc;
        }
    }
    return s;
}

FiniteSpace FiniteSpace::from_distance_table(
    const std::vector<std::vector<Rational>>& table, int basepoint, bool squared) {
    if (table.empty()) throw std::invalid_argument("space needs at least one point");
    const std::size_t n = table.size();
    for (const auto& row : table)
        if (row.size() != n) throw std::invalid_argument("distance table is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i][i] != 0)
            throw std::invalid_argument("distance table has nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (table[i][j] != table[j][i])
                throw std::invalid_argument("asymmetric distance table");
            if (table[i][j] < 0)
                throw std::invalid_argument("negative distance table entry");
        }
    }

    FiniteSpace s;
    s.n_ = static_cast<int>(n);
    s.basepoint_ = s.n_ == 1 ? 0 : basepoint;
    s.validate_basepoint();
    s.dist_sq_.assign(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.dist_sq_[i * n + j] = squared ? table[i][j] : table[i][j] * table[i][j];
    return s;
}

FiniteSpace FiniteSpace::from_size(int n, int basepoint) {
    if (n < 1) throw std::invalid_argument("space needs at least one point");
    FiniteSpace s;
    s.n_ = n;
    s.basepoint_ = n == 1 ? 0 : basepoint;
    s.has_metric_ = false;
    s.validate_basepoint();
    return s;
}

void FiniteSpace::validate_basepoint() const {
    if (basepoint_ < 0 || basepoint_ >= n_)
        throw std::invalid_argument("basepoint id " + std::to_string(basepoint_) +
                                    " is not a point of the space");
}

const Rational& FiniteSpace::dist_sq(int a, int b) const {
    if (!has_metric_) throw std::logic_error("space carries no metric");
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::out_of_range("unknown point id");
    return dist_sq_[a * n_ + b];
}

bool FiniteSpace::within(int a, int b, const Rational& eps) const {
    return dist_sq(a, b) < eps * eps;
}

Rational FiniteSpace::diff1d(int a, int b) const {
    if (dimension() != 1) throw std::invalid_argument("space is not 1-D");
    return coords_.at(a)[0] - coords_.at(b)[0];
}

Entourage::Entourage(int n, std::vector<std::pair<int, int>> pairs,
                     std::string provenance)
    : n_(n), pairs_(std::move(pairs)), provenance_(std::move(provenance)) {
    for (auto& p : pairs_) {
        if (p.first > p.second) std::swap(p.first, p.second);
        if (p.first == p.second) continue;
        if (p.first < 0 || p.second >= n_)
            throw std::invalid_argument("entourage pair references unknown id");
    }
    std::erase_if(pairs_, [](const auto& p) { return p.first == p.second; });
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

    adjacency_.assign(n_, {});
    for (int x = 0; x < n_; ++x) adjacency_[x].push_back(x);
    for (const auto& [a, b] : pairs_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Entourage::contains(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
    if (a == b) return true;
    auto p = std::minmax(a, b);
    return std::binary_search(pairs_.begin(), pairs_.end(),
                              std::make_pair(p.first, p.second));
}

const std::vector<int>& Entourage::neighbors(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("unknown point id");
    return adjacency_[x];
}

bool Entourage::refines(const Entourage& other) const {
    if (n_ != other.n_) return false;
    return std::includes(other.pairs_.begin(), other.pairs_.end(),
                         pairs_.begin(), pairs_.end());
}

bool Entourage::same_pairs(const Entourage& other) const {
    return n_ == other.n_ && pairs_ == other.pairs_;
}

Entourage entourage_from_scale(const FiniteSpace& space, const Rational& eps,
                               const std::string& provenance) {
    if (eps <= 0) throw std::invalid_argument("scale threshold must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < space.size(); ++a)
        for (int b = a + 1; b < space.size(); ++b)
            if (space.within(a, b, eps)) pairs.emplace_back(a, b);
    return Entourage(space.size(), std::move(pairs), provenance);
}

Entourage entourage_from_scale(const FiniteSpace& space, const Rational& eps) {
    return entourage_from_scale(space, eps, "scale[" + format_exact(eps) + "]");
}

Entourage entourage_from_diff_intervals(const FiniteSpace& space,
                                        const std::vector<OpenInterval>& intervals) {
    if (space.dimension() != 1)
        throw std::invalid_argument("difference intervals need a 1-D space");
    if (intervals.empty()) throw std::invalid_argument("empty interval list");

    auto member = [&](const Rational& v) {
        for (const auto& iv : intervals)
            if (iv.contains(v) || iv.contains(-v)) return true;
        return false;
    };
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < space.size(); ++a)
        for (int b = a + 1; b < space.size(); ++b)
            if (member(space.diff1d(a, b))) pairs.emplace_back(a, b);

    std::ostringstream label;
    label << "diff[";
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i) label << ",";
        label << "(" << format_exact(intervals[i].lo) << ","
              << format_exact(intervals[i].hi) << ")";
    }
    label << "]";
    return Entourage(space.size(), std::move(pairs), label.str());
}

Entourage entourage_from_pairs(const FiniteSpace& space,
                               const std::vector<std::pair<int, int>>& pairs) {
    for (const auto& [a, b] : pairs)
        if (a < 0 || a >= space.size() || b < 0 || b >= space.size())
            throw std::invalid_argument("pair references unknown id");
    return Entourage(space.size(), pairs,
                     "pairs[" + std::to_string(pairs.size()) + "]");
}

Entourage intersect(const Entourage& a, const Entourage& b) {
    if (a.point_count() != b.point_count())
        throw std::invalid_argument("entourages over different spaces");
    std::vector<std::pair<int, int>> pairs;
    std::set_intersection(a.pairs().begin(), a.pairs().end(),
                          b.pairs().begin(), b.pairs().end(),
                          std::back_inserter(pairs));
    return Entourage(a.point_count(), std::move(pairs),
                     "and[" + a.provenance() + "," + b.provenance() + "]");
}

std::vector<int> ball(const Entourage& e, int x) { return e.neighbors(x); }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> chain_components(const FiniteSpace& space,
                                               const Entourage& e) {
    if (space.size() != e.point_count())
        throw std::invalid_argument("entourage does not match space");
    UnionFind uf(space.size());
    for (const auto& [a, b] : e.pairs()) uf.unite(a, b);

    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(space.size(), -1);
    for (int x = 0; x < space.size(); ++x) {
        int r = uf.find(x);
        if (block_of[r] < 0) {
            block_of[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[r]].push_back(x);
    }
    return blocks;
}

bool is_uniformly_open(const std::vector<int>& s, const Entourage& w) {
    std::vector<char> in_s(w.point_count(), 0);
    for (int x : s) {
        if (x < 0 || x >= w.point_count())
            throw std::out_of_range("set member is not a point");
        in_s[x] = 1;
    }
    for (int a : s)
        for (int y : w.neighbors(a))
            if (!in_s[y]) return false;
    return true;
}

std::vector<int> saturate(const std::vector<int>& s, const Entourage& w) {
    if (s.empty()) throw std::invalid_argument("saturate of an empty set");
    std::vector<char> seen(w.point_count(), 0);
    std::vector<int> stack;
    for (int x : s) {
        if (x < 0 || x >= w.point_count())
            throw std::out_of_range("set member is not a point");
        if (!seen[x]) {
            seen[x] = 1;
            stack.push_back(x);
        }
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int y : w.neighbors(a))
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    std::vector<int> out;
    for (int x = 0; x < w.point_count(); ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

}  // namespace chaincover

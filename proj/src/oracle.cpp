#include "chaincover/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace chaincover {

namespace {

// Points p completing both (a,p) and (p,b) in E, ascending.
std::vector<int> common_neighbors(const Entourage& e, int a, int b) {
    const auto& na = e.neighbors(a);
    const auto& nb = e.neighbors(b);
    std::vector<int> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

OracleVerdict oracle_homotopic(const Entourage& e, const Chain& c1, const Chain& c2,
                               int slack, const OracleLimits& limits) {
    if (slack < 0) throw std::invalid_argument("slack must be nonnegative");
    if (!is_echain(c1, e) || !is_echain(c2, e))
        throw std::invalid_argument("input is not an E-chain");
    if (c1.front() != c2.front() || c1.back() != c2.back())
        throw std::invalid_argument("chains do not share endpoints");

    OracleVerdict out;
    out.slack = slack;
    const std::size_t cap_points =
        std::max(c1.size(), c2.size()) + static_cast<std::size_t>(slack);

    std::map<Chain, Chain> parent;  // chain -> predecessor
    parent[c1] = {};
    std::deque<Chain> queue{c1};
    while (!queue.empty()) {
        Chain c = queue.front();
        queue.pop_front();
        if (c == c2) {
            out.equivalent = true;
            Chain cur = c2;
            while (!cur.empty()) {
                out.move_sequence.push_back(cur);
                cur = parent[cur];
            }
            std::reverse(out.move_sequence.begin(), out.move_sequence.end());
            return out;
        }
        auto visit = [&](Chain&& next, const Chain& from) {
            if (parent.count(next)) return;
            if (parent.size() >= limits.max_states) {
                out.state_cap_hit = true;
                return;
            }
            parent[next] = from;
            queue.push_back(std::move(next));
        };
        // A stationary pair and the single point denote the same class; the
        // interior moves alone cannot cross the two-point floor.
        if (c.size() == 1) visit(Chain{c[0], c[0]}, c);
        if (c.size() == 2 && c[0] == c[1]) visit(Chain{c[0]}, c);
        // Deletions of interior points.
        for (std::size_t i = 1; i + 1 < c.size(); ++i) {
            if (!e.contains(c[i - 1], c[i + 1])) continue;
            Chain next = c;
            next.erase(next.begin() + i);
            visit(std::move(next), c);
        }
        // Insertions between consecutive points.
        if (c.size() < cap_points) {
            for (std::size_t i = 1; i < c.size(); ++i) {
                for (int p : common_neighbors(e, c[i - 1], c[i])) {
                    Chain next = c;
                    next.insert(next.begin() + i, p);
                    visit(std::move(next), c);
                }
            }
        }
    }
    return out;  // not within slack
}

ClassPartition enumerate_classes(const Entourage& e, int basepoint, int maxlen,
                                 int slack, const OracleLimits& limits) {
    if (e.point_count() > limits.max_points)
        throw std::invalid_argument("space exceeds the oracle point guard");
    if (maxlen > limits.max_len)
        throw std::invalid_argument("maxlen exceeds the oracle length guard");
    if (basepoint < 0 || basepoint >= e.point_count())
        throw std::invalid_argument("basepoint is not a point");

    const int cap = maxlen + slack;
    // All based chains with at most cap steps, by length then lexicographic.
    std::vector<Chain> all{{basepoint}};
    std::map<Chain, int> id{{{basepoint}, 0}};
    std::size_t level_begin = 0;
    for (int len = 0; len < cap; ++len) {
        std::size_t level_end = all.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            Chain c = all[i];
            for (int y : e.neighbors(c.back())) {
                Chain next = c;
                next.push_back(y);
                if (id.emplace(next, static_cast<int>(all.size())).second)
                    all.push_back(std::move(next));
                if (all.size() > limits.max_states)
                    throw std::invalid_argument("oracle state cap exceeded");
            }
        }
        level_begin = level_end;
    }

    // Union chains one insertion apart; deletions are the reverse arrows.
    std::vector<int> parent(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // The basepoint chain and its stationary pair are one class.
    {
        auto it = id.find(Chain{basepoint, basepoint});
        if (it != id.end()) parent[it->second] = 0;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Chain& c = all[i];
        if (static_cast<int>(c.size()) - 1 >= cap) continue;
        for (std::size_t pos = 1; pos < c.size(); ++pos) {
            for (int p : common_neighbors(e, c[pos - 1], c[pos])) {
                Chain next = c;
                next.insert(next.begin() + pos, p);
                auto it = id.find(next);
                if (it != id.end()) {
                    int a = find(static_cast<int>(i)), b = find(it->second);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }
    }

    ClassPartition out;
    std::map<int, int> dense;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (static_cast<int>(all[i].size()) - 1 > maxlen) continue;
        int root = find(static_cast<int>(i));
        auto [it, fresh] = dense.emplace(root, out.class_count);
        if (fresh) ++out.class_count;
        out.chains.push_back(all[i]);
        out.class_id.push_back(it->second);
    }
    return out;
}

}  // namespace chaincover

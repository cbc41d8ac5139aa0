#include <deque>
#include <numeric>

#include "chaincover/group.hpp"

namespace chaincover {

namespace {

// HLT-style enumeration over the trivial subgroup. Kept simple: scan and
// fill every relator at every live coset, then complete the row, processing
// coincidences eagerly.
class Enumerator {
public:
    Enumerator(const Presentation& p, Budget& budget)
        : gens_(p.generators), relators_(p.relators), budget_(budget) {
        new_coset();
    }

    bool run() {
        for (std::size_t a = 0; a < table_.size(); ++a) {
            if (!alive(a)) continue;
            for (const Word& r : relators_) {
                if (r.empty()) continue;
                if (!scan_and_fill(static_cast<int>(a), r)) return false;
                if (!alive(a)) break;  // died in a coincidence
            }
            if (!alive(a)) continue;
            for (int c = 0; c < 2 * gens_; ++c) {
                int live = find(static_cast<int>(a));
                if (live != static_cast<int>(a)) break;
                if (table_[a][c] < 0) {
                    if (!define(static_cast<int>(a), c)) return false;
                }
            }
        }
        return true;
    }

    CosetTable extract() const {
        // Compact live cosets, renumbered in ascending order.
        std::vector<int> id(table_.size(), -1);
        int next = 0;
        for (std::size_t a = 0; a < table_.size(); ++a)
            if (alive(a)) id[a] = next++;
        CosetTable out;
        out.generators = gens_;
        out.table.assign(next, std::vector<int>(2 * gens_, -1));
        for (std::size_t a = 0; a < table_.size(); ++a) {
            if (!alive(a)) continue;
            for (int c = 0; c < 2 * gens_; ++c)
                out.table[id[a]][c] = id[find_const(table_[a][c])];
        }
        return out;
    }

private:
    static int col(std::int32_t letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int inv_col(int c) { return c ^ 1; }

    bool alive(std::size_t a) const { return rep_[a] == static_cast<int>(a); }

    int find(int a) {
        while (rep_[a] != a) a = rep_[a] = rep_[rep_[a]];
        return a;
    }
    int find_const(int a) const {
        while (rep_[a] != a) a = rep_[a];
        return a;
    }

    int new_coset() {
        table_.emplace_back(2 * gens_, -1);
        rep_.push_back(static_cast<int>(table_.size()) - 1);
        return static_cast<int>(table_.size()) - 1;
    }

    bool define(int a, int c) {
        if (!budget_.charge()) return false;
        int b = new_coset();
        table_[a][c] = b;
        table_[b][inv_col(c)] = a;
        return true;
    }

    // Record table[a][c] = b, reconciling with anything already there.
    bool deduce(int a, int c, int b) {
        if (!budget_.charge()) return false;
        a = find(a);
        b = find(b);
        int ex = table_[a][c];
        if (ex >= 0 && find(ex) != b) return merge(find(ex), b);
        table_[a][c] = b;
        int back = table_[b][inv_col(c)];
        if (back >= 0 && find(back) != a) {
            table_[b][inv_col(c)] = a;
            return merge(find(back), a);
        }
        table_[b][inv_col(c)] = a;
        return true;
    }

    bool merge(int a, int b) {
        std::deque<std::pair<int, int>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (!budget_.charge()) return false;
            if (x > y) std::swap(x, y);
            rep_[y] = x;  // y dies
            for (int c = 0; c < 2 * gens_; ++c) {
                int t = table_[y][c];
                if (t < 0) continue;
                t = find(t);
                // Retarget the back edge of t away from the dead coset.
                if (table_[t][inv_col(c)] >= 0 && find(table_[t][inv_col(c)]) == y)
                    table_[t][inv_col(c)] = x;
                int ex = table_[x][c];
                if (ex < 0) {
                    table_[x][c] = t;
                    if (table_[t][inv_col(c)] < 0) table_[t][inv_col(c)] = x;
                } else if (find(ex) != t) {
                    queue.emplace_back(find(ex), t);
                }
            }
        }
        return true;
    }

    bool scan_and_fill(int a, const Word& r) {
        for (;;) {
            a = find(a);
            int f = a;
            std::size_t i = 0;
            while (i < r.size()) {
                int nxt = table_[f][col(r[i])];
                if (nxt < 0) break;
                f = find(nxt);
                ++i;
            }
            if (i == r.size()) {
                if (f != a) return merge(f, a);
                return true;
            }
            int b = a;
            std::size_t j = r.size();
            while (j > i) {
                int nxt = table_[b][col(-r[j - 1])];
                if (nxt < 0) break;
                b = find(nxt);
                --j;
            }
            if (j == i) {
                // Both scans met across one undefined entry closed by the
                // backward scan; reconcile endpoints.
                if (f != b && !merge(f, b)) return false;
                return true;
            }
            if (j == i + 1) {
                if (!deduce(f, col(r[i]), b)) return false;
                return true;
            }
            if (!define(f, col(r[i]))) return false;
        }
    }

    int gens_;
    std::vector<Word> relators_;
    Budget& budget_;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
};

}  // namespace

int CosetTable::trace(const Word& w) const {
    int c = 0;
    for (auto letter : w) {
        int idx = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
        c = table[c][idx];
    }
    return c;
}

std::optional<CosetTable> coset_enumeration(const Presentation& p, Budget& budget) {
    p.validate();
    if (p.generators == 0) {
        CosetTable t;
        t.generators = 0;
        t.table.assign(1, {});
        return t;
    }
    Enumerator e(p, budget);
    if (!e.run()) return std::nullopt;
    return e.extract();
}

}  // namespace chaincover

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "chaincover/group.hpp"

namespace chaincover {

namespace {

// Substitute generator g (positive id) by `repl` throughout w, reduced.
Word substitute(const Word& w, std::int32_t g, const Word& repl) {
    Word out;
    out.reserve(w.size());
    Word repl_inv = inverse(repl);
    for (auto letter : w) {
        if (letter == g)
            append_reduced(out, repl);
        else if (letter == -g)
            append_reduced(out, repl_inv);
        else
            push_reduced(out, letter);
    }
    return out;
}

struct Engine {
    int gens;
    std::vector<char> alive;                      // 1-based
    std::vector<Word> relators;
    std::vector<std::pair<std::int32_t, Word>> eliminations;
    Budget& budget;
    bool budget_out = false;
    std::uint64_t steps = 0;

    Engine(const Presentation& p, Budget& b)
        : gens(p.generators), alive(p.generators + 1, 1), relators(p.relators),
          budget(b) {}

    bool charge(std::uint64_t n = 1) {
        steps += n;
        if (!budget.charge(n)) {
            budget_out = true;
            return false;
        }
        return true;
    }

    void normalize() {
        std::set<Word> seen;
        std::vector<Word> keep;
        for (auto& r : relators) {
            Word c = cyclic_reduce(r);
            if (c.empty()) continue;
            Word key = cyclic_canonical(c);
            if (seen.insert(key).second) keep.push_back(std::move(c));
        }
        relators = std::move(keep);
    }

    // Count occurrences of +-g per relator.
    std::vector<std::map<std::int32_t, int>> occurrence_tables() const {
        std::vector<std::map<std::int32_t, int>> occ(relators.size());
        for (std::size_t i = 0; i < relators.size(); ++i)
            for (auto letter : relators[i]) occ[i][std::abs(letter)]++;
        return occ;
    }

    // One generator elimination if a candidate exists. A generator with a
    // single occurrence in some relator can be solved for and substituted
    // away; pick the candidate with the cheapest growth estimate.
    bool eliminate_once() {
        auto occ = occurrence_tables();
        std::vector<long long> total(gens + 1, 0);
        for (const auto& table : occ)
            for (const auto& [g, k] : table) total[g] += k;

        long long best_cost = -1;
        std::size_t best_rel = 0;
        std::int32_t best_gen = 0;
        for (std::size_t i = 0; i < relators.size(); ++i) {
            for (const auto& [g, k] : occ[i]) {
                if (k != 1) continue;
                long long cost =
                    static_cast<long long>(relators[i].size() - 1) * (total[g] - 1);
                if (best_cost < 0 || cost < best_cost ||
                    (cost == best_cost &&
                     (relators[i].size() < relators[best_rel].size() ||
                      (relators[i].size() == relators[best_rel].size() && g < best_gen)))) {
                    best_cost = cost;
                    best_rel = i;
                    best_gen = g;
                }
            }
        }
        if (best_cost < 0) return false;

        // Rotate the relator so the solved generator comes first.
        Word r = relators[best_rel];
        std::size_t pos = 0;
        while (std::abs(r[pos]) != best_gen) ++pos;
        std::rotate(r.begin(), r.begin() + pos, r.end());
        // r = g^s . tail  =>  g = tail^-1 (s=+1)  or  g = tail (s=-1)
        Word tail(r.begin() + 1, r.end());
        Word repl = r[0] > 0 ? inverse(tail) : tail;

        relators.erase(relators.begin() + best_rel);
        alive[best_gen] = 0;
        eliminations.emplace_back(best_gen, repl);
        for (auto& other : relators) {
            if (!charge()) return false;
            other = substitute(other, best_gen, repl);
        }
        charge();
        return !budget_out;
    }

    // Shorten a relator using a cyclic conjugate of another: when more than
    // half of s^{+-1} appears contiguously in r, swap the long half for the
    // short complement.
    bool subword_pass() {
        bool changed = false;
        for (std::size_t i = 0; i < relators.size(); ++i) {
            for (std::size_t j = 0; j < relators.size(); ++j) {
                if (i == j) continue;
                const Word& s = relators[j];
                if (s.size() < 2 || s.size() > 2 * relators[i].size()) continue;
                std::size_t half = s.size() / 2 + 1;
                for (int sign = 0; sign < 2 && !changed; ++sign) {
                    Word base = sign ? inverse(s) : s;
                    for (std::size_t rot = 0; rot < base.size() && !changed; ++rot) {
                        if (!charge()) return changed;
                        Word& r = relators[i];
                        // Longest prefix of base^rotated occurring in r.
                        Word pat = base;
                        std::rotate(pat.begin(), pat.begin() + rot, pat.end());
                        for (std::size_t start = 0; start + half <= r.size(); ++start) {
                            std::size_t match = 0;
                            while (start + match < r.size() && match < pat.size() &&
                                   r[start + match] == pat[match])
                                ++match;
                            if (match < half) continue;
                            // pat = matched . rest with |rest| < |matched|;
                            // matched == rest^{-1} in the group.
                            Word rest(pat.begin() + match, pat.end());
                            Word repl = inverse(rest);
                            Word nr(r.begin(), r.begin() + start);
                            append_reduced(nr, repl);
                            for (std::size_t k = start + match; k < r.size(); ++k)
                                push_reduced(nr, r[k]);
                            if (nr.size() < r.size()) {
                                r = std::move(nr);
                                changed = true;
                                break;
                            }
                        }
                    }
                }
            }
        }
        return changed;
    }

    SimplifyResult finish() {
        normalize();
        // Renumber live generators densely.
        std::vector<std::int32_t> new_id(gens + 1, 0);
        std::int32_t next = 1;
        for (std::int32_t g = 1; g <= gens; ++g)
            if (alive[g]) new_id[g] = next++;

        SimplifyResult out;
        out.presentation.generators = next - 1;
        for (const auto& r : relators) {
            Word w;
            w.reserve(r.size());
            for (auto letter : r)
                w.push_back(letter > 0 ? new_id[letter] : -new_id[-letter]);
            out.presentation.relators.push_back(std::move(w));
        }
        std::sort(out.presentation.relators.begin(), out.presentation.relators.end(),
                  shortlex_less);

        // Expand eliminated generators back to live ones. A replacement may
        // mention generators eliminated later, so resolve in reverse order.
        std::vector<Word> expanded(gens + 1);
        for (std::int32_t g = 1; g <= gens; ++g)
            if (alive[g]) expanded[g] = Word{g};
        for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
            Word acc;
            for (auto letter : it->second) {
                const Word& sub = expanded[std::abs(letter)];
                if (letter > 0)
                    append_reduced(acc, sub);
                else
                    append_reduced(acc, inverse(sub));
            }
            expanded[it->first] = std::move(acc);
        }
        out.generator_images.resize(gens);
        for (std::int32_t g = 1; g <= gens; ++g) {
            Word w;
            for (auto letter : expanded[g])
                w.push_back(letter > 0 ? new_id[letter] : -new_id[-letter]);
            out.generator_images[g - 1] = free_reduce(w);
        }
        out.budget_exhausted = budget_out;
        out.steps = steps;
        return out;
    }
};

}  // namespace

Word SimplifyResult::image(const Word& w) const {
    Word out;
    for (auto letter : w) append_image(out, letter);
    return out;
}

void SimplifyResult::append_image(Word& out, std::int32_t letter) const {
    const Word& img = generator_images.at(std::abs(letter) - 1);
    if (letter > 0)
        append_reduced(out, img);
    else
        for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
}

SimplifyResult simplify(const Presentation& p, Budget& budget) {
    p.validate();
    Engine e(p, budget);
    e.normalize();
    while (!e.budget_out) {
        if (e.eliminate_once()) {
            e.normalize();
            continue;
        }
        if (!e.subword_pass()) break;
        e.normalize();
    }
    return e.finish();
}

}  // namespace chaincover

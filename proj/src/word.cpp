#include "chaincover/word.hpp"

#include <algorithm>

namespace chaincover {

void push_reduced(Word& w, std::int32_t letter) {
    if (!w.empty() && w.back() == -letter)
        w.pop_back();
    else
        w.push_back(letter);
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto letter : w) push_reduced(out, letter);
    return out;
}

void append_reduced(Word& w, const Word& suffix) {
    for (auto letter : suffix) push_reduced(w, letter);
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat_reduced(const Word& a, const Word& b) {
    Word out = free_reduce(a);
    append_reduced(out, b);
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

namespace {

// Letter order: |g| ascending, positive before negative.
bool letter_less(std::int32_t a, std::int32_t b) {
    auto ka = std::abs(a), kb = std::abs(b);
    if (ka != kb) return ka < kb;
    return a > 0 && b < 0;
}

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        letter_less);
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

Word cyclic_canonical(const Word& w) {
    Word base = cyclic_reduce(w);
    if (base.empty()) return base;
    Word best = base;
    for (const Word& seed : {base, inverse(base)}) {
        Word rot = seed;
        for (std::size_t k = 0; k < seed.size(); ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (lex_less(rot, best)) best = rot;
        }
    }
    return best;
}

}  // namespace chaincover

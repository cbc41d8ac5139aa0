#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chaincover/group.hpp"

namespace chaincover {

void Presentation::validate() const {
    if (generators < 0) throw std::invalid_argument("negative generator count");
    for (const auto& r : relators) validate(r);
}

void Presentation::validate(const Word& w) const {
    for (auto letter : w) {
        if (letter == 0 || std::abs(letter) > generators)
            throw std::invalid_argument("unknown generator " +
                                        std::to_string(letter));
    }
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    os << "rank " << free_rank;
    if (!torsion.empty()) {
        os << ", torsion [";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (i) os << ",";
            os << torsion[i].str();
        }
        os << "]";
    }
    return os.str();
}

Verdict Verdict::yes(std::string cert, std::uint64_t spent) {
    return {Truth::True, std::move(cert), spent};
}
Verdict Verdict::no(std::string cert, std::uint64_t spent) {
    return {Truth::False, std::move(cert), spent};
}
Verdict Verdict::unknown(std::uint64_t spent) {
    return {Truth::Unknown, "budget exhausted", spent};
}

std::vector<BigInt> exponent_vector(const Word& w, int generators) {
    std::vector<BigInt> v(generators, 0);
    for (auto letter : w) {
        int g = std::abs(letter) - 1;
        v[g] += letter > 0 ? 1 : -1;
    }
    return v;
}

AbelianInvariants abelianize(const Presentation& p) {
    p.validate();
    std::vector<std::vector<BigInt>> m;
    m.reserve(p.relators.size());
    for (const auto& r : p.relators) m.push_back(exponent_vector(r, p.generators));
    SmithResult s = smith_normal_form(std::move(m), p.generators);

    AbelianInvariants out;
    out.free_rank = p.generators - s.rank;
    for (const auto& d : s.diagonal)
        if (d >= 2) out.torsion.push_back(d);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

Verdict rewrite_to_identity(const Presentation& p, const Word& start, Budget& budget) {
    Word w0 = free_reduce(start);
    if (w0.empty()) return Verdict::yes("free reduction");
    if (p.relators.empty()) return Verdict::unknown(0);

    // All cyclic conjugates of the relators and their inverses.
    std::vector<Word> moves;
    std::size_t max_rel = 0;
    for (const Word& r : p.relators) {
        max_rel = std::max(max_rel, r.size());
        for (const Word& base : {r, inverse(r)}) {
            Word rot = base;
            for (std::size_t k = 0; k < base.size(); ++k) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                moves.push_back(rot);
            }
        }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());

    const std::size_t cap = w0.size() + 2 * max_rel;
    std::set<Word> seen{w0};
    std::deque<std::pair<Word, int>> queue{{w0, 0}};
    std::uint64_t spent0 = budget.used;
    while (!queue.empty()) {
        auto [w, depth] = queue.front();
        queue.pop_front();
        for (const Word& mv : moves) {
            for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                if (!budget.charge()) return Verdict::unknown(budget.used - spent0);
                Word cand(w.begin(), w.begin() + pos);
                append_reduced(cand, mv);
                for (std::size_t k = pos; k < w.size(); ++k) push_reduced(cand, w[k]);
                if (cand.empty())
                    return Verdict::yes("rewriting trace (" +
                                            std::to_string(depth + 1) +
                                            " relator insertions)",
                                        budget.used - spent0);
                if (cand.size() <= cap && seen.insert(cand).second)
                    queue.emplace_back(std::move(cand), depth + 1);
            }
        }
    }
    return Verdict::unknown(budget.used - spent0);
}

GroupContext::GroupContext(Presentation p, Budget& budget) : original_(std::move(p)) {
    original_.validate();
    simp_ = simplify(original_, budget);
    invariants_ = abelianize(simp_.presentation);
    std::vector<std::vector<BigInt>> m;
    for (const auto& r : simp_.presentation.relators)
        m.push_back(exponent_vector(r, simp_.presentation.generators));
    lattice_ = smith_normal_form(std::move(m), simp_.presentation.generators);
}

Word GroupContext::normal_form(const Word& w) const {
    original_.validate(w);
    return simp_.image(w);
}

void GroupContext::append_normal(Word& nf, std::int32_t original_letter) const {
    simp_.append_image(nf, original_letter);
}

bool GroupContext::abelian_zero(const Word& simplified_word) const {
    return lattice_contains(
        lattice_, exponent_vector(simplified_word, simp_.presentation.generators));
}

const CosetTable* GroupContext::table(Budget& budget) {
    if (!table_attempted_) {
        table_attempted_ = true;
        // One attempt, capped at half the caller's remaining budget so a
        // non-closing enumeration cannot starve the other routes.
        Budget attempt(budget.remaining() / 2);
        table_ = coset_enumeration(simp_.presentation, attempt);
        budget.charge(attempt.used);
    }
    return table_ ? &*table_ : nullptr;
}

Verdict GroupContext::equal_normal(const Word& nf1, const Word& nf2, Budget& budget) {
    std::uint64_t spent0 = budget.used;
    Word diff = nf1;
    append_reduced(diff, inverse(nf2));
    if (diff.empty()) return Verdict::yes("free reduction", budget.used - spent0);
    if (!abelian_zero(diff))
        return Verdict::no("abelianization separates the words",
                           budget.used - spent0);
    if (free_after_simplify())
        return Verdict::no("free normal forms differ", budget.used - spent0);

    if (const CosetTable* t = table(budget)) {
        std::string cert = "coset table of order " + std::to_string(t->order());
        if (t->trace(diff) == 0)
            return Verdict::yes(cert, budget.used - spent0);
        return Verdict::no(cert, budget.used - spent0);
    }

    Verdict rw = rewrite_to_identity(simp_.presentation, diff, budget);
    if (rw.is_true()) return Verdict::yes(rw.certificate, budget.used - spent0);
    return Verdict::unknown(budget.used - spent0);
}

Verdict GroupContext::equal(const Word& w1, const Word& w2, Budget& budget) {
    original_.validate(w1);
    original_.validate(w2);
    std::uint64_t spent0 = budget.used;
    Word direct = free_reduce(w1);
    append_reduced(direct, inverse(w2));
    if (direct.empty()) return Verdict::yes("free reduction", budget.used - spent0);
    return equal_normal(normal_form(w1), normal_form(w2), budget);
}

Verdict GroupContext::trivial(Budget& budget) {
    std::uint64_t spent0 = budget.used;
    if (simp_.presentation.generators == 0)
        return Verdict::yes("empty presentation after simplification",
                            budget.used - spent0);
    if (!invariants_.trivial())
        return Verdict::no("abelianization: " + invariants_.to_string(),
                           budget.used - spent0);
    if (const CosetTable* t = table(budget)) {
        std::string cert = "coset table of order " + std::to_string(t->order());
        if (t->order() == 1) return Verdict::yes(cert, budget.used - spent0);
        return Verdict::no(cert, budget.used - spent0);
    }
    // Last resort: show each remaining generator trivial by rewriting.
    for (std::int32_t g = 1; g <= simp_.presentation.generators; ++g) {
        Verdict rw = rewrite_to_identity(simp_.presentation, {g}, budget);
        if (!rw.is_true()) return Verdict::unknown(budget.used - spent0);
    }
    return Verdict::yes("all generators rewrite to the identity",
                        budget.used - spent0);
}

Verdict equal_in_group(const Presentation& p, const Word& w1, const Word& w2,
                       Budget& budget) {
    GroupContext ctx(p, budget);
    return ctx.equal(w1, w2, budget);
}

Verdict is_trivial_group(const Presentation& p, Budget& budget) {
    GroupContext ctx(p, budget);
    return ctx.trivial(budget);
}

}  // namespace chaincover

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincover/rational.hpp"
#include "chaincover/word.hpp"

namespace chaincover {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Step counter for the budgeted decision procedures. One unit is one
// elementary step: a Tietze move, a coset-table deduction, or a rewriting
// application.
struct Budget {
    std::uint64_t limit = kDefaultBudget;
    std::uint64_t used = 0;

    Budget() = default;
    explicit Budget(std::uint64_t l) : limit(l) {}
    bool charge(std::uint64_t n = 1) {
        used += n;
        return used <= limit;
    }
    bool exhausted() const { return used >= limit; }
    std::uint64_t remaining() const { return used >= limit ? 0 : limit - used; }
};

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;

    void validate() const;           // throws on out-of-range letters
    void validate(const Word& w) const;  // a word over these generators
};

// Canonical invariants of the abelianized group: free rank plus torsion
// coefficients in a divisibility chain (each >= 2).
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants&) const = default;
    std::string to_string() const;
};

enum class Truth { True, False, Unknown };

// Three-valued result of a budgeted decision. True/False always carry a
// certificate naming the successful route; Unknown records the spent budget.
struct Verdict {
    Truth value = Truth::Unknown;
    std::string certificate;
    std::uint64_t budget_spent = 0;

    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
    bool is_unknown() const { return value == Truth::Unknown; }
    static Verdict yes(std::string cert, std::uint64_t spent = 0);
    static Verdict no(std::string cert, std::uint64_t spent = 0);
    static Verdict unknown(std::uint64_t spent);
};

// Smith normal form D = U*M*V of an integer matrix, diagonal nonnegative
// with a divisibility chain. Only the right transform V is kept; it is what
// row-lattice membership tests need.
struct SmithResult {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> diagonal;               // length min(rows, cols)
    std::vector<std::vector<BigInt>> right;     // V, cols x cols
    int rank = 0;
};

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m, int cols);

// True iff v lies in the integer lattice spanned by the rows of the matrix
// the SmithResult was computed from.
bool lattice_contains(const SmithResult& s, const std::vector<BigInt>& v);

// Tietze simplification. The result presents an isomorphic group;
// generator_images[g-1] rewrites original generator g as a word over the
// simplified generators, so words transport across the isomorphism.
struct SimplifyResult {
    Presentation presentation;
    std::vector<Word> generator_images;
    bool budget_exhausted = false;
    std::uint64_t steps = 0;

    // Image of a word over the original generators, freely reduced.
    Word image(const Word& w) const;
    void append_image(Word& out, std::int32_t letter) const;
};

SimplifyResult simplify(const Presentation& p, Budget& budget);

AbelianInvariants abelianize(const Presentation& p);

std::vector<BigInt> exponent_vector(const Word& w, int generators);

// Coset table of the regular action, produced when Todd-Coxeter coset
// enumeration over the trivial subgroup closes within budget. A closed
// table decides the word problem completely.
struct CosetTable {
    int generators = 0;
    std::vector<std::vector<int>> table;  // [coset][2*gen(+1 for inverse)]

    int order() const { return static_cast<int>(table.size()); }
    int trace(const Word& w) const;  // action on coset 0
};

std::optional<CosetTable> coset_enumeration(const Presentation& p, Budget& budget);

// Bounded search for a sequence of relator insertions taking `start` to the
// empty word. Sound but incomplete.
Verdict rewrite_to_identity(const Presentation& p, const Word& start, Budget& budget);

// Cached decision machinery for one presentation: the simplified isomorphic
// copy, abelianization data over it, and (attempted once, on demand) a
// closed coset table.
class GroupContext {
public:
    GroupContext(Presentation p, Budget& budget);

    const Presentation& original() const { return original_; }
    const SimplifyResult& simplified() const { return simp_; }
    bool free_after_simplify() const { return simp_.presentation.relators.empty(); }
    const AbelianInvariants& invariants() const { return invariants_; }

    // Freely reduced image of an original-generator word in the simplified
    // presentation. Equal normal forms always mean equal group elements;
    // in a relator-free simplified presentation the converse holds too.
    Word normal_form(const Word& w) const;
    void append_normal(Word& nf, std::int32_t original_letter) const;

    // Is the abelianized image of this simplified-generator word zero?
    bool abelian_zero(const Word& simplified_word) const;

    Verdict equal(const Word& w1, const Word& w2, Budget& budget);
    // Same decision over already-computed normal forms.
    Verdict equal_normal(const Word& nf1, const Word& nf2, Budget& budget);
    Verdict trivial(Budget& budget);

private:
    const CosetTable* table(Budget& budget);

    Presentation original_;
    SimplifyResult simp_;
    AbelianInvariants invariants_;
    SmithResult lattice_;  // of the simplified relator matrix
    std::optional<CosetTable> table_;
    bool table_attempted_ = false;
};

// One-shot forms of the decision procedures.
Verdict equal_in_group(const Presentation& p, const Word& w1, const Word& w2,
                       Budget& budget);
Verdict is_trivial_group(const Presentation& p, Budget& budget);

}  // namespace chaincover

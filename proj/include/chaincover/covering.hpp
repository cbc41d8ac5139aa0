#pragma once

#include <memory>
#include <optional>

#include "chaincover/homotopy.hpp"

namespace chaincover {

// One homotopy class of based chains, truncated at the ball radius. The
// class word is the freely reduced generator word of the first chain that
// reached it; the normal form is its image in the simplified presentation
// and is what class resolution compares.
struct CoveringVertex {
    int endpoint = -1;
    Word class_word;
    Word normal_form;
    Chain chain;  // representative, from the basepoint
    int depth = 0;
    bool complete = true;
    bool expanded = false;
};

struct MergeEvent {
    int vertex;            // kept vertex id
    Word arriving_word;    // the word that merged into it
    std::string certificate;
};

// Truncated model of the space of based-chain classes at one scale: breadth
// first over single-point extensions, with same-endpoint states identified
// when the group engine certifies their words equal. Unknown verdicts keep
// states separate and mark them incomplete; certified merges are never
// wrong, so growing the radius only refines the picture.
struct CoveringBall {
    FiniteSpace space;
    Entourage scale;
    PresentationBundle bundle;
    std::shared_ptr<GroupContext> context;
    int radius = 0;

    std::vector<CoveringVertex> vertices;  // id 0 = basepoint vertex
    std::vector<std::pair<int, int>> estar_edges;  // at F = scale, with loops
    std::vector<MergeEvent> merge_log;
    int unknown_merges = 0;
    bool clipped = false;  // expansion stopped at the radius

    // Vertex ids sorted by (endpoint, shortlex class word).
    std::vector<int> report_order() const;
    // Resolve a class against the existing vertices. unknown is set when a
    // comparison came back Unknown (the result is then nullopt).
    std::optional<int> resolve(int endpoint, const Word& normal_form,
                               Budget& budget, bool* unknown) const;
};

CoveringBall build_covering_ball(const FiniteSpace& space, const Entourage& e,
                                 int radius, Budget& budget);

// All pairs of ball vertices related by the F-basis relation: same class up
// to replacing or extending the last point by an F-related one. Reflexive
// (contains every (v,v)); symmetric.
struct EstarPairs {
    std::vector<std::pair<int, int>> pairs;
    bool complete = true;      // every step target resolved inside the ball
    int unknown_events = 0;
};
EstarPairs estar_pairs(const CoveringBall& ball, const Entourage& f, Budget& budget);

// F-basis component of the basepoint vertex: the classes represented by
// F-chains, as far as the truncation shows them.
struct ComponentResult {
    std::vector<int> vertices;  // sorted ids
    bool closure_complete = true;
    int unknown_events = 0;
};
ComponentResult basepoint_component(const CoveringBall& ball, const Entourage& f,
                                    Budget& budget);

// Runs the component at every rung of a nested inner ladder and reports the
// longest stable suffix. Uniqueness of the component holds only in the
// limit; a stable suffix is the finite-scale evidence for it.
struct StabilityRung {
    std::string provenance;
    std::vector<int> component;
    bool closure_complete = true;
};
struct StabilizedComponent {
    std::vector<StabilityRung> rungs;
    bool stable = false;
    int stable_from = -1;        // first index of the stable suffix
    bool low_confidence = false; // single-rung ladder
    std::vector<int> component;  // final rung = candidate A
};
StabilizedComponent stabilized_component(const CoveringBall& ball,
                                         const std::vector<Entourage>& ladder,
                                         Budget& budget);

// Endpoint projection of the F-basis pairs inside A x A, plus diagonal:
// the covering relation extracted from the scale. Every pair carries the
// vertex pair witnessing it.
struct PairWitness {
    std::pair<int, int> points;
    int vertex_a = -1;
    int vertex_b = -1;
};
struct ExtractionResult {
    Entourage relation;
    std::vector<PairWitness> witnesses;  // sorted by point pair
    bool closure_complete = true;
};
// saturation_witness is the relation whose basis components A must union
// (the relation that produced A); F itself is usually coarser and its pairs
// may leave A. Throws when A is not saturated under the witness.
ExtractionResult extract_covering_relation(const CoveringBall& ball,
                                           const std::vector<int>& component,
                                           const Entourage& f,
                                           const Entourage& saturation_witness,
                                           Budget& budget);
// Convenience form for components saturated under F itself.
ExtractionResult extract_covering_relation(const CoveringBall& ball,
                                           const std::vector<int>& component,
                                           const Entourage& f, Budget& budget);

// Per-vertex test whether the class is represented by an F-chain, plus the
// aggregate over the truncation.
enum class SurjectivityVerdict { Surjective, NotSurjective, Unknown };
struct PhiImageReport {
    std::vector<Verdict> per_vertex;  // True = represented by an F-chain
    SurjectivityVerdict aggregate = SurjectivityVerdict::Unknown;
    int witness_vertex = -1;               // first certified-missed vertex
    std::vector<int> missed_vertices;      // all certified misses
    bool closure_complete = true;
};
PhiImageReport phi_image_check(const CoveringBall& ball, const Entourage& f,
                               Budget& budget);

// For each off-diagonal F-pair (x,y): is there a D-chain from x to y whose
// class at scale E equals the class of the two-point chain {x,y}?
struct EShortPair {
    std::pair<int, int> points;
    Verdict verdict;
    Chain witness;  // D-chain, when verdict is True
};
struct EShortReport {
    std::vector<EShortPair> pairs;
    Truth aggregate = Truth::Unknown;
};
EShortReport e_short_join_check(const FiniteSpace& space, const Entourage& e,
                                const Entourage& f, const Entourage& d,
                                Budget& budget);

}  // namespace chaincover

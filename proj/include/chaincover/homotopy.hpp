#pragma once

#include "chaincover/group.hpp"
#include "chaincover/rips.hpp"
#include "chaincover/space.hpp"

namespace chaincover {

// An E-chain is a point-id sequence whose consecutive pairs lie in the
// entourage it is asserted against; the entourage travels alongside as an
// explicit argument. Repeated points are legal (diagonal steps).
using Chain = std::vector<int>;

bool is_echain(const Chain& chain, const Entourage& e);

enum class MoveKind { Insert, Delete };

// One elementary homotopy move: insert or delete an interior point, valid
// only when the result is still an E-chain. Endpoints never move.
Chain elementary_move(const Chain& chain, std::size_t position, MoveKind kind,
                      int point, const Entourage& e);

// Edge-path presentation of the loop classes at the tree's root: one
// generator per non-tree edge of the root component, one relator per
// triangle. A generator is positive when its edge (u,v), u<v, is traversed
// u -> v.
struct PresentationBundle {
    RipsGraph graph;
    SpanningTree tree;
    Presentation pres;
    std::vector<std::pair<int, int>> generator_edges;  // u<v, sorted

    // Signed generator for the directed step a->b; 0 for diagonal or tree
    // steps. Throws if (a,b) is not an edge.
    std::int32_t gen_value(int a, int b) const;
};

PresentationBundle presentation(const RipsGraph& graph, const SpanningTree& tree);

// The word of a based chain: the product of generator values along its
// steps, freely reduced. Appending the reverse tree path to the basepoint
// would change nothing, since tree steps carry no letters; the word is the
// chain's loop class in the presented group.
Word chain_to_word(const Chain& chain, const PresentationBundle& bundle);

// A based loop realizing the word: each letter contributes the tree path to
// its edge, the edge itself, and the tree path back.
Chain word_to_chain(const Word& w, const PresentationBundle& bundle);

}  // namespace chaincover

#pragma once

#include "chaincover/homotopy.hpp"

namespace chaincover {

// Exhaustive ground truth for tiny instances: breadth-first search over the
// insert/delete move graph. Equivalent is definitive; a miss only means no
// homotopy exists through chains within the slack, so it is not a proof of
// inequivalence.
struct OracleLimits {
    int max_points = 8;
    int max_len = 6;
    std::uint64_t max_states = 5'000'000;
};

struct OracleVerdict {
    bool equivalent = false;
    std::vector<Chain> move_sequence;  // c1 .. c2, one move apart each
    int slack = 0;
    bool state_cap_hit = false;
};

// Both chains must share endpoints and be valid E-chains. Intermediate
// chains are capped at max(len1, len2) + slack steps.
OracleVerdict oracle_homotopic(const Entourage& e, const Chain& c1,
                               const Chain& c2, int slack,
                               const OracleLimits& limits = {});

// Partition of all based chains of at most maxlen steps by move-graph
// connectivity through chains of at most maxlen + slack steps. The guarded
// reference model of a truncated ball.
struct ClassPartition {
    std::vector<Chain> chains;  // enumeration order: by length, then lexicographic
    std::vector<int> class_id;
    int class_count = 0;
};

ClassPartition enumerate_classes(const Entourage& e, int basepoint, int maxlen,
                                 int slack, const OracleLimits& limits = {});

}  // namespace chaincover

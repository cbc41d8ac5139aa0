#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chaincover/covering.hpp"

namespace chaincover {

struct AnalysisConfig {
    std::uint64_t budget = kDefaultBudget;
    int radius = -1;    // negative: 2 x diameter of the finest component
    int radius_cap = 64;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool crossings = true;  // bonding / joinability / extraction records
};

struct ScaleRecord {
    std::string descriptor;  // exact provenance string, never a float
    int edge_count = 0;
    int triangle_count = 0;
    bool chain_connected = false;
    int generators = 0;
    int relators = 0;
    int generators_simplified = 0;
    int relators_simplified = 0;
    AbelianInvariants invariants;
    Verdict triviality;
};

struct CrossRecord {
    int coarse_index = 0;
    int fine_index = 0;
    SurjectivityVerdict bonding = SurjectivityVerdict::Unknown;
    int bonding_witness_endpoint = -1;
    Chain bonding_witness_chain;
    bool ball_clipped = false;
    int unknown_merges = 0;
    EShortReport eshort;
    StabilizedComponent stability;
    ExtractionResult extraction;
};

struct RunMetadata {
    std::uint64_t budget = kDefaultBudget;
    int radius = 0;       // resolved value actually used
    int radius_cap = 64;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::int64_t wall_ms = 0;
};

struct ScaleReport {
    std::vector<ScaleRecord> scales;
    std::vector<CrossRecord> crossings;
    RunMetadata meta;

    int unknown_count() const;  // budgeted verdicts left undecided
};

// Runs the whole per-scale and cross-scale pipeline over a nested ladder
// (each rung refining the previous). Deterministic given the config.
ScaleReport analyze_ladder(const FiniteSpace& space,
                           const std::vector<Entourage>& ladder,
                           const AnalysisConfig& config = {});

// Ladder positions where the abelian invariants change from the previous
// rung, or where the bonding map into the previous rung misses classes.
std::vector<int> critical_scales(const ScaleReport& report);

std::string render_json(const ScaleReport& report);
std::string render_csv(const ScaleReport& report);
std::string render_svg(const ScaleReport& report);

// Writes report.<format> for each requested format into dir.
// Formats: json, csv, svg. Throws on anything else.
void render_report(const ScaleReport& report, const std::string& dir,
                   const std::set<std::string>& formats);

}  // namespace chaincover

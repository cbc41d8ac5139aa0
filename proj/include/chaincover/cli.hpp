#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "chaincover/analysis.hpp"

namespace chaincover {

// Exit-code policy shared by every command: 0 clean, 1 hard error (bad
// input, schema violation, invalid ladder), 2 computed but some budgeted
// verdicts stayed Unknown (suppressed by unknown_ok).

struct RunConfig {
    std::string input_path;
    std::string input_kind = "auto";  // points-csv | distance-json | relation-json
    int basepoint = 0;
    std::vector<std::string> scales;  // exact decimal literal or @relation.json
    std::uint64_t budget = kDefaultBudget;
    int radius = -1;
    int radius_cap = 64;
    int jobs = 1;
    std::string out_dir = "out";
    std::set<std::string> formats{"json"};
    bool unknown_ok = false;
    std::uint64_t seed = 0;
};

int cmd_analyze(const RunConfig& config, std::ostream& diag);

struct ExtractConfig {
    std::string input_path;
    std::string input_kind = "auto";
    int basepoint = 0;
    std::string outer;               // scale literal or @relation.json
    std::vector<std::string> inner;  // nested ladder, coarse to fine
    std::uint64_t budget = kDefaultBudget;
    int radius = -1;
    int radius_cap = 64;
    std::string out_path = "extraction.json";
    bool unknown_ok = false;
};

int cmd_extract(const ExtractConfig& config, std::ostream& diag);

struct ExexConfig {
    std::string step = "0.25";
    std::uint64_t budget = kDefaultBudget;
    int radius = -1;
    int radius_cap = 64;
    std::string out_path;  // optional extraction dump
    bool oracle = false;   // brute-force cross-check on a guarded subgrid
};

// Self-contained demonstration: builds the 1-D grid with the three-interval
// relation, extracts the covering relation, and checks the expected facts,
// narrating each one. Exit 0 only if every fact is confirmed.
int cmd_exex(const ExexConfig& config, std::ostream& out);

}  // namespace chaincover

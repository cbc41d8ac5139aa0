#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaincover/cli.hpp"

namespace {

std::uint64_t env_budget() {
    if (const char* v = std::getenv("CHAINCOVER_BUDGET")) {
        try {
            return std::stoull(v);
        } catch (...) {
            std::cerr << "warning: ignoring invalid CHAINCOVER_BUDGET\n";
        }
    }
    return chaincover::kDefaultBudget;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-scale chain-homotopy analysis of finite spaces"};
    app.require_subcommand(1);
    const std::uint64_t default_budget = env_budget();

    chaincover::RunConfig run;
    run.budget = default_budget;
    std::string run_scales, run_formats = "json";
    auto* analyze = app.add_subcommand(
        "analyze", "per-scale invariants and cross-scale checks over a ladder");
    analyze->add_option("--input", run.input_path, "points CSV, distance JSON, or relation JSON")
        ->required();
    analyze->add_option("--input-kind", run.input_kind,
                        "auto|points-csv|distance-json|relation-json");
    analyze->add_option("--basepoint", run.basepoint, "basepoint id");
    analyze->add_option("--scales", run_scales,
                        "comma list, coarse to fine: decimal thresholds or @relation.json")
        ->required();
    analyze->add_option("--budget", run.budget, "steps per budgeted decision");
    analyze->add_option("--radius", run.radius, "covering-ball radius (default: auto)");
    analyze->add_option("--radius-cap", run.radius_cap, "cap for the automatic radius");
    analyze->add_option("--jobs", run.jobs, "parallel per-scale workers");
    analyze->add_option("--out", run.out_dir, "output directory");
    analyze->add_option("--format", run_formats, "comma list of json,csv,svg");
    analyze->add_option("--seed", run.seed, "seed recorded in run metadata");
    analyze->add_flag("--unknown-ok", run.unknown_ok,
                      "exit 0 even when verdicts stay Unknown");

    chaincover::ExtractConfig ext;
    ext.budget = default_budget;
    std::string ext_inner;
    auto* extract = app.add_subcommand(
        "extract", "extract the covering relation from an outer relation");
    extract->add_option("--input", ext.input_path, "input space")->required();
    extract->add_option("--input-kind", ext.input_kind,
                        "auto|points-csv|distance-json|relation-json");
    extract->add_option("--basepoint", ext.basepoint, "basepoint id");
    extract->add_option("--outer", ext.outer, "outer relation (threshold or @file)")
        ->required();
    extract->add_option("--inner", ext_inner,
                        "comma list of inner ladder rungs, coarse to fine");
    extract->add_option("--budget", ext.budget, "steps per budgeted decision");
    extract->add_option("--radius", ext.radius, "covering-ball radius");
    extract->add_option("--radius-cap", ext.radius_cap, "cap for the automatic radius");
    extract->add_option("--out", ext.out_path, "output file");
    extract->add_flag("--unknown-ok", ext.unknown_ok,
                      "exit 0 even when verdicts stay Unknown");

    chaincover::ExexConfig exex;
    exex.budget = default_budget;
    auto* demo = app.add_subcommand(
        "exex", "built-in 1-D grid demonstration of covering extraction");
    demo->add_option("--step", exex.step, "grid step (exact decimal)");
    demo->add_option("--budget", exex.budget, "steps per budgeted decision");
    demo->add_option("--radius", exex.radius, "covering-ball radius");
    demo->add_option("--out", exex.out_path, "also write the extraction JSON here");
    demo->add_flag("--oracle", exex.oracle)->group("");  // hidden cross-check

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        run.scales = split_list(run_scales);
        run.formats.clear();
        for (const auto& f : split_list(run_formats)) run.formats.insert(f);
        return chaincover::cmd_analyze(run, std::cout);
    }
    if (extract->parsed()) {
        ext.inner = split_list(ext_inner);
        return chaincover::cmd_extract(ext, std::cout);
    }
    return chaincover::cmd_exex(exex, std::cout);
}

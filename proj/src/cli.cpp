#include "chaincover/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "chaincover/fixtures.hpp"
#include "chaincover/io.hpp"
#include "chaincover/oracle.hpp"

namespace chaincover {

namespace {

using nlohmann::json;

FiniteSpace load_space(const std::string& path, const std::string& kind,
                       int basepoint) {
    std::string k = kind;
    if (k == "auto") {
        if (path.ends_with(".csv")) {
            k = "points-csv";
        } else {
            json doc = json::parse(std::ifstream(path));
            k = doc.contains("d") ? "distance-json" : "relation-json";
        }
    }
    if (k == "points-csv") return load_points_csv(path, basepoint);
    if (k == "distance-json") return load_distance_table_json(path, basepoint);
    if (k == "relation-json")
        return load_relation_space_json(path, basepoint).first;
    throw std::runtime_error("unknown input kind: " + kind);
}

Entourage load_scale(const std::string& ref, const FiniteSpace& space) {
    if (!ref.empty() && ref[0] == '@')
        return load_relation_json(ref.substr(1), space);
    return entourage_from_scale(space, parse_decimal(ref));
}

int unknown_exit(int unknowns, bool unknown_ok, std::ostream& diag) {
    if (unknowns > 0 && !unknown_ok) {
        diag << "note: " << unknowns
             << " verdict(s) remained Unknown within budget\n";
        return 2;
    }
    return 0;
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& diag) {
    try {
        FiniteSpace space =
            load_space(config.input_path, config.input_kind, config.basepoint);
        std::vector<Entourage> ladder;
        for (const auto& ref : config.scales)
            ladder.push_back(load_scale(ref, space));
        AnalysisConfig ac;
        ac.budget = config.budget;
        ac.radius = config.radius;
        ac.radius_cap = config.radius_cap;
        ac.seed = config.seed;
        ac.jobs = config.jobs;
        ScaleReport report = analyze_ladder(space, ladder, ac);
        render_report(report, config.out_dir, config.formats);
        diag << "report written to " << config.out_dir << " ("
             << report.scales.size() << " scales, "
             << report.crossings.size() << " crossings)\n";
        return unknown_exit(report.unknown_count(), config.unknown_ok, diag);
    } catch (const std::exception& ex) {
        diag << "error: " << ex.what() << "\n";
        return 1;
    }
}

namespace {

json chain_json(const Chain& chain) {
    json out = json::array();
    for (int p : chain) out.push_back(p);
    return out;
}

json extraction_json(const CoveringBall& ball,
                     const StabilizedComponent& stability,
                     const ExtractionResult& extraction,
                     const std::vector<std::string>& warnings) {
    json doc;
    doc["schema"] = 1;
    doc["outer"] = ball.scale.provenance();
    json rungs = json::array();
    for (const auto& r : stability.rungs)
        rungs.push_back({{"scale", r.provenance},
                         {"size", r.component.size()},
                         {"closure_complete", r.closure_complete}});
    doc["stability"] = {{"stable", stability.stable},
                        {"stable_from", stability.stable_from},
                        {"low_confidence", stability.low_confidence},
                        {"rungs", rungs}};
    doc["ball"] = {{"vertices", ball.vertices.size()},
                   {"radius", ball.radius},
                   {"unknown_merges", ball.unknown_merges},
                   {"clipped", ball.clipped}};
    doc["component_size"] = stability.component.size();
    json pairs = json::array();
    for (const auto& p : extraction.relation.pairs())
        pairs.push_back({p.first, p.second});
    doc["relation"] = {{"provenance", extraction.relation.provenance()},
                       {"pairs", pairs}};
    json witnesses = json::array();
    for (const auto& w : extraction.witnesses) {
        witnesses.push_back(
            {{"pair", {w.points.first, w.points.second}},
             {"a",
              {{"endpoint", ball.vertices[w.vertex_a].endpoint},
               {"chain", chain_json(ball.vertices[w.vertex_a].chain)}}},
             {"b",
              {{"endpoint", ball.vertices[w.vertex_b].endpoint},
               {"chain", chain_json(ball.vertices[w.vertex_b].chain)}}}});
    }
    doc["witnesses"] = witnesses;
    doc["closure_complete"] = extraction.closure_complete;
    doc["warnings"] = warnings;
    return doc;
}

}  // namespace

int cmd_extract(const ExtractConfig& config, std::ostream& diag) {
    try {
        FiniteSpace space =
            load_space(config.input_path, config.input_kind, config.basepoint);
        Entourage outer = load_scale(config.outer, space);
        std::vector<Entourage> inner;
        for (const auto& ref : config.inner)
            inner.push_back(load_scale(ref, space));
        if (inner.empty()) inner.push_back(outer);
        for (std::size_t i = 0; i < inner.size(); ++i) {
            const Entourage& prev = i == 0 ? outer : inner[i - 1];
            if (!inner[i].refines(prev))
                throw std::runtime_error("ladder not nested at rung " +
                                         std::to_string(i));
        }

        int radius = config.radius;
        if (radius < 0) {
            // Same default as analysis: twice the finest component diameter.
            RipsGraph finest = rips_graph(space, inner.back());
            radius = std::min(2 * component_diameter(finest, space.basepoint()),
                              config.radius_cap);
            if (radius == 0) radius = 1;
        }

        Budget budget(config.budget);
        CoveringBall ball = build_covering_ball(space, outer, radius, budget);
        StabilizedComponent stability = stabilized_component(ball, inner, budget);
        ExtractionResult extraction = extract_covering_relation(
            ball, stability.component, outer, inner.back(), budget);

        std::vector<std::string> warnings;
        if (outer.pairs().empty())
            warnings.push_back("no motion possible: outer relation is the diagonal");
        if (!stability.stable)
            warnings.push_back("basepoint component did not stabilize on this ladder");
        if (stability.low_confidence)
            warnings.push_back("single-rung ladder: stability is low-confidence");

        json doc = extraction_json(ball, stability, extraction, warnings);
        std::ofstream out(config.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + config.out_path);
        out << doc.dump(2) << "\n";
        diag << "extraction written to " << config.out_path << " ("
             << extraction.relation.pairs().size() << " pairs)\n";
        for (const auto& w : warnings) diag << "warning: " << w << "\n";

        int unknowns = ball.unknown_merges;
        for (const auto& r : stability.rungs)
            if (!r.closure_complete) ++unknowns;
        return unknown_exit(unknowns, config.unknown_ok, diag);
    } catch (const std::exception& ex) {
        diag << "error: " << ex.what() << "\n";
        return 1;
    }
}

int cmd_exex(const ExexConfig& config, std::ostream& out) {
    try {
        Rational step = parse_decimal(config.step);
        if (step <= 0) throw std::runtime_error("step must be positive");
        FiniteSpace space = fixtures::grid(step, Rational(-6), Rational(6));
        out << "1-D grid demo: step " << format_exact(step)
            << " on [-6,6], " << space.size() << " points, basepoint id "
            << space.basepoint() << " (coordinate 0)\n";

        Entourage outer =
            entourage_from_diff_intervals(space, fixtures::demo_intervals());
        out << "outer relation " << outer.provenance() << ": "
            << outer.pairs().size() << " pairs\n";
        if (step >= 1) {
            out << "warning: degenerate grid, the interval (-1,1) contains no "
                   "nonzero grid difference; nothing to demonstrate\n";
            return 0;
        }

        // Inner rungs scale with the grid so they refine the outer relation
        // at every step size; at step 0.25 they are the 0.6 / 0.3 scales.
        Entourage inner1 = intersect(
            outer, entourage_from_scale(space, step * Rational(12, 5)));
        Entourage inner2 = intersect(
            outer, entourage_from_scale(space, step * Rational(6, 5)));
        out << "inner ladder: " << inner1.provenance() << " ("
            << inner1.pairs().size() << " pairs), " << inner2.provenance()
            << " (" << inner2.pairs().size() << " pairs)\n";

        int radius = config.radius;
        if (radius < 0) {
            // Deep enough to hold every small-step class plus winding slack.
            radius = std::min(config.radius_cap, 4 * 12);
        }
        Budget budget(config.budget);
        CoveringBall ball = build_covering_ball(space, outer, radius, budget);
        out << "covering ball: radius " << ball.radius << ", "
            << ball.vertices.size() << " vertices, " << ball.unknown_merges
            << " unknown merges\n";

        StabilizedComponent stability =
            stabilized_component(ball, {inner1, inner2}, budget);
        out << "basepoint component: " << stability.component.size()
            << " vertices, "
            << (stability.stable ? "stabilized" : "NOT stabilized")
            << " from rung " << stability.stable_from << "\n";

        bool all_ok = stability.stable;

        // The class of {0,3} must sit outside the component.
        int id3 = -1;
        for (int i = 0; i < space.size(); ++i)
            if (space.coords(i)[0] == 3) id3 = i;
        if (id3 >= 0 && outer.contains(space.basepoint(), id3)) {
            Chain jump{space.basepoint(), id3};
            Word nf = ball.context->normal_form(chain_to_word(jump, ball.bundle));
            bool unknown = false;
            std::optional<int> vertex =
                ball.resolve(id3, nf, budget, &unknown);
            bool outside =
                vertex &&
                !std::binary_search(stability.component.begin(),
                                    stability.component.end(), *vertex);
            out << "class of {0,3} outside the component: "
                << (outside ? "CONFIRMED" : "MISMATCH") << "\n";
            all_ok = all_ok && outside;

            Budget phi_budget(config.budget);
            PhiImageReport phi = phi_image_check(ball, inner2, phi_budget);
            bool witnessed =
                phi.aggregate == SurjectivityVerdict::NotSurjective && vertex &&
                std::find(phi.missed_vertices.begin(), phi.missed_vertices.end(),
                          *vertex) != phi.missed_vertices.end();
            out << "phi-image check at the finest rung: "
                << (phi.aggregate == SurjectivityVerdict::NotSurjective
                        ? "not surjective"
                        : "unexpected verdict")
                << ", witness class {0,3}: "
                << (witnessed ? "CONFIRMED" : "MISMATCH") << "\n";
            all_ok = all_ok && witnessed;
        } else {
            out << "note: 3 is not a grid point at this step; skipping the "
                   "{0,3} checks\n";
        }

        ExtractionResult extraction = extract_covering_relation(
            ball, stability.component, outer, inner2, budget);
        std::vector<std::pair<int, int>> expected;
        for (int i = 0; i < space.size(); ++i)
            for (int j = i + 1; j < space.size(); ++j) {
                Rational d = space.diff1d(j, i);
                if (d < 0) d = -d;
                if (d != 0 && d < 1) expected.emplace_back(i, j);
            }
        bool extract_ok = extraction.relation.pairs() == expected;
        out << "extracted relation equals the grid pairs with |dx| < 1: "
            << (extract_ok ? "CONFIRMED" : "MISMATCH") << " ("
            << extraction.relation.pairs().size() << " pairs)\n";
        all_ok = all_ok && extract_ok;

        if (config.oracle) {
            // Guarded brute-force cross-check on a 7-point subgrid.
            FiniteSpace mini = fixtures::grid(Rational(3, 4), Rational(-9, 4),
                                              Rational(9, 4));
            Entourage mini_rel =
                entourage_from_diff_intervals(mini, fixtures::demo_intervals());
            ClassPartition classes =
                enumerate_classes(mini_rel, mini.basepoint(), 4, 3);
            Budget mini_budget(config.budget);
            CoveringBall mini_ball =
                build_covering_ball(mini, mini_rel, 4, mini_budget);
            bool agree =
                classes.class_count ==
                    static_cast<int>(mini_ball.vertices.size()) &&
                mini_ball.unknown_merges == 0;
            out << "oracle cross-check on the 7-point subgrid: "
                << classes.class_count << " classes vs "
                << mini_ball.vertices.size() << " ball vertices: "
                << (agree ? "CONFIRMED" : "MISMATCH") << "\n";
            all_ok = all_ok && agree;
        }

        if (!config.out_path.empty()) {
            std::vector<std::string> warnings;
            json doc = extraction_json(ball, stability, extraction, warnings);
            std::ofstream f(config.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + config.out_path);
            f << doc.dump(2) << "\n";
        }

        out << (all_ok ? "result: all checks confirmed\n"
                       : "result: MISMATCH detected\n");
        return all_ok ? 0 : 1;
    } catch (const std::exception& ex) {
        out << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace chaincover

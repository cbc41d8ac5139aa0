#include "chaincover/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chaincover {

namespace {

ScaleRecord scale_record(const FiniteSpace& space, const Entourage& e,
                         std::uint64_t budget_limit) {
    Budget budget(budget_limit);
    ScaleRecord rec;
    rec.descriptor = e.provenance();
    RipsGraph graph = rips_graph(space, e);
    rec.edge_count = static_cast<int>(graph.edges.size());
    rips_triangles(graph, [&](int, int, int) { rec.triangle_count += 1; });
    rec.chain_connected = chain_components(space, e).size() == 1;

    SpanningTree tree = spanning_tree(graph, space.basepoint());
    PresentationBundle bundle = presentation(graph, tree);
    rec.generators = bundle.pres.generators;
    rec.relators = static_cast<int>(bundle.pres.relators.size());

    GroupContext ctx(bundle.pres, budget);
    rec.generators_simplified = ctx.simplified().presentation.generators;
    rec.relators_simplified =
        static_cast<int>(ctx.simplified().presentation.relators.size());
    rec.invariants = ctx.invariants();
    rec.triviality = ctx.trivial(budget);
    return rec;
}

}  // namespace

int ScaleReport::unknown_count() const {
    int n = 0;
    for (const auto& s : scales)
        if (s.triviality.is_unknown()) ++n;
    for (const auto& c : crossings) {
        if (c.bonding == SurjectivityVerdict::Unknown) ++n;
        for (const auto& p : c.eshort.pairs)
            if (p.verdict.is_unknown()) ++n;
        n += c.unknown_merges;
    }
    return n;
}

ScaleReport analyze_ladder(const FiniteSpace& space,
                           const std::vector<Entourage>& ladder,
                           const AnalysisConfig& config) {
    if (ladder.empty()) throw std::invalid_argument("empty scale ladder");
    for (const auto& e : ladder)
        if (e.point_count() != space.size())
            throw std::invalid_argument("entourage does not match space");
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (!ladder[i + 1].refines(ladder[i]))
            throw std::invalid_argument("ladder not nested");

    auto start = std::chrono::steady_clock::now();
    ScaleReport report;

    int radius = config.radius;
    if (radius < 0) {
        RipsGraph finest = rips_graph(space, ladder.back());
        radius = std::min(2 * component_diameter(finest, space.basepoint()),
                          config.radius_cap);
    }
    report.meta = {config.budget, radius,        config.radius_cap,
                   config.seed,   config.jobs,   0};

    // Per-scale records are independent; fan out when asked to.
    report.scales.resize(ladder.size());
    if (config.jobs > 1) {
        std::vector<std::future<ScaleRecord>> tasks;
        for (const auto& e : ladder)
            tasks.push_back(std::async(std::launch::async, [&space, &e, &config] {
                return scale_record(space, e, config.budget);
            }));
        for (std::size_t i = 0; i < tasks.size(); ++i)
            report.scales[i] = tasks[i].get();
    } else {
        for (std::size_t i = 0; i < ladder.size(); ++i)
            report.scales[i] = scale_record(space, ladder[i], config.budget);
    }

    if (config.crossings) {
        for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
            CrossRecord cross;
            cross.coarse_index = static_cast<int>(i);
            cross.fine_index = static_cast<int>(i + 1);

            Budget budget(config.budget);
            CoveringBall ball = build_covering_ball(space, ladder[i], radius, budget);
            cross.ball_clipped = ball.clipped;
            cross.unknown_merges = ball.unknown_merges;

            PhiImageReport phi = phi_image_check(ball, ladder[i + 1], budget);
            cross.bonding = phi.aggregate;
            if (phi.witness_vertex >= 0) {
                cross.bonding_witness_endpoint =
                    ball.vertices[phi.witness_vertex].endpoint;
                cross.bonding_witness_chain = ball.vertices[phi.witness_vertex].chain;
            }

            Budget eshort_budget(config.budget);
            cross.eshort = e_short_join_check(space, ladder[i], ladder[i],
                                              ladder[i + 1], eshort_budget);

            Budget extract_budget(config.budget);
            std::vector<Entourage> inner(ladder.begin() + i + 1, ladder.end());
            cross.stability = stabilized_component(ball, inner, extract_budget);
            cross.extraction = extract_covering_relation(
                ball, cross.stability.component, ladder[i], ladder.back(),
                extract_budget);
            report.crossings.push_back(std::move(cross));
        }
    }

    report.meta.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

std::vector<int> critical_scales(const ScaleReport& report) {
    std::vector<int> positions;
    for (std::size_t i = 1; i < report.scales.size(); ++i)
        if (!(report.scales[i].invariants == report.scales[i - 1].invariants))
            positions.push_back(static_cast<int>(i));
    for (const auto& c : report.crossings)
        if (c.bonding == SurjectivityVerdict::NotSurjective)
            positions.push_back(c.fine_index);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()),
                    positions.end());
    return positions;
}

namespace {

using nlohmann::json;

const char* truth_string(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        default: return "unknown";
    }
}

const char* surjectivity_string(SurjectivityVerdict v) {
    switch (v) {
        case SurjectivityVerdict::Surjective: return "surjective";
        case SurjectivityVerdict::NotSurjective: return "not_surjective";
        default: return "unknown";
    }
}

json invariants_json(const AbelianInvariants& inv) {
    json torsion = json::array();
    for (const auto& t : inv.torsion) torsion.push_back(t.str());
    return {{"free_rank", inv.free_rank}, {"torsion", torsion}};
}

json verdict_json(const Verdict& v) {
    return {{"value", truth_string(v.value)},
            {"certificate", v.certificate},
            {"budget_spent", v.budget_spent}};
}

}  // namespace

std::string render_json(const ScaleReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["meta"] = {{"budget", report.meta.budget},
                   {"radius", report.meta.radius},
                   {"radius_cap", report.meta.radius_cap},
                   {"seed", report.meta.seed},
                   {"jobs", report.meta.jobs},
                   {"wall_ms", report.meta.wall_ms}};
    doc["scales"] = json::array();
    for (std::size_t i = 0; i < report.scales.size(); ++i) {
        const auto& s = report.scales[i];
        json row = {{"index", i},
                    {"scale", s.descriptor},
                    {"edges", s.edge_count},
                    {"triangles", s.triangle_count},
                    {"chain_connected", s.chain_connected},
                    {"generators", s.generators},
                    {"relators", s.relators},
                    {"generators_simplified", s.generators_simplified},
                    {"relators_simplified", s.relators_simplified},
                    {"invariants", invariants_json(s.invariants)},
                    {"trivial", verdict_json(s.triviality)}};
        doc["scales"].push_back(row);
    }
    doc["crossings"] = json::array();
    for (const auto& c : report.crossings) {
        json row;
        row["coarse"] = c.coarse_index;
        row["fine"] = c.fine_index;
        row["bonding"] = surjectivity_string(c.bonding);
        if (c.bonding_witness_endpoint >= 0)
            row["bonding_witness"] = {{"endpoint", c.bonding_witness_endpoint},
                                      {"chain", c.bonding_witness_chain}};
        row["ball_clipped"] = c.ball_clipped;
        row["unknown_merges"] = c.unknown_merges;

        int yes = 0, no = 0, unknown = 0;
        json no_pairs = json::array();
        for (const auto& p : c.eshort.pairs) {
            if (p.verdict.is_true()) ++yes;
            else if (p.verdict.is_false()) {
                ++no;
                no_pairs.push_back({p.points.first, p.points.second});
            } else ++unknown;
        }
        row["eshort"] = {{"aggregate", truth_string(c.eshort.aggregate)},
                         {"yes", yes},
                         {"no", no},
                         {"unknown", unknown},
                         {"no_pairs", no_pairs}};

        json rungs = json::array();
        for (const auto& r : c.stability.rungs)
            rungs.push_back({{"scale", r.provenance},
                             {"size", r.component.size()},
                             {"closure_complete", r.closure_complete}});
        row["stability"] = {{"stable", c.stability.stable},
                            {"stable_from", c.stability.stable_from},
                            {"low_confidence", c.stability.low_confidence},
                            {"rungs", rungs}};

        json pairs = json::array();
        for (const auto& p : c.extraction.relation.pairs())
            pairs.push_back({p.first, p.second});
        row["extraction"] = {{"scale", c.extraction.relation.provenance()},
                             {"component_size", c.stability.component.size()},
                             {"pairs", pairs},
                             {"closure_complete", c.extraction.closure_complete}};
        doc["crossings"].push_back(row);
    }
    doc["critical_scales"] = critical_scales(report);
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_csv(const ScaleReport& report) {
    std::ostringstream os;
    os << "index,scale,edges,triangles,chain_connected,generators,relators,"
          "generators_simplified,relators_simplified,free_rank,torsion,trivial\n";
    for (std::size_t i = 0; i < report.scales.size(); ++i) {
        const auto& s = report.scales[i];
        std::string torsion;
        for (std::size_t k = 0; k < s.invariants.torsion.size(); ++k) {
            if (k) torsion += "|";
            torsion += s.invariants.torsion[k].str();
        }
        os << i << "," << csv_quote(s.descriptor) << "," << s.edge_count << ","
           << s.triangle_count << "," << (s.chain_connected ? "true" : "false")
           << "," << s.generators << "," << s.relators << ","
           << s.generators_simplified << "," << s.relators_simplified << ","
           << s.invariants.free_rank << "," << torsion << ","
           << truth_string(s.triviality.value) << "\n";
    }
    return os.str();
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const ScaleReport& report) {
    const int n = static_cast<int>(report.scales.size());
    int max_rank = 0;
    for (const auto& s : report.scales)
        max_rank = std::max(max_rank, s.invariants.free_rank);

    const int left = 60, step = 140, right = 40;
    const int top = 30, row = 40, bottom = 70;
    const int width = left + std::max(1, n - 1) * step + right + step;
    const int height = top + (max_rank + 1) * row + bottom;
    auto xpos = [&](int i) { return left + i * step; };
    auto ypos = [&](int rank) { return top + (max_rank - rank) * row + row; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<text x=\"10\" y=\"18\" font-size=\"13\">free rank by scale</text>\n";
    for (int r = 0; r <= max_rank; ++r) {
        os << "<line x1=\"" << left - 8 << "\" y1=\"" << ypos(r) << "\" x2=\""
           << xpos(n - 1) + step / 2 << "\" y2=\"" << ypos(r)
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << left - 32 << "\" y=\"" << ypos(r) + 4
           << "\" font-size=\"12\">" << r << "</text>\n";
    }
    // Step polyline: hold each rank across its scale, jump at the boundary.
    std::ostringstream points;
    for (int i = 0; i < n; ++i) {
        int y = ypos(report.scales[i].invariants.free_rank);
        points << xpos(i) - step / 3 << "," << y << " " << xpos(i) + step / 3
               << "," << y << " ";
    }
    os << "<polyline fill=\"none\" stroke=\"#3366cc\" stroke-width=\"2\" points=\""
       << points.str() << "\"/>\n";
    for (int i = 0; i < n; ++i) {
        os << "<text x=\"" << xpos(i) - step / 3 << "\" y=\"" << height - 40
           << "\" font-size=\"11\">" << xml_escape(report.scales[i].descriptor)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_report(const ScaleReport& report, const std::string& dir,
                   const std::set<std::string>& formats) {
    for (const auto& f : formats)
        if (f != "json" && f != "csv" && f != "svg")
            throw std::invalid_argument("unsupported format: " + f);
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + name + " in " + dir);
        out << body;
    };
    if (formats.count("json")) write("report.json", render_json(report));
    if (formats.count("csv")) write("report.csv", render_csv(report));
    if (formats.count("svg")) write("report.svg", render_svg(report));
}

}  // namespace chaincover

#include "chaincover/covering.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace chaincover {

namespace {

// Exact-match index over (endpoint, normal form). Identical normal forms
// always denote the same class, so the index never lies; it is merely
// incomplete when the simplified presentation still has relators.
struct BallIndex {
    std::map<std::pair<int, Word>, int> exact;
    std::vector<std::vector<int>> by_endpoint;
};

BallIndex index_of(const CoveringBall& ball) {
    BallIndex idx;
    idx.by_endpoint.assign(ball.space.size(), {});
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const auto& v = ball.vertices[i];
        idx.exact[{v.endpoint, v.normal_form}] = static_cast<int>(i);
        idx.by_endpoint[v.endpoint].push_back(static_cast<int>(i));
    }
    return idx;
}

std::optional<int> resolve_indexed(const CoveringBall& ball, const BallIndex& idx,
                                   int endpoint, const Word& nf, Budget& budget,
                                   bool* unknown,
                                   std::vector<int>* unknown_partners = nullptr,
                                   std::string* certificate = nullptr) {
    if (unknown) *unknown = false;
    auto hit = idx.exact.find({endpoint, nf});
    if (hit != idx.exact.end()) {
        if (certificate) *certificate = "identical normal forms";
        return hit->second;
    }
    if (ball.context->free_after_simplify()) return std::nullopt;
    for (int u : idx.by_endpoint[endpoint]) {
        Verdict v = ball.context->equal_normal(nf, ball.vertices[u].normal_form,
                                               budget);
        if (v.is_true()) {
            if (certificate) *certificate = v.certificate;
            return u;
        }
        if (v.is_unknown()) {
            if (unknown) *unknown = true;
            if (unknown_partners) unknown_partners->push_back(u);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<int> CoveringBall::report_order() const {
    std::vector<int> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vertices[a].endpoint != vertices[b].endpoint)
            return vertices[a].endpoint < vertices[b].endpoint;
        return shortlex_less(vertices[a].class_word, vertices[b].class_word);
    });
    return order;
}

std::optional<int> CoveringBall::resolve(int endpoint, const Word& normal_form,
                                         Budget& budget, bool* unknown) const {
    BallIndex idx = index_of(*this);
    return resolve_indexed(*this, idx, endpoint, normal_form, budget, unknown);
}

CoveringBall build_covering_ball(const FiniteSpace& space, const Entourage& e,
                                 int radius, Budget& budget) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (space.size() != e.point_count())
        throw std::invalid_argument("entourage does not match space");

    CoveringBall ball;
    ball.space = space;
    ball.scale = e;
    RipsGraph graph = rips_graph(space, e);
    SpanningTree tree = spanning_tree(graph, space.basepoint());
    ball.bundle = presentation(graph, tree);
    ball.context = std::make_shared<GroupContext>(ball.bundle.pres, budget);
    ball.radius = radius;

    CoveringVertex base;
    base.endpoint = space.basepoint();
    base.chain = {space.basepoint()};
    base.depth = 0;
    ball.vertices.push_back(std::move(base));

    BallIndex idx = index_of(ball);
    for (std::size_t cursor = 0; cursor < ball.vertices.size(); ++cursor) {
        int depth = ball.vertices[cursor].depth;
        int endpoint = ball.vertices[cursor].endpoint;
        if (depth >= radius) {
            for (int y : e.neighbors(endpoint))
                if (y != endpoint) {
                    ball.clipped = true;
                    break;
                }
            continue;
        }
        ball.vertices[cursor].expanded = true;
        for (int y : e.neighbors(endpoint)) {
            if (y == endpoint) continue;  // diagonal step, same class
            std::int32_t letter = ball.bundle.gen_value(endpoint, y);
            Word word = ball.vertices[cursor].class_word;
            if (letter != 0) push_reduced(word, letter);
            Word nf = ball.vertices[cursor].normal_form;
            if (letter != 0) ball.context->append_normal(nf, letter);

            bool unknown = false;
            std::vector<int> partners;
            std::string cert;
            std::optional<int> found =
                resolve_indexed(ball, idx, y, nf, budget, &unknown, &partners, &cert);
            if (found) {
                if (ball.vertices[*found].class_word != word)
                    ball.merge_log.push_back({*found, std::move(word), cert});
                continue;
            }
            CoveringVertex v;
            v.endpoint = y;
            v.class_word = std::move(word);
            v.normal_form = std::move(nf);
            v.chain = ball.vertices[cursor].chain;
            v.chain.push_back(y);
            v.depth = depth + 1;
            if (unknown) {
                v.complete = false;
                ball.unknown_merges += 1;
                for (int u : partners) ball.vertices[u].complete = false;
            }
            int id = static_cast<int>(ball.vertices.size());
            idx.exact[{v.endpoint, v.normal_form}] = id;
            idx.by_endpoint[v.endpoint].push_back(id);
            ball.vertices.push_back(std::move(v));
        }
    }

    EstarPairs self = estar_pairs(ball, e, budget);
    ball.estar_edges = std::move(self.pairs);
    return ball;
}

namespace {

// Enumerates the last-point replace/extend steps of every vertex under F
// and resolves the targets. The edge list is symmetrized and reflexive.
struct StepScan {
    std::vector<std::pair<int, int>> edges;
    std::vector<char> unresolved_at;  // target outside the ball, per vertex
    std::vector<char> unknown_at;
    int unknown_events = 0;
};

StepScan scan_steps(const CoveringBall& ball, const Entourage& f, Budget& budget) {
    if (!f.refines(ball.scale))
        throw std::invalid_argument("relation does not refine the ball scale");
    BallIndex idx = index_of(ball);
    StepScan scan;
    scan.unresolved_at.assign(ball.vertices.size(), 0);
    scan.unknown_at.assign(ball.vertices.size(), 0);
    std::set<std::pair<int, int>> edges;

    auto resolve_target = [&](int from, int endpoint, const Word& nf) {
        bool unknown = false;
        std::optional<int> hit =
            resolve_indexed(ball, idx, endpoint, nf, budget, &unknown);
        if (hit) {
            int a = std::min(from, *hit), b = std::max(from, *hit);
            edges.insert({a, b});
        } else {
            scan.unresolved_at[from] = 1;
            if (unknown) {
                scan.unknown_at[from] = 1;
                scan.unknown_events += 1;
            }
        }
    };

    for (std::size_t vid = 0; vid < ball.vertices.size(); ++vid) {
        const CoveringVertex& v = ball.vertices[vid];
        edges.insert({static_cast<int>(vid), static_cast<int>(vid)});
        const int x = v.endpoint;

        Word prefix_word;
        int prev = -1;
        if (v.chain.size() >= 2) {
            Chain prefix(v.chain.begin(), v.chain.end() - 1);
            prefix_word = ball.context->normal_form(
                chain_to_word(prefix, ball.bundle));
            prev = prefix.back();
        }

        for (int y : f.neighbors(x)) {
            if (y == x) continue;
            // Extend: same class with a duplicated last point, then y.
            std::int32_t letter = ball.bundle.gen_value(x, y);
            Word nf = v.normal_form;
            if (letter != 0) ball.context->append_normal(nf, letter);
            resolve_target(static_cast<int>(vid), y, nf);
            // Replace the last point, when the shortened chain stays valid.
            if (prev >= 0 && ball.scale.contains(prev, y)) {
                Word rnf = prefix_word;
                std::int32_t rletter = ball.bundle.gen_value(prev, y);
                if (rletter != 0) ball.context->append_normal(rnf, rletter);
                resolve_target(static_cast<int>(vid), y, rnf);
            }
        }
    }
    scan.edges.assign(edges.begin(), edges.end());
    return scan;
}

}  // namespace

EstarPairs estar_pairs(const CoveringBall& ball, const Entourage& f, Budget& budget) {
    StepScan scan = scan_steps(ball, f, budget);
    EstarPairs out;
    out.pairs = std::move(scan.edges);
    out.unknown_events = scan.unknown_events;
    out.complete = std::none_of(scan.unresolved_at.begin(), scan.unresolved_at.end(),
                                [](char c) { return c != 0; });
    return out;
}

ComponentResult basepoint_component(const CoveringBall& ball, const Entourage& f,
                                    Budget& budget) {
    StepScan scan = scan_steps(ball, f, budget);
    std::vector<std::vector<int>> adj(ball.vertices.size());
    for (const auto& [a, b] : scan.edges) {
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    ComponentResult out;
    std::vector<char> seen(ball.vertices.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        out.vertices.push_back(v);
        if (scan.unresolved_at[v]) out.closure_complete = false;
        if (scan.unknown_at[v]) out.unknown_events += 1;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

StabilizedComponent stabilized_component(const CoveringBall& ball,
                                         const std::vector<Entourage>& ladder,
                                         Budget& budget) {
    if (ladder.empty()) throw std::invalid_argument("empty inner ladder");
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (!ladder[i + 1].refines(ladder[i]))
            throw std::invalid_argument("inner ladder is not nested");

    StabilizedComponent out;
    for (const Entourage& f : ladder) {
        ComponentResult c = basepoint_component(ball, f, budget);
        out.rungs.push_back({f.provenance(), c.vertices, c.closure_complete});
    }
    const auto& last = out.rungs.back().component;
    int from = static_cast<int>(out.rungs.size()) - 1;
    while (from > 0 && out.rungs[from - 1].component == last) --from;
    out.stable_from = from;
    out.stable = out.rungs.size() >= 2 &&
                 from <= static_cast<int>(out.rungs.size()) - 2;
    out.low_confidence = out.rungs.size() == 1;
    if (out.low_confidence) out.stable = true;
    out.component = last;
    return out;
}

ExtractionResult extract_covering_relation(const CoveringBall& ball,
                                           const std::vector<int>& component,
                                           const Entourage& f,
                                           const Entourage& saturation_witness,
                                           Budget& budget) {
    std::vector<char> in_a(ball.vertices.size(), 0);
    for (int v : component) {
        if (v < 0 || v >= static_cast<int>(ball.vertices.size()))
            throw std::invalid_argument("component member is not a ball vertex");
        in_a[v] = 1;
    }
    StepScan witness_scan = scan_steps(ball, saturation_witness, budget);
    for (const auto& [a, b] : witness_scan.edges)
        if (in_a[a] != in_a[b])
            throw std::invalid_argument("component is not saturated in the ball");

    StepScan scan = scan_steps(ball, f, budget);
    ExtractionResult out;
    std::map<std::pair<int, int>, std::pair<int, int>> witness;
    for (const auto& [a, b] : scan.edges) {
        if (a == b || !in_a[a] || !in_a[b]) continue;
        int pa = ball.vertices[a].endpoint;
        int pb = ball.vertices[b].endpoint;
        if (pa == pb) continue;  // projects into the diagonal
        auto key = std::minmax(pa, pb);
        witness.try_emplace({key.first, key.second}, a, b);
    }
    for (int v : component)
        if (scan.unresolved_at[v]) out.closure_complete = false;

    std::vector<std::pair<int, int>> pairs;
    for (const auto& [points, vxs] : witness) {
        pairs.push_back(points);
        out.witnesses.push_back({points, vxs.first, vxs.second});
    }
    out.relation = Entourage(ball.space.size(), std::move(pairs),
                             "extracted[" + ball.scale.provenance() +
                                 ";F=" + f.provenance() + "]");
    return out;
}

ExtractionResult extract_covering_relation(const CoveringBall& ball,
                                           const std::vector<int>& component,
                                           const Entourage& f, Budget& budget) {
    return extract_covering_relation(ball, component, f, f, budget);
}

PhiImageReport phi_image_check(const CoveringBall& ball, const Entourage& f,
                               Budget& budget) {
    ComponentResult comp = basepoint_component(ball, f, budget);
    std::vector<char> in_comp(ball.vertices.size(), 0);
    for (int v : comp.vertices) in_comp[v] = 1;

    PhiImageReport out;
    out.closure_complete = comp.closure_complete && comp.unknown_events == 0;
    out.per_vertex.resize(ball.vertices.size());
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
        if (in_comp[v]) {
            out.per_vertex[v] = Verdict::yes("reached by an F-chain");
        } else if (out.closure_complete) {
            out.per_vertex[v] =
                Verdict::no("outside the closed F-chain reachability set");
        } else {
            out.per_vertex[v] = Verdict::unknown(0);
        }
    }
    for (int v : ball.report_order()) {
        if (out.per_vertex[v].is_false()) {
            out.missed_vertices.push_back(v);
            if (out.witness_vertex < 0) out.witness_vertex = v;
        }
    }
    if (out.witness_vertex >= 0)
        out.aggregate = SurjectivityVerdict::NotSurjective;
    else if (static_cast<int>(comp.vertices.size()) ==
             static_cast<int>(ball.vertices.size()))
        out.aggregate = SurjectivityVerdict::Surjective;
    else
        out.aggregate = SurjectivityVerdict::Unknown;
    return out;
}

namespace {

struct ComponentEngine {
    PresentationBundle bundle;
    std::shared_ptr<GroupContext> context;
};

}  // namespace

EShortReport e_short_join_check(const FiniteSpace& space, const Entourage& e,
                                const Entourage& f, const Entourage& d,
                                Budget& budget) {
    if (!f.refines(e) || !d.refines(f))
        throw std::invalid_argument("relation nesting violated");

    RipsGraph graph = rips_graph(space, e);
    // Component roots under E; words are based at the root of each side.
    std::vector<int> root_of(space.size(), -1);
    std::map<int, ComponentEngine> engines;
    for (int x = 0; x < space.size(); ++x) {
        if (root_of[x] >= 0) continue;
        std::deque<int> queue{x};
        root_of[x] = x;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : graph.adjacency[v])
                if (root_of[w] < 0) {
                    root_of[w] = x;
                    queue.push_back(w);
                }
        }
    }
    auto engine_for = [&](int root) -> ComponentEngine& {
        auto it = engines.find(root);
        if (it == engines.end()) {
            ComponentEngine eng;
            eng.bundle = presentation(graph, spanning_tree(graph, root));
            eng.context = std::make_shared<GroupContext>(eng.bundle.pres, budget);
            it = engines.emplace(root, std::move(eng)).first;
        }
        return it->second;
    };

    EShortReport report;
    bool any_false = false, any_unknown = false;
    for (const auto& [x, y] : f.pairs()) {
        ComponentEngine& eng = engine_for(root_of[x]);
        std::int32_t target_letter = eng.bundle.gen_value(x, y);
        Word target_nf;
        if (target_letter != 0) eng.context->append_normal(target_nf, target_letter);

        // Breadth-first over (endpoint, class) states of D-chains from x.
        std::map<std::pair<int, Word>, std::pair<int, int>> parent;  // -> (state idx, point)
        std::vector<std::pair<int, Word>> states{{x, {}}};
        parent[{x, Word{}}] = {-1, x};
        EShortPair entry;
        entry.points = {x, y};
        bool capped = false, found = false;
        std::vector<Word> at_y;
        std::uint64_t spent0 = budget.used;

        for (std::size_t cursor = 0; cursor < states.size() && !found; ++cursor) {
            auto [p, nf] = states[cursor];
            for (int q : d.neighbors(p)) {
                if (q == p) continue;
                if (!budget.charge()) {
                    capped = true;
                    break;
                }
                Word next = nf;
                std::int32_t letter = eng.bundle.gen_value(p, q);
                if (letter != 0) eng.context->append_normal(next, letter);
                auto key = std::make_pair(q, next);
                if (parent.count(key)) continue;
                parent[key] = {static_cast<int>(cursor), q};
                states.push_back(key);
                if (q == y) {
                    at_y.push_back(next);
                    bool match = next == target_nf;
                    if (!match && !eng.context->free_after_simplify())
                        match = eng.context->equal_normal(next, target_nf, budget)
                                    .is_true();
                    if (match) {
                        // Recover the witness chain.
                        Chain witness;
                        int idx = static_cast<int>(states.size()) - 1;
                        while (idx >= 0) {
                            witness.push_back(parent[states[idx]].second);
                            idx = parent[states[idx]].first;
                        }
                        std::reverse(witness.begin(), witness.end());
                        entry.witness = std::move(witness);
                        entry.verdict = Verdict::yes("D-chain witness of length " +
                                                         std::to_string(entry.witness.size() - 1),
                                                     budget.used - spent0);
                        found = true;
                        break;
                    }
                }
            }
            if (capped) break;
        }

        if (!found) {
            if (capped) {
                entry.verdict = Verdict::unknown(budget.used - spent0);
            } else if (at_y.empty()) {
                entry.verdict = Verdict::no("endpoint unreachable by D-chains",
                                            budget.used - spent0);
            } else {
                // Closure exhausted; certify distinctness of every class seen
                // at y, preferring the abelianization route.
                bool all_abelian = true, all_certified = true;
                for (const Word& nf : at_y) {
                    Word diffw = nf;
                    append_reduced(diffw, inverse(target_nf));
                    if (eng.context->abelian_zero(diffw)) {
                        all_abelian = false;
                        Verdict v = eng.context->equal_normal(nf, target_nf, budget);
                        if (!v.is_false()) {
                            all_certified = false;
                            break;
                        }
                    }
                }
                if (all_abelian)
                    entry.verdict = Verdict::no("abelianization separates every "
                                                "D-chain class from the two-point chain",
                                                budget.used - spent0);
                else if (all_certified)
                    entry.verdict = Verdict::no("every D-chain class certified distinct",
                                                budget.used - spent0);
                else
                    entry.verdict = Verdict::unknown(budget.used - spent0);
            }
        }
        if (entry.verdict.is_false()) any_false = true;
        if (entry.verdict.is_unknown()) any_unknown = true;
        report.pairs.push_back(std::move(entry));
    }
    report.aggregate = any_false   ? Truth::False
                       : any_unknown ? Truth::Unknown
                                     : Truth::True;
    return report;
}

}  // namespace chaincover

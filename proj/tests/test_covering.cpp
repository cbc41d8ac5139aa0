#include <doctest.h>

#include <algorithm>

#include "support.hpp"

#include "chaincover/covering.hpp"

using namespace chaincover;

namespace {

struct GridSetup {
    FiniteSpace space;
    Entourage outer;
    Entourage step_scale;  // plain 0.3 threshold = single grid steps
    Budget budget{10'000'000};
    CoveringBall ball;

    GridSetup()
        : space(fixtures::grid(parse_decimal("0.25"), Rational(-6), Rational(6))),
          outer(entourage_from_diff_intervals(space, fixtures::demo_intervals())),
          step_scale(entourage_from_scale(space, parse_decimal("0.3"))),
          ball(build_covering_ball(space, outer, 20, budget)) {}

    int vertex_of(const Chain& chain) {
        Word nf = ball.context->normal_form(chain_to_word(chain, ball.bundle));
        bool unknown = false;
        auto v = ball.resolve(chain.back(), nf, budget, &unknown);
        REQUIRE(v.has_value());
        return *v;
    }
    int at(const char* coord) {
        int id = testsupport::grid_id(space, parse_decimal(coord));
        REQUIRE(id >= 0);
        return id;
    }
};

Entourage diagonal_of(const FiniteSpace& s) {
    return entourage_from_pairs(s, {});
}

}  // namespace

TEST_CASE("covering ball construction") {
    FiniteSpace hex = fixtures::hex();
    SUBCASE("hexagon cycle at radius 3 has seven classes") {
        Budget b;
        CoveringBall ball = build_covering_ball(
            hex, entourage_from_scale(hex, parse_decimal("1.2")), 3, b);
        CHECK(ball.vertices.size() == 7);
        CHECK(ball.unknown_merges == 0);
        CHECK(ball.clipped);  // depth-3 classes still have neighbors
        // Two distinct classes over the antipodal endpoint.
        int over3 = 0;
        for (const auto& v : ball.vertices)
            if (v.endpoint == 3) ++over3;
        CHECK(over3 == 2);
    }
    SUBCASE("trivial class group collapses to one vertex per endpoint") {
        Budget b;
        CoveringBall ball = build_covering_ball(
            hex, entourage_from_scale(hex, parse_decimal("2.1")), 2, b);
        CHECK(ball.vertices.size() == 6);
        CHECK_FALSE(ball.clipped);
    }
    SUBCASE("radius zero is the basepoint alone") {
        Budget b;
        CoveringBall ball = build_covering_ball(
            hex, entourage_from_scale(hex, parse_decimal("1.2")), 0, b);
        CHECK(ball.vertices.size() == 1);
        CHECK(ball.vertices[0].endpoint == hex.basepoint());
    }
    SUBCASE("deterministic report order") {
        Budget b;
        CoveringBall ball = build_covering_ball(
            hex, entourage_from_scale(hex, parse_decimal("1.2")), 3, b);
        std::vector<int> order = ball.report_order();
        for (std::size_t i = 1; i < order.size(); ++i) {
            const auto& prev = ball.vertices[order[i - 1]];
            const auto& cur = ball.vertices[order[i]];
            bool ordered = prev.endpoint < cur.endpoint ||
                           (prev.endpoint == cur.endpoint &&
                            shortlex_less(prev.class_word, cur.class_word));
            CHECK(ordered);
        }
    }
}

TEST_CASE("ball invariants") {
    GridSetup g;
    SUBCASE("every vertex chain is a valid based chain reaching its endpoint") {
        for (const auto& v : g.ball.vertices) {
            CHECK(is_echain(v.chain, g.outer));
            CHECK(v.chain.front() == g.space.basepoint());
            CHECK(v.chain.back() == v.endpoint);
            CHECK(static_cast<int>(v.chain.size()) - 1 == v.depth);
        }
    }
    SUBCASE("estar edges project to outer-relation pairs") {
        for (const auto& [a, b] : g.ball.estar_edges) {
            int pa = g.ball.vertices[a].endpoint;
            int pb = g.ball.vertices[b].endpoint;
            CHECK(g.outer.contains(pa, pb));
        }
    }
    SUBCASE("merge log replays") {
        CHECK_FALSE(g.ball.merge_log.empty());
        for (const auto& event : g.ball.merge_log) {
            Budget eb;
            Verdict v = g.ball.context->equal(
                g.ball.vertices[event.vertex].class_word, event.arriving_word, eb);
            CHECK(v.is_true());
        }
    }
    SUBCASE("no unknown merges on the grid") {
        CHECK(g.ball.unknown_merges == 0);
        CHECK(g.ball.context->free_after_simplify());
    }
}

TEST_CASE("estar pairs") {
    GridSetup g;
    SUBCASE("the full relation reproduces the ball edge set") {
        EstarPairs ep = estar_pairs(g.ball, g.outer, g.budget);
        CHECK(ep.pairs == g.ball.estar_edges);
    }
    SUBCASE("diagonal relation gives only loops") {
        EstarPairs ep = estar_pairs(g.ball, diagonal_of(g.space), g.budget);
        for (const auto& [a, b] : ep.pairs) CHECK(a == b);
        CHECK(ep.pairs.size() == g.ball.vertices.size());
    }
    SUBCASE("grid-step relation reaches {0,0.25} but not {0,3}") {
        int v_small = g.vertex_of({g.space.basepoint(), g.at("0.25")});
        int v_jump = g.vertex_of({g.space.basepoint(), g.at("3")});
        EstarPairs ep = estar_pairs(g.ball, g.step_scale, g.budget);
        auto has = [&](int a, int b) {
            auto p = std::minmax(a, b);
            return std::binary_search(ep.pairs.begin(), ep.pairs.end(),
                                      std::make_pair(p.first, p.second));
        };
        CHECK(has(0, v_small));
        CHECK_FALSE(has(0, v_jump));
    }
    SUBCASE("non-refining relation rejected") {
        Entourage too_big = entourage_from_scale(g.space, Rational(5));
        CHECK_THROWS_AS(estar_pairs(g.ball, too_big, g.budget),
                        std::invalid_argument);
    }
}

TEST_CASE("basepoint components") {
    GridSetup g;
    SUBCASE("full relation reaches the whole ball") {
        ComponentResult c = basepoint_component(g.ball, g.outer, g.budget);
        CHECK(c.vertices.size() == g.ball.vertices.size());
    }
    SUBCASE("grid-step component excludes the jump class") {
        ComponentResult c = basepoint_component(g.ball, g.step_scale, g.budget);
        CHECK(c.vertices.size() == static_cast<std::size_t>(g.space.size()));
        int v_jump = g.vertex_of({g.space.basepoint(), g.at("3")});
        CHECK_FALSE(std::binary_search(c.vertices.begin(), c.vertices.end(), v_jump));
        CHECK(c.closure_complete);
        // Complement is saturated too: no estar edge crosses the boundary.
        EstarPairs ep = estar_pairs(g.ball, g.step_scale, g.budget);
        std::vector<char> in(g.ball.vertices.size(), 0);
        for (int v : c.vertices) in[v] = 1;
        for (const auto& [a, b] : ep.pairs) CHECK(in[a] == in[b]);
    }
    SUBCASE("diagonal relation pins the basepoint vertex") {
        ComponentResult c = basepoint_component(g.ball, diagonal_of(g.space), g.budget);
        CHECK(c.vertices == std::vector<int>{0});
    }
}

TEST_CASE("stabilized components") {
    GridSetup g;
    SUBCASE("ladder (outer, 0.6, 0.3) stabilizes from the second rung") {
        Entourage mid = entourage_from_scale(g.space, parse_decimal("0.6"));
        StabilizedComponent s =
            stabilized_component(g.ball, {g.outer, mid, g.step_scale}, g.budget);
        CHECK(s.stable);
        CHECK(s.stable_from == 1);
        CHECK_FALSE(s.low_confidence);
        CHECK(s.component.size() == static_cast<std::size_t>(g.space.size()));
    }
    SUBCASE("hexagon ladder with equal edge sets is stable everywhere") {
        FiniteSpace hex = fixtures::hex();
        Budget b;
        CoveringBall ball = build_covering_ball(
            hex, entourage_from_scale(hex, parse_decimal("1.2")), 3, b);
        StabilizedComponent s = stabilized_component(
            ball,
            {entourage_from_scale(hex, parse_decimal("1.2")),
             entourage_from_scale(hex, parse_decimal("1.1"))},
            b);
        CHECK(s.stable);
        CHECK(s.stable_from == 0);
        CHECK(s.component.size() == ball.vertices.size());
    }
    SUBCASE("single-rung ladders are flagged") {
        StabilizedComponent s = stabilized_component(g.ball, {g.step_scale}, g.budget);
        CHECK(s.stable);
        CHECK(s.low_confidence);
    }
    SUBCASE("non-nested ladders are rejected") {
        Entourage mid = entourage_from_scale(g.space, parse_decimal("0.6"));
        CHECK_THROWS_AS(stabilized_component(g.ball, {g.step_scale, mid}, g.budget),
                        std::invalid_argument);
    }
}

TEST_CASE("covering relation extraction") {
    GridSetup g;
    Entourage mid = entourage_from_scale(g.space, parse_decimal("0.6"));
    StabilizedComponent s =
        stabilized_component(g.ball, {mid, g.step_scale}, g.budget);

    SUBCASE("the grid demo relation comes out exactly") {
        ExtractionResult ex = extract_covering_relation(g.ball, s.component,
                                                        g.outer, g.step_scale,
                                                        g.budget);
        std::vector<std::pair<int, int>> expect;
        for (int i = 0; i < g.space.size(); ++i)
            for (int j = i + 1; j < g.space.size(); ++j) {
                Rational d = g.space.diff1d(j, i);
                if (d < 0) d = -d;
                if (d != 0 && d < 1) expect.emplace_back(i, j);
            }
        CHECK(ex.relation.pairs() == expect);
        CHECK(ex.relation.pairs().size() == 141);
        CHECK(ex.relation.refines(g.outer));
        // Witnesses live inside the component and project to their pair.
        std::vector<char> in(g.ball.vertices.size(), 0);
        for (int v : s.component) in[v] = 1;
        REQUIRE(ex.witnesses.size() == ex.relation.pairs().size());
        for (const auto& w : ex.witnesses) {
            CHECK(in[w.vertex_a]);
            CHECK(in[w.vertex_b]);
            auto p = std::minmax(g.ball.vertices[w.vertex_a].endpoint,
                                 g.ball.vertices[w.vertex_b].endpoint);
            CHECK(std::make_pair(p.first, p.second) == w.points);
        }
    }
    SUBCASE("diagonal relation extracts the diagonal") {
        ComponentResult c = basepoint_component(g.ball, diagonal_of(g.space), g.budget);
        ExtractionResult ex = extract_covering_relation(
            g.ball, c.vertices, diagonal_of(g.space), g.budget);
        CHECK(ex.relation.pairs().empty());
    }
    SUBCASE("complete hexagon relation extracts itself") {
        FiniteSpace hex = fixtures::hex();
        Entourage all = entourage_from_scale(hex, parse_decimal("2.1"));
        Budget b;
        CoveringBall ball = build_covering_ball(hex, all, 4, b);
        ComponentResult c = basepoint_component(ball, all, b);
        ExtractionResult ex = extract_covering_relation(ball, c.vertices, all, b);
        CHECK(ex.relation.same_pairs(all));
    }
    SUBCASE("unsaturated components are rejected") {
        std::vector<int> half(s.component.begin(),
                              s.component.begin() + s.component.size() / 2);
        CHECK_THROWS_AS(extract_covering_relation(g.ball, half, g.outer,
                                                  g.step_scale, g.budget),
                        std::invalid_argument);
    }
}

TEST_CASE("phi image checks") {
    FiniteSpace hex = fixtures::hex();
    Entourage all = entourage_from_scale(hex, parse_decimal("2.1"));
    SUBCASE("fine chain-connected relation is surjective") {
        Budget b;
        CoveringBall ball = build_covering_ball(hex, all, 4, b);
        PhiImageReport r = phi_image_check(
            ball, entourage_from_scale(hex, parse_decimal("1.2")), b);
        CHECK(r.aggregate == SurjectivityVerdict::Surjective);
        for (const auto& v : r.per_vertex) CHECK(v.is_true());
    }
    SUBCASE("diagonal inner relation misses every non-basepoint class") {
        Budget b;
        CoveringBall ball = build_covering_ball(hex, all, 4, b);
        PhiImageReport r = phi_image_check(ball, diagonal_of(hex), b);
        CHECK(r.aggregate == SurjectivityVerdict::NotSurjective);
        CHECK(r.missed_vertices.size() == ball.vertices.size() - 1);
        CHECK(r.witness_vertex >= 0);
        CHECK(ball.vertices[r.witness_vertex].endpoint != hex.basepoint());
    }
    SUBCASE("grid-step misses the jump class with a certificate") {
        GridSetup g;
        PhiImageReport r = phi_image_check(g.ball, g.step_scale, g.budget);
        CHECK(r.aggregate == SurjectivityVerdict::NotSurjective);
        int v_jump = g.vertex_of({g.space.basepoint(), g.at("3")});
        CHECK(std::find(r.missed_vertices.begin(), r.missed_vertices.end(),
                        v_jump) != r.missed_vertices.end());
        CHECK(r.per_vertex[v_jump].is_false());
        CHECK(r.closure_complete);
    }
}

TEST_CASE("e-short joinability") {
    SUBCASE("path fixture: every pair is its own witness") {
        FiniteSpace p5 = fixtures::p5();
        Entourage e = entourage_from_scale(p5, parse_decimal("1.5"));
        Entourage d = entourage_from_scale(p5, parse_decimal("1.1"));
        Budget b;
        EShortReport r = e_short_join_check(p5, e, e, d, b);
        CHECK(r.aggregate == Truth::True);
        for (const auto& pr : r.pairs) CHECK(pr.verdict.is_true());
    }
    SUBCASE("grid jump pair is certified unjoinable via abelianization") {
        GridSetup g;
        EShortReport r = e_short_join_check(g.space, g.outer, g.outer,
                                            g.step_scale, g.budget);
        CHECK(r.aggregate == Truth::False);
        int bp = g.space.basepoint();
        int at3 = g.at("3");
        bool found = false;
        for (const auto& pr : r.pairs) {
            if (pr.points == std::make_pair(std::min(bp, at3), std::max(bp, at3))) {
                found = true;
                CHECK(pr.verdict.is_false());
                CHECK(pr.verdict.certificate.find("abelianization") !=
                      std::string::npos);
            }
            // Small pairs are joinable, jumps are not.
            Rational d = g.space.diff1d(pr.points.second, pr.points.first);
            if (d < 0) d = -d;
            if (d < 1)
                CHECK(pr.verdict.is_true());
            else
                CHECK(pr.verdict.is_false());
        }
        CHECK(found);
    }
    SUBCASE("complete hexagon scale joins the antipodal pair through a walk") {
        FiniteSpace hex = fixtures::hex();
        Entourage e = entourage_from_scale(hex, parse_decimal("2.1"));
        Entourage d = entourage_from_scale(hex, parse_decimal("1.2"));
        Budget b;
        EShortReport r = e_short_join_check(hex, e, e, d, b);
        CHECK(r.aggregate == Truth::True);
        for (const auto& pr : r.pairs) {
            CHECK(pr.verdict.is_true());
            CHECK(is_echain(pr.witness, d));
            CHECK(pr.witness.front() == pr.points.first);
            CHECK(pr.witness.back() == pr.points.second);
        }
    }
    SUBCASE("nesting violations are rejected") {
        FiniteSpace p5 = fixtures::p5();
        Entourage e = entourage_from_scale(p5, parse_decimal("1.1"));
        Entourage f = entourage_from_scale(p5, parse_decimal("1.5"));
        Budget b;
        CHECK_THROWS_AS(e_short_join_check(p5, e, f, f, b), std::invalid_argument);
    }
}

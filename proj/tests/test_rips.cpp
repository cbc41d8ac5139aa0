#include <doctest.h>

#include <numeric>

#include "support.hpp"

#include "chaincover/rips.hpp"

using namespace chaincover;
using testsupport::Rng;

namespace {

FiniteSpace hex() { return fixtures::hex(); }

Entourage hex_at(const char* eps) {
    static FiniteSpace h = hex();
    return entourage_from_scale(h, parse_decimal(eps));
}

}  // namespace

TEST_CASE("rips graph edge counts on the hexagon") {
    FiniteSpace h = hex();
    CHECK(rips_graph(h, hex_at("1.2")).edges.size() == 6);   // the cycle
    CHECK(rips_graph(h, hex_at("1.8")).edges.size() == 12);  // sides + short chords
    CHECK(rips_graph(h, hex_at("2.1")).edges.size() == 15);  // complete
    CHECK(rips_graph(h, hex_at("0.9")).edges.size() == 0);
}

TEST_CASE("triangle enumeration") {
    FiniteSpace h = hex();
    SUBCASE("no triangles at the cycle scale") {
        CHECK(rips_triangle_list(rips_graph(h, hex_at("1.2"))).empty());
    }
    SUBCASE("triangles at 1.8 match a brute-force triple scan") {
        RipsGraph g = rips_graph(h, hex_at("1.8"));
        std::vector<std::array<int, 3>> brute;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c)
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                        brute.push_back({a, b, c});
        std::vector<std::array<int, 3>> fast = rips_triangle_list(g);
        CHECK(fast == brute);
        CHECK(fast.size() == 8);  // 6 consecutive runs + 2 alternating
    }
    SUBCASE("complete graph on 4 points") {
        FiniteSpace k4 = FiniteSpace::from_points(
            {{Rational(0)}, {Rational(1)}, {Rational(2)}, {Rational(3)}}, 0);
        RipsGraph g = rips_graph(k4, entourage_from_scale(k4, Rational(10)));
        CHECK(rips_triangle_list(g).size() == 4);
    }
    SUBCASE("stream is sorted and duplicate free") {
        RipsGraph g = rips_graph(h, hex_at("2.1"));
        auto ts = rips_triangle_list(g);
        CHECK(ts.size() == 20);
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    }
}

TEST_CASE("spanning trees") {
    FiniteSpace h = hex();
    SUBCASE("cycle scale: 5 tree edges, 1 non-tree edge") {
        SpanningTree t = spanning_tree(rips_graph(h, hex_at("1.2")), 0);
        CHECK(t.tree_edges.size() == 5);
        CHECK(t.non_tree_edges.size() == 1);
    }
    SUBCASE("isolated root") {
        SpanningTree t = spanning_tree(rips_graph(h, hex_at("0.9")), 0);
        CHECK(t.tree_edges.empty());
        CHECK(t.non_tree_edges.empty());
        CHECK(t.in_component[0]);
        for (int v = 1; v < 6; ++v) CHECK_FALSE(t.in_component[v]);
    }
    SUBCASE("path graph is its own tree") {
        FiniteSpace p5 = fixtures::p5();
        RipsGraph g = rips_graph(p5, entourage_from_scale(p5, parse_decimal("1.5")));
        SpanningTree t = spanning_tree(g, 0);
        CHECK(t.tree_edges.size() == 4);
        CHECK(t.non_tree_edges.empty());
    }
    SUBCASE("determinism: repeated runs agree") {
        RipsGraph g = rips_graph(h, hex_at("1.8"));
        SpanningTree a = spanning_tree(g, 0);
        SpanningTree b = spanning_tree(g, 0);
        CHECK(a.parent == b.parent);
        CHECK(a.tree_edges == b.tree_edges);
        CHECK(rips_triangle_list(g) == rips_triangle_list(g));
    }
}

TEST_CASE("cyclomatic identity on random graphs") {
    Rng rng(424242);
    for (int round = 0; round < 300; ++round) {
        FiniteSpace s = testsupport::random_line_space(rng);
        Entourage e = testsupport::random_relation(rng, s);
        RipsGraph g = rips_graph(s, e);
        SpanningTree t = spanning_tree(g, s.basepoint());
        int comp_vertices = 0;
        for (char c : t.in_component) comp_vertices += c;
        int comp_edges = 0;
        for (const auto& edge : g.edges)
            if (t.in_component[edge.first]) ++comp_edges;
        CHECK(static_cast<int>(t.non_tree_edges.size()) ==
              comp_edges - (comp_vertices - 1));
        // Every triangle's edges are present by construction.
        rips_triangles(g, [&](int u, int v, int w) {
            CHECK(g.has_edge(u, v));
            CHECK(g.has_edge(v, w));
            CHECK(g.has_edge(u, w));
        });
    }
}

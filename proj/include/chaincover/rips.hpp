#pragma once

#include <array>
#include <functional>
#include <vector>

#include "chaincover/space.hpp"

namespace chaincover {

// The 1-skeleton of the Rips complex at a fixed entourage: vertices are all
// points, edges the off-diagonal pairs. Triangles (the only higher cells
// that matter for chain homotopy) are enumerated on demand.
struct RipsGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;     // sorted, i<j
    std::vector<std::vector<int>> adjacency;    // sorted, no self loops

    bool has_edge(int a, int b) const;
};

RipsGraph rips_graph(const FiniteSpace& space, const Entourage& e);
RipsGraph rips_graph_from_entourage(const Entourage& e);

// Streams the triangles {u<v<w} with all three pairs present, in
// lexicographic order. Iterates edges against sorted common-neighbor
// intersections rather than all triples.
void rips_triangles(const RipsGraph& graph,
                    const std::function<void(int, int, int)>& emit);
std::vector<std::array<int, 3>> rips_triangle_list(const RipsGraph& graph);

// BFS tree of the root's component. Neighbor expansion follows
// `tie_break` when given (a permutation of 0..n-1 ranking vertices),
// otherwise ascending ids, so trees are deterministic.
struct SpanningTree {
    int root = -1;
    std::vector<int> parent;                 // -1 for root and non-component
    std::vector<char> in_component;
    std::vector<std::pair<int, int>> tree_edges;      // sorted, i<j
    std::vector<std::pair<int, int>> non_tree_edges;  // sorted, i<j

    bool is_tree_edge(int a, int b) const;
    // Vertex path root -> x along tree edges. Throws if x is outside.
    std::vector<int> path_from_root(int x) const;
};

SpanningTree spanning_tree(const RipsGraph& graph, int root);
SpanningTree spanning_tree(const RipsGraph& graph, int root,
                           const std::vector<int>& tie_break);

// Exact hop-count diameter of the vertex's component.
int component_diameter(const RipsGraph& graph, int vertex);

}  // namespace chaincover

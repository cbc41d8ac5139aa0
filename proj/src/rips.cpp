#include "chaincover/rips.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chaincover {

bool RipsGraph::has_edge(int a, int b) const {
    if (a == b) return false;
    auto p = std::minmax(a, b);
    return std::binary_search(edges.begin(), edges.end(),
                              std::make_pair(p.first, p.second));
}

RipsGraph rips_graph_from_entourage(const Entourage& e) {
    RipsGraph g;
    g.n = e.point_count();
    g.edges = e.pairs();
    g.adjacency.assign(g.n, {});
    for (const auto& [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
    return g;
}

RipsGraph rips_graph(const FiniteSpace& space, const Entourage& e) {
    if (space.size() != e.point_count())
        throw std::invalid_argument("entourage does not match space");
    return rips_graph_from_entourage(e);
}

void rips_triangles(const RipsGraph& graph,
                    const std::function<void(int, int, int)>& emit) {
    for (const auto& [u, v] : graph.edges) {
        const auto& nu = graph.adjacency[u];
        const auto& nv = graph.adjacency[v];
        // Common neighbors w > v keep every triangle emitted once, sorted.
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv)
                ++iu;
            else if (*iv < *iu)
                ++iv;
            else {
                emit(u, v, *iu);
                ++iu;
                ++iv;
            }
        }
    }
}

std::vector<std::array<int, 3>> rips_triangle_list(const RipsGraph& graph) {
    std::vector<std::array<int, 3>> out;
    rips_triangles(graph, [&](int u, int v, int w) { out.push_back({u, v, w}); });
    return out;
}

bool SpanningTree::is_tree_edge(int a, int b) const {
    if (a == b) return false;
    auto p = std::minmax(a, b);
    return std::binary_search(tree_edges.begin(), tree_edges.end(),
                              std::make_pair(p.first, p.second));
}

std::vector<int> SpanningTree::path_from_root(int x) const {
    if (x < 0 || x >= static_cast<int>(parent.size()) || !in_component[x])
        throw std::invalid_argument("vertex is outside the tree component");
    std::vector<int> path;
    for (int v = x; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

SpanningTree spanning_tree(const RipsGraph& graph, int root,
                           const std::vector<int>& tie_break) {
    if (root < 0 || root >= graph.n)
        throw std::invalid_argument("root is not a vertex");
    SpanningTree t;
    t.root = root;
    t.parent.assign(graph.n, -1);
    t.in_component.assign(graph.n, 0);
    t.in_component[root] = 1;

    std::deque<int> queue{root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        std::vector<int> nbrs = graph.adjacency[v];
        if (!tie_break.empty())
            std::stable_sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
                return tie_break[a] < tie_break[b];
            });
        for (int w : nbrs) {
            if (!t.in_component[w]) {
                t.in_component[w] = 1;
                t.parent[w] = v;
                t.tree_edges.push_back(std::minmax(v, w));
                queue.push_back(w);
            }
        }
    }
    std::sort(t.tree_edges.begin(), t.tree_edges.end());
    for (const auto& e : graph.edges)
        if (t.in_component[e.first] && !t.is_tree_edge(e.first, e.second))
            t.non_tree_edges.push_back(e);
    return t;
}

SpanningTree spanning_tree(const RipsGraph& graph, int root) {
    return spanning_tree(graph, root, {});
}

int component_diameter(const RipsGraph& graph, int vertex) {
    std::vector<int> component;
    std::vector<char> seen(graph.n, 0);
    std::deque<int> queue{vertex};
    seen[vertex] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        component.push_back(v);
        for (int w : graph.adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    int diameter = 0;
    for (int src : component) {
        std::vector<int> dist(graph.n, -1);
        std::deque<int> bfs{src};
        dist[src] = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            diameter = std::max(diameter, dist[v]);
            for (int w : graph.adjacency[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    bfs.push_back(w);
                }
        }
    }
    return diameter;
}

}  // namespace chaincover

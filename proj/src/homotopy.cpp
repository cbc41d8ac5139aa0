#include "chaincover/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaincover {

bool is_echain(const Chain& chain, const Entourage& e) {
    if (chain.empty()) return false;
    for (int p : chain)
        if (p < 0 || p >= e.point_count()) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!e.contains(chain[i], chain[i + 1])) return false;
    return true;
}

Chain elementary_move(const Chain& chain, std::size_t position, MoveKind kind,
                      int point, const Entourage& e) {
    if (!is_echain(chain, e)) throw std::invalid_argument("chain is not an E-chain");
    Chain out = chain;
    if (kind == MoveKind::Insert) {
        // Insertion lands strictly between existing points.
        if (position == 0 || position > chain.size() - 1)
            throw std::invalid_argument("move would touch an endpoint");
        out.insert(out.begin() + position, point);
    } else {
        if (position == 0 || position + 1 >= chain.size())
            throw std::invalid_argument("move would touch an endpoint");
        out.erase(out.begin() + position);
    }
    if (!is_echain(out, e))
        throw std::invalid_argument("move result is not an E-chain");
    return out;
}

std::int32_t PresentationBundle::gen_value(int a, int b) const {
    if (a == b) return 0;
    auto p = std::minmax(a, b);
    if (!graph.has_edge(a, b))
        throw std::invalid_argument("step is not an edge at this scale");
    if (tree.is_tree_edge(a, b)) return 0;
    auto it = std::lower_bound(generator_edges.begin(), generator_edges.end(),
                               std::make_pair(p.first, p.second));
    if (it == generator_edges.end() || *it != std::make_pair(p.first, p.second))
        throw std::invalid_argument("edge is outside the tree component");
    auto idx = static_cast<std::int32_t>(it - generator_edges.begin()) + 1;
    return a < b ? idx : -idx;
}

PresentationBundle presentation(const RipsGraph& graph, const SpanningTree& tree) {
    PresentationBundle b;
    b.graph = graph;
    b.tree = tree;
    b.generator_edges = tree.non_tree_edges;  // sorted already
    b.pres.generators = static_cast<int>(b.generator_edges.size());

    rips_triangles(graph, [&](int u, int v, int w) {
        if (!tree.in_component[u]) return;
        Word r;
        auto push = [&r](std::int32_t g) {
            if (g != 0) push_reduced(r, g);
        };
        push(b.gen_value(u, v));
        push(b.gen_value(v, w));
        push(b.gen_value(w, u));
        r = cyclic_reduce(r);
        if (!r.empty()) b.pres.relators.push_back(std::move(r));
    });
    return b;
}

Word chain_to_word(const Chain& chain, const PresentationBundle& bundle) {
    if (chain.empty() || chain.front() != bundle.tree.root)
        throw std::invalid_argument("chain is not based at the tree root");
    Word w;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!bundle.tree.in_component[chain[i + 1]])
            throw std::invalid_argument("chain leaves the tree component");
        std::int32_t g = bundle.gen_value(chain[i], chain[i + 1]);
        if (g != 0) push_reduced(w, g);
    }
    return w;
}

Chain word_to_chain(const Word& w, const PresentationBundle& bundle) {
    Chain out{bundle.tree.root};
    for (auto letter : w) {
        auto [u, v] = bundle.generator_edges.at(std::abs(letter) - 1);
        if (letter < 0) std::swap(u, v);
        std::vector<int> to_u = bundle.tree.path_from_root(u);
        std::vector<int> to_v = bundle.tree.path_from_root(v);
        // root..u then v..root; (u,v) is the generator edge.
        out.insert(out.end(), to_u.begin() + 1, to_u.end());
        out.insert(out.end(), to_v.rbegin(), to_v.rend());
    }
    return out;
}

}  // namespace chaincover

#include "edgedepth/colon.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace edgedepth {

EdgeProduct::EdgeProduct(Graph g, std::vector<VertexPair> edge_factors)
    : base(std::move(g)), factors(std::move(edge_factors)) {
    for (auto& [u, v] : factors) {
        if (u > v)
            std::swap(u, v);
        if (!base.has_edge(u, v))
            throw std::invalid_argument("edge product: factor is not an edge of the base graph");
    }
}

Monomial factor_monomial(const EdgeProduct& ep) {
    Monomial f = Monomial::one();
    for (const auto& [u, v] : ep.factors)
        f = f * Monomial::edge(u, v);
    return f;
}

namespace {

// Walk state: just finished an even position (x_0 = u or some x_{2j});
// remaining budget counts how often each variable may still occur among
// the interior vertices.  Memoized on (vertex, budget).
struct WalkSearch {
    const Graph& g;
    const std::set<VertexPair>& factor_set;
    std::map<int, int> budget; // variable -> remaining occurrences
    int target;
    std::set<std::pair<int, std::vector<int>>> visited;

    std::vector<int> budget_key() const {
        std::vector<int> key;
        key.reserve(budget.size());
        for (const auto& [var, rem] : budget)
            key.push_back(rem);
        return key;
    }

    bool search(int at) {
        if (!visited.insert({at, budget_key()}).second)
            return false;
        for (int y : g.neighbors(at)) {
            auto it_y = budget.find(y);
            if (it_y == budget.end() || it_y->second == 0)
                continue;
            for (int z : g.neighbors(y)) {
                VertexPair e{std::min(y, z), std::max(y, z)};
                if (!factor_set.count(e))
                    continue;
                auto it_z = budget.find(z);
                if (it_z == budget.end() || it_z->second == 0)
                    continue;
                if (y == z)
                    continue; // cannot happen in a simple graph
                --it_y->second;
                --it_z->second;
                // the walk may close here via a graph edge x_{2k} v, or extend
                bool found = g.has_edge(z, target) || search(z);
                ++it_y->second;
                ++it_z->second;
                if (found)
                    return true;
            }
        }
        return false;
    }
};

} // namespace

bool even_connected(const EdgeProduct& ep, int u, int v) {
    const Graph& g = ep.base;
    if (u < 1 || u > g.n_vertices() || v < 1 || v > g.n_vertices())
        throw std::invalid_argument("even_connected: vertex out of range");
    if (u != v && g.has_edge(u, v))
        return true; // k = 0: the walk is a single edge
    if (ep.factors.empty())
        return false;
    std::set<VertexPair> factor_set(ep.factors.begin(), ep.factors.end());
    std::map<int, int> budget;
    for (const auto& [a, b] : ep.factors) {
        ++budget[a];
        ++budget[b];
    }
    WalkSearch search{g, factor_set, std::move(budget), v, {}};
    return search.search(u);
}

ColonGraph banerjee_colon_graph(const EdgeProduct& ep) {
    int n = ep.base.n_vertices();
    std::vector<VertexPair> edges;
    std::vector<int> squares;
    for (int u = 1; u <= n; ++u) {
        if (even_connected(ep, u, u))
            squares.push_back(u);
        for (int v = u + 1; v <= n; ++v)
            if (even_connected(ep, u, v))
                edges.push_back({u, v});
    }
    return {Graph(n, std::move(edges)), std::move(squares)};
}

MonomialIdeal colon_graph_ideal(const ColonGraph& cg) {
    std::vector<Monomial> gens;
    for (const auto& [u, v] : cg.graph.edges())
        gens.push_back(Monomial::edge(u, v));
    for (int u : cg.square_vertices)
        gens.push_back(Monomial::variable(u, 2));
    return MonomialIdeal(cg.graph.n_vertices(), std::move(gens));
}

namespace {

std::vector<VertexPair> parity_chords(int n, int t) {
    std::vector<VertexPair> chords;
    for (int i = 1; i <= t + 2 && i <= n; ++i)
        for (int j = i + 1; j <= t + 2 && j <= n; ++j)
            if ((i + j) % 2 == 1)
                chords.push_back({i, j});
    return chords;
}

Graph with_extra_edges(const Graph& g, const std::vector<VertexPair>& extra) {
    std::vector<VertexPair> edges = g.edges();
    for (const auto& e : extra)
        if (!g.has_edge(e.first, e.second))
            edges.push_back(e);
    return Graph(g.n_vertices(), std::move(edges));
}

} // namespace

Graph path_colon_graph(int n, int t) {
    if (t < 2 || t > n - 2)
        throw std::invalid_argument("path_colon_graph: need 2 <= t <= n-2");
    return with_extra_edges(make_path(n), parity_chords(n, t));
}

Graph cycle_colon_graph(int n, int t) {
    if (t < 2 || t > n - 2)
        throw std::invalid_argument("cycle_colon_graph: need 2 <= t <= n-2");
    return with_extra_edges(make_cycle(n), parity_chords(n, t));
}

bool neighborhood_odd_cycle_free(const EdgeProduct& ep) {
    std::set<int> closed;
    for (const auto& [u, v] : ep.factors) {
        closed.insert(u);
        closed.insert(v);
        for (int w : ep.base.neighbors(u))
            closed.insert(w);
        for (int w : ep.base.neighbors(v))
            closed.insert(w);
    }
    auto sub = induced_subgraph(ep.base, std::vector<int>(closed.begin(), closed.end()));
    return is_bipartite(sub.graph);
}

bool colon_factorization_check(const EdgeProduct& ep, VertexPair extra) {
    if (extra.first > extra.second)
        std::swap(extra.first, extra.second);
    if (!ep.base.has_edge(extra.first, extra.second))
        throw std::invalid_argument("colon_factorization_check: extra is not an edge");
    std::set<VertexPair> distinct(ep.factors.begin(), ep.factors.end());
    if (distinct.size() != ep.factors.size() || distinct.count(extra))
        throw PreconditionFailed("colon_factorization_check: edges must be distinct");
    std::vector<VertexPair> all = ep.factors;
    all.push_back(extra);
    if (!neighborhood_odd_cycle_free(EdgeProduct(ep.base, all)))
        throw PreconditionFailed(
            "colon_factorization_check: neighborhood of the support has an odd cycle");

    MonomialIdeal ideal = edge_ideal(ep.base);
    long t = ep.t(); // factors = e_1 .. e_{t-1}, extra = e_t
    Monomial f = factor_monomial(ep);
    MonomialIdeal j_t = colon(power(ideal, t), f);
    MonomialIdeal j_next = colon(power(ideal, t + 1), f * Monomial::edge(extra.first, extra.second));
    MonomialIdeal lhs = intersect(colon(j_t, Monomial::variable(extra.first)),
                                  colon(j_t, Monomial::variable(extra.second)));
    return j_next == lhs;
}

} // namespace edgedepth

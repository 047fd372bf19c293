#include "edgedepth/kimura.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace edgedepth {

bool is_strongly_disjoint(const Graph& g, const BipartiteFamily& family) {
    if (family.members.size() != family.matching.size())
        return false;
    std::vector<char> used(static_cast<std::size_t>(g.n_vertices()) + 1, 0);
    for (const auto& member : family.members) {
        if (member.side_a.empty() || member.side_b.empty())
            return false;
        for (int a : member.side_a)
            for (int b : member.side_b)
                if (!g.has_edge(a, b))
                    return false; // not a complete bipartite subgraph
        for (int v : member.side_a) {
            if (v < 1 || v > g.n_vertices() || used[v])
                return false; // vertex sets must be pairwise disjoint
            used[v] = 1;
        }
        for (int v : member.side_b) {
            if (v < 1 || v > g.n_vertices() || used[v])
                return false;
            used[v] = 1;
        }
    }
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        auto [u, v] = family.matching[i];
        const auto& member = family.members[i];
        bool u_in_a = std::count(member.side_a.begin(), member.side_a.end(), u);
        bool u_in_b = std::count(member.side_b.begin(), member.side_b.end(), u);
        bool v_in_a = std::count(member.side_a.begin(), member.side_a.end(), v);
        bool v_in_b = std::count(member.side_b.begin(), member.side_b.end(), v);
        if (!((u_in_a && v_in_b) || (u_in_b && v_in_a)))
            return false; // chosen edge must cross its member
    }
    // the chosen edges form an induced matching of g
    for (std::size_t i = 0; i < family.matching.size(); ++i)
        for (std::size_t j = i + 1; j < family.matching.size(); ++j) {
            int ends[2][2] = {{family.matching[i].first, family.matching[i].second},
                              {family.matching[j].first, family.matching[j].second}};
            for (int a : ends[0])
                for (int b : ends[1])
                    if (a == b || g.has_edge(a, b))
                        return false;
        }
    return true;
}

namespace {

struct DSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<VertexPair> edges;
    long best_total = 0; // max of sum |V(B_i)| - g over all families found
    BipartiteFamily best_family;

    // scratch for the current family
    std::vector<VertexPair> matching;
    std::vector<BipartiteMember> members;

    explicit DSearch(const Graph& graph) : g(graph), n(graph.n_vertices()) {
        adj.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= std::uint64_t(1) << v;
            adj[v] |= std::uint64_t(1) << u;
        }
        edges = g.edges();
    }

    static int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

    // inflate members[at..]; `used` holds vertices of finished members plus
    // the reserved endpoints of pending matched edges; `sum` counts vertices
    // of finished members
    void inflate(std::size_t at, std::uint64_t used, long sum) {
        long g_count = static_cast<long>(matching.size());
        if (at == matching.size()) {
            if (sum - g_count > best_total) {
                best_total = sum - g_count;
                best_family = {members, matching};
            }
            return;
        }
        std::uint64_t all = (std::uint64_t(1) << (n + 1)) - 2;
        long remaining = static_cast<long>(matching.size() - at);
        long optimistic = sum + popcount(all & ~used) + 2 * remaining - g_count;
        if (optimistic <= best_total)
            return;
        auto [u, v] = matching[at];
        // grow (A, B) from ({u}, {v}); candidates are added in ascending
        // order so each pair is enumerated once
        auto grow = [&](auto&& self, std::uint64_t a_mask, std::uint64_t b_mask, int min_next)
            -> void {
            members.push_back({mask_to_list(a_mask), mask_to_list(b_mask)});
            inflate(at + 1, used | a_mask | b_mask, sum + popcount(a_mask | b_mask));
            members.pop_back();
            for (int w = min_next; w <= n; ++w) {
                std::uint64_t bit = std::uint64_t(1) << w;
                if ((used | a_mask | b_mask) & bit)
                    continue;
                if ((b_mask & ~adj[w]) == 0) // w adjacent to all of B: join A
                    self(self, a_mask | bit, b_mask, w + 1);
                if ((a_mask & ~adj[w]) == 0) // w adjacent to all of A: join B
                    self(self, a_mask, b_mask | bit, w + 1);
            }
        };
        grow(grow, std::uint64_t(1) << u, std::uint64_t(1) << v, 1);
    }

    std::vector<int> mask_to_list(std::uint64_t mask) const {
        std::vector<int> out;
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint64_t(1) << v))
                out.push_back(v);
        return out;
    }

    // enumerate induced matchings in edge order; forbidden = vertices whose
    // closed neighborhoods meet the matching so far
    void search_matchings(std::size_t start, std::uint64_t matched) {
        if (!matching.empty())
            inflate(0, matched, 0);
        long g_next = static_cast<long>(matching.size()) + 1;
        if (static_cast<long>(n) - g_next <= best_total)
            return; // even using every vertex cannot beat the best
        for (std::size_t i = start; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            std::uint64_t closed =
                adj[u] | adj[v] | (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
            if (closed & matched)
                continue;
            matching.push_back({u, v});
            search_matchings(i + 1, matched | (std::uint64_t(1) << u) | (std::uint64_t(1) << v));
            matching.pop_back();
        }
    }
};

} // namespace

DValue d_value_witness(const Graph& g, int max_n) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("d_value: graph needs at least one edge");
    if (g.n_vertices() > max_n || g.n_vertices() > 62)
        throw BudgetExceeded("d_value: graph too large for exhaustive family search");
    DSearch search(g);
    search.search_matchings(0, 0);
    return {search.best_total, search.best_family};
}

long d_value(const Graph& g, int max_n) { return d_value_witness(g, max_n).value; }

long pd_weakly_chordal(const Graph& g, int max_n, int weakly_chordal_max_n) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("pd_weakly_chordal: graph needs at least one edge");
    if (!is_weakly_chordal(g, weakly_chordal_max_n))
        throw PreconditionFailed("pd_weakly_chordal: graph is not weakly chordal");
    return d_value(g, max_n);
}

} // namespace edgedepth

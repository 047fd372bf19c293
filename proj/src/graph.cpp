#include "edgedepth/graph.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace edgedepth {

Graph::Graph(int n_vertices, std::vector<VertexPair> edges) : n_(n_vertices) {
    if (n_ < 0)
        throw std::invalid_argument("graph: vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (u < 1 || v > n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("graph: vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        return false;
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

StarlikeShape::StarlikeShape(std::vector<long> a) : branch_lengths(std::move(a)) {
    if (branch_lengths.empty())
        throw std::invalid_argument("starlike shape: need at least one branch");
    for (long ai : branch_lengths)
        if (ai < 1)
            throw std::invalid_argument("starlike shape: branch lengths must be positive");
}

long StarlikeShape::total() const {
    return std::accumulate(branch_lengths.begin(), branch_lengths.end(), 0L);
}

Graph make_path(int n) {
    if (n < 1)
        throw std::invalid_argument("make_path: need n >= 1");
    std::vector<VertexPair> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("make_cycle: need n >= 3");
    std::vector<VertexPair> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph make_starlike(const StarlikeShape& shape) {
    long total = shape.total();
    if (total + 1 > 1000000)
        throw std::invalid_argument("make_starlike: shape too large");
    int n = static_cast<int>(total) + 1;
    std::vector<VertexPair> edges;
    int base = 1;
    for (long ai : shape.branch_lengths) {
        // labels base+1 .. base+ai, leaf first; innermost attaches to root 1
        for (int j = 1; j < ai; ++j)
            edges.push_back({base + j, base + j + 1});
        edges.push_back({1, base + static_cast<int>(ai)});
        base += static_cast<int>(ai);
    }
    return Graph(n, std::move(edges));
}

Graph make_caterpillar3(int d1, int d2, int d3, bool allow_bare_path) {
    if (d1 < 0 || d2 < 0 || d3 < 0)
        throw std::invalid_argument("make_caterpillar3: leaf counts must be non-negative");
    if (d1 + d2 + d3 == 0 && !allow_bare_path)
        throw std::invalid_argument("make_caterpillar3: all leaf counts are zero (bare path not requested)");
    std::vector<VertexPair> edges = {{1, 2}, {2, 3}};
    int next = 4;
    const int d[3] = {d1, d2, d3};
    for (int spine = 1; spine <= 3; ++spine)
        for (int j = 0; j < d[spine - 1]; ++j)
            edges.push_back({spine, next++});
    return Graph(next - 1, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> verts = keep;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 1 || v > g.n_vertices())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> new_label(static_cast<std::size_t>(g.n_vertices()) + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        new_label[verts[i]] = static_cast<int>(i) + 1;
    std::vector<VertexPair> edges;
    for (const auto& [u, v] : g.edges())
        if (new_label[u] && new_label[v])
            edges.push_back({new_label[u], new_label[v]});
    return {Graph(static_cast<int>(verts.size()), std::move(edges)), verts};
}

std::vector<int> leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.n_vertices(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.n_vertices();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.n_vertices() - 1 && is_connected(g);
}

bool is_bipartite(const Graph& g) {
    int n = g.n_vertices();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph complement(const Graph& g) {
    std::vector<VertexPair> edges;
    for (int u = 1; u <= g.n_vertices(); ++u)
        for (int v = u + 1; v <= g.n_vertices(); ++v)
            if (!g.has_edge(u, v))
                edges.push_back({u, v});
    return Graph(g.n_vertices(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<VertexPair> edges = a.edges();
    int shift = a.n_vertices();
    for (const auto& [u, v] : b.edges())
        edges.push_back({u + shift, v + shift});
    return Graph(a.n_vertices() + b.n_vertices(), std::move(edges));
}

namespace {

// Does g have an induced cycle of length >= 5?  Every vertex subset of
// size >= 5 is tested for inducing a cycle: all inside degrees 2 and the
// subset connected.
bool has_long_induced_cycle(const Graph& g) {
    int n = g.n_vertices();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 5)
            continue;
        bool deg_ok = true;
        for (std::uint32_t m = mask; m && deg_ok; m &= m - 1) {
            int v = __builtin_ctz(m);
            if (__builtin_popcount(adj[v] & mask) != 2)
                deg_ok = false;
        }
        if (!deg_ok)
            continue;
        // connectivity inside the mask; with all degrees 2, connected means
        // a single cycle
        std::uint32_t start = mask & (~mask + 1);
        std::uint32_t seen = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1)
                next |= adj[__builtin_ctz(m)] & mask;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == mask)
            return true;
    }
    return false;
}

} // namespace

bool is_weakly_chordal(const Graph& g, int max_n) {
    if (g.n_vertices() > max_n || g.n_vertices() > 30)
        throw BudgetExceeded("is_weakly_chordal: graph too large for exhaustive induced-cycle search");
    if (g.n_vertices() < 5)
        return true;
    return !has_long_induced_cycle(g) && !has_long_induced_cycle(complement(g));
}

int q_bruteforce(const Graph& g, int max_n) {
    int n = g.n_vertices();
    if (n > max_n || n > 30)
        throw BudgetExceeded("q_bruteforce: graph too large for subset enumeration");
    if (n == 0)
        throw std::invalid_argument("q_bruteforce: empty graph");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    int best = n + 1;
    std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (__builtin_popcount(mask) >= best)
            continue;
        bool independent = true;
        for (std::uint32_t m = mask; m && independent; m &= m - 1)
            if (adj[__builtin_ctz(m)] & mask)
                independent = false;
        if (!independent)
            continue;
        bool maximal = true;
        for (std::uint32_t m = full & ~mask; m && maximal; m &= m - 1)
            if (!(adj[__builtin_ctz(m)] & mask))
                maximal = false;
        if (maximal)
            best = __builtin_popcount(mask);
    }
    return best;
}

int q_tree(const Graph& tree) {
    if (!is_tree(tree))
        throw std::invalid_argument("q_tree: input is not a tree");
    int n = tree.n_vertices();
    const long INF = static_cast<long>(n) + 10;
    // states: 0 = in the set, 1 = out and dominated by a child in the set,
    // 2 = out and not dominated within the subtree (parent must cover it)
    std::vector<std::array<long, 3>> dp(static_cast<std::size_t>(n) + 1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0), order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack = {1};
    parent[1] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : tree.neighbors(v))
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        long in_set = 1, out_dom = 0, out_undom = 0;
        long penalty = INF;
        bool has_child = false;
        for (int w : tree.neighbors(v)) {
            if (w == parent[v])
                continue;
            has_child = true;
            in_set = std::min(in_set + std::min(dp[w][1], dp[w][2]), INF);
            long m = std::min(dp[w][0], dp[w][1]);
            out_dom = std::min(out_dom + m, INF);
            penalty = std::min(penalty, dp[w][0] - m);
            out_undom = std::min(out_undom + dp[w][1], INF);
        }
        if (!has_child)
            out_dom = INF;
        else
            out_dom = std::min(out_dom + penalty, INF); // force one child into the set
        dp[v] = {in_set, out_dom, out_undom};
    }
    return static_cast<int>(std::min(dp[1][0], dp[1][1]));
}

bool is_isomorphic(const Graph& a, const Graph& b, int max_n) {
    if (a.n_vertices() != b.n_vertices() || a.edge_count() != b.edge_count())
        return false;
    int n = a.n_vertices();
    if (n > max_n)
        throw BudgetExceeded("is_isomorphic: graph too large for backtracking search");
    if (n == 0)
        return true;
    std::vector<int> da, db;
    for (int v = 1; v <= n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<int> map_ab(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v > n)
            return true;
        for (int w = 1; w <= n; ++w) {
            if (used[w] || da[v - 1] != db[w - 1])
                continue;
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map_ab[u], w))
                    ok = false;
            if (!ok)
                continue;
            map_ab[v] = w;
            used[w] = 1;
            if (place(v + 1))
                return true;
            used[w] = 0;
        }
        return false;
    };
    return place(1);
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m))
        throw ParseError("edge list: expected header line \"n m\"");
    std::vector<VertexPair> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges");
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n_vertices() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

namespace {

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long value = std::stol(item, &pos);
            if (pos != item.size())
                throw ParseError("trailing characters");
            out.push_back(value);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("graph spec: bad integer '" + item + "'");
        }
    }
    return out;
}

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("graph spec: expected FAMILY:ARGS, got '" + spec + "'");
    std::string family = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (family == "path" || family == "cycle") {
        auto vals = parse_long_list(args);
        if (vals.size() != 1)
            throw ParseError("graph spec: " + family + " takes one integer");
        return family == "path" ? make_path(static_cast<int>(vals[0]))
                                : make_cycle(static_cast<int>(vals[0]));
    }
    if (family == "star")
        return make_starlike(StarlikeShape(parse_long_list(args)));
    if (family == "cat3") {
        auto vals = parse_long_list(args);
        if (vals.size() != 3)
            throw ParseError("graph spec: cat3 takes three integers");
        return make_caterpillar3(static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                                 static_cast<int>(vals[2]));
    }
    if (family == "file") {
        std::ifstream in(args);
        if (!in)
            throw ParseError("graph spec: cannot open file '" + args + "'");
        return read_edge_list(in);
    }
    throw ParseError("graph spec: unknown family '" + family + "'");
}

} // namespace edgedepth

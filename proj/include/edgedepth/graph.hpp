#ifndef EDGEDEPTH_GRAPH_HPP
#define EDGEDEPTH_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace edgedepth {

using VertexPair = std::pair<int, int>;

/// Finite simple graph on vertices 1..n.  Immutable after construction;
/// edges are stored normalized (u < v) and sorted.  Isolated vertices are
/// allowed and counted: each one contributes a free variable to the
/// ambient polynomial ring.
class Graph {
public:
    Graph() = default;
    Graph(int n_vertices, std::vector<VertexPair> edges);

    int n_vertices() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Branch-length tuple (a_1, ..., a_k) of a starlike tree: k paths of
/// a_i edges each, joined at a common root.
struct StarlikeShape {
    std::vector<long> branch_lengths;

    explicit StarlikeShape(std::vector<long> a);
    int k() const { return static_cast<int>(branch_lengths.size()); }
    long total() const; // |a| = a_1 + ... + a_k
};

Graph make_path(int n);
Graph make_cycle(int n);

// Root is vertex 1.  Branch i occupies the next a_i labels, outermost
// leaf first, so the vertex adjacent to the root has the largest label
// within its branch.
Graph make_starlike(const StarlikeShape& shape);

// Spine vertices are 1,2,3 with edges {1,2},{2,3}; d_i leaves hang off
// spine vertex i and are labeled 4,5,... in spine order.  A bare P_3
// (all d_i = 0) must be requested explicitly.
Graph make_caterpillar3(int d1, int d2, int d3, bool allow_bare_path = false);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // vertex_map[i] = original label of new vertex i+1
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::vector<int> leaves(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// True iff neither g nor its complement has an induced cycle of length >= 5.
// Exhaustive subset search; throws BudgetExceeded when n exceeds max_n.
bool is_weakly_chordal(const Graph& g, int max_n = 14);

// Minimum size of a maximal independent set, by enumeration over all
// vertex subsets.  Throws BudgetExceeded when n exceeds max_n.
int q_bruteforce(const Graph& g, int max_n = 20);

// Same value as q_bruteforce but restricted to trees; linear-time
// three-state dynamic program over a rooted tree.
int q_tree(const Graph& tree);

// Backtracking isomorphism test with degree pruning; intended for the
// small consistency checks only.
bool is_isomorphic(const Graph& a, const Graph& b, int max_n = 10);

// Edge-list format: first line "n m", then m lines "u v" (1-indexed).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Graph spec strings understood by the CLI: path:N, cycle:N,
// star:a1,a2,..., cat3:d1,d2,d3, file:PATH.
Graph parse_graph_spec(const std::string& spec);

} // namespace edgedepth

#endif

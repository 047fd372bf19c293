#ifndef EDGEDEPTH_COLON_HPP
#define EDGEDEPTH_COLON_HPP

#include "edgedepth/graph.hpp"
#include "edgedepth/monomial.hpp"

#include <utility>
#include <vector>

namespace edgedepth {

/// A product of edges of a base graph, with multiplicity.  Plays the role
/// of the monomial f = e_1 ... e_{t-1} that powers of the edge ideal are
/// coloned by.
struct EdgeProduct {
    Graph base;
    std::vector<VertexPair> factors;

    EdgeProduct(Graph g, std::vector<VertexPair> edge_factors);
    long t() const { return static_cast<long>(factors.size()) + 1; }
};

Monomial factor_monomial(const EdgeProduct& ep);

// u and v are f-even connected: some walk u, x_1, ..., x_{2k}, v along
// edges of the base graph whose odd steps x_{2i-1} x_{2i} are factor edges
// and whose interior product x_1 ... x_{2k} divides the factor monomial.
// k = 0 degenerates to adjacency; u == v tests closed even walks.
bool even_connected(const EdgeProduct& ep, int u, int v);

/// Generators of I^t : f as a graph plus the vertices u with u^2 in the
/// colon (closed even walks; only possible when the base has odd cycles).
struct ColonGraph {
    Graph graph;
    std::vector<int> square_vertices;
};

ColonGraph banerjee_colon_graph(const EdgeProduct& ep);

// The quadratic ideal the colon graph describes: its edges plus the
// squares of the listed vertices.
MonomialIdeal colon_graph_ideal(const ColonGraph& cg);

// P_n plus all chords {i, j} with i < j <= t+2 and i+j odd.
Graph path_colon_graph(int n, int t);
// C_n plus the same parity chords.
Graph cycle_colon_graph(int n, int t);

// The induced subgraph on the union of closed neighborhoods of the factor
// supports is bipartite.
bool neighborhood_odd_cycle_free(const EdgeProduct& ep);

// Checks J_{t+1} = J_t : u  intersect  J_t : v on the monomial side, where
// J_s = I^s : (e_1 ... e_{s-1}), the factor list holds e_1..e_{t-1} and
// extra = e_t = uv.  Preconditions: all edges distinct, and the
// neighborhood of the combined support has no odd cycle.
bool colon_factorization_check(const EdgeProduct& ep, VertexPair extra);

} // namespace edgedepth

#endif

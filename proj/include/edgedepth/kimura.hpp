#ifndef EDGEDEPTH_KIMURA_HPP
#define EDGEDEPTH_KIMURA_HPP

#include "edgedepth/graph.hpp"

#include <vector>

namespace edgedepth {

/// One complete bipartite member (A, B): every pair {a, b} with a in A,
/// b in B must be an edge of the host graph.
struct BipartiteMember {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// A family of complete bipartite subgraphs with one chosen edge each.
struct BipartiteFamily {
    std::vector<BipartiteMember> members;
    std::vector<VertexPair> matching; // matching[i] crosses members[i]
};

// The three defining conditions, checked literally: complete bipartite
// members, pairwise disjoint vertex sets, chosen edges an induced matching.
bool is_strongly_disjoint(const Graph& g, const BipartiteFamily& family);

struct DValue {
    long value = 0;
    BipartiteFamily witness;
};

// d(G) = max over strongly disjoint families of sum |V(B_i)| - g.
// Exhaustive search: induced matchings in canonical order, then disjoint
// bipartite inflations of the matched edges with branch-and-bound.
DValue d_value_witness(const Graph& g, int max_n = 12);
long d_value(const Graph& g, int max_n = 12);

// pd(S/I(G)) = d(G) for weakly chordal G with at least one edge.
long pd_weakly_chordal(const Graph& g, int max_n = 12, int weakly_chordal_max_n = 14);

} // namespace edgedepth

#endif

#ifndef EDGEDEPTH_FORMULAS_HPP
#define EDGEDEPTH_FORMULAS_HPP

#include "edgedepth/graph.hpp"

#include <array>
#include <vector>

namespace edgedepth {

// ceil(a / b) for integers, b > 0, exact for negative a as well
long ceil_div(long a, long b);

// phi(n, t) = ceil((n - t + 1) / 3); total on integers
long phi(long n, long t);

long depth_path(long n);  // ceil(n/3), n >= 2
long depth_cycle(long n); // ceil((n-1)/3), n >= 3

// depth S/I(P_n)^t = max(phi(n, t), 1)
long depth_path_power(long n, long t);

// Piecewise formula for cycles; n in {3, 4} handled by a small-case table,
// n >= 5 by the four-case theorem (initial value, phi range, stable tail).
long depth_cycle_power(long n, long t);

// g(a) = sum ceil((a_i - 1)/3), plus 1 unless no entry is 1 mod 3 and
// some entry is 2 mod 3.  Defined on non-negative tuples.
long g_value(const std::vector<long>& a);
long g_value(const StarlikeShape& shape);

/// The greedy split of the budget t-1 across residue classes, after the
/// canonical reordering (residue 2 first, then 0, then 1; ties by
/// descending entry).
struct BetaSplit {
    std::array<long, 3> alpha{}; // alpha[r] = #entries with a_i = r (mod 3)
    long beta1 = 0, beta2 = 0, beta3 = 0;
    std::vector<long> reordered_a;
    std::vector<long> b; // reduced tuple
};

BetaSplit beta_split(const StarlikeShape& shape, long t);

// min of g(a - t) over t <= a - 1 componentwise with |t| = budget;
// dynamic program over branches.
long min_g_after_spending(const std::vector<long>& a, long budget);

struct StarlikeDepth {
    long depth;
    bool beyond_theorem_range; // t > s = |a| - k: the stable tail value 1
};

// depth S/I(T_a)^t for any t >= 1; the theorem range 1 <= t <= s uses the
// exact minimization, beyond it the profile has stabilized at 1.
StarlikeDepth depth_starlike_power(const StarlikeShape& shape, long t);

long depth_caterpillar3_power(long d1, long d2, long d3, long t);

// depth S/I(T) = q(T) for trees
long depth_tree(const Graph& tree);

long dstab_tree(const Graph& tree); // n - (number of leaves), at least 1
long dstab_cycle(long n);           // ceil((n+1)/2), n >= 5

// depth of S/(I+J)^s for ideals in disjoint variable sets, from the two
// depth profiles (dI[t-1] = depth R/I^t):
//   min over i in [1,s-1], j in [1,s] of
//     { dI[s-i] + dJ[i] + 1,  dI[s-j+1] + dJ[j] }
long depth_sum_powers(const std::vector<long>& dI, const std::vector<long>& dJ, long s);

/// Depth values by power together with the stabilization data.
struct DepthProfile {
    std::vector<long> values; // values[t-1] = depth at power t
    long stable_value = 0;
    long stable_index = 0; // dstab: values[t-1] == stable_value for t >= stable_index
};

struct FamilyInfo {
    enum class Kind { empty, path, cycle, starlike, caterpillar3, tree, unknown };
    Kind kind = Kind::unknown;
    std::vector<long> star_shape; // starlike branch lengths
    int d1 = 0, d2 = 0, d3 = 0;   // caterpillar leaf counts
};

// Structural recognition of the formula families, most specific first:
// edgeless, path, cycle, starlike, 3-spine caterpillar, general tree.
FamilyInfo recognize_family(const Graph& g);

// Closed-form depth of S/I(G)^t; throws UnsupportedFamily when no formula
// applies (general trees support only t = 1).
long formula_depth(const Graph& g, long t);

DepthProfile formula_profile(const Graph& g, long t_max);

} // namespace edgedepth

#endif

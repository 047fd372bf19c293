#ifndef EDGEDEPTH_ORACLE_HPP
#define EDGEDEPTH_ORACLE_HPP

#include "edgedepth/graph.hpp"
#include "edgedepth/monomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace edgedepth {

/// Resource caps for the oracle.  Exceeding any of them raises
/// BudgetExceeded; there is no approximate fallback.
struct OracleCaps {
    long max_generators = 120;
    long max_lattice = 20000;
    long max_faces = 2000000; // per open interval, order-complex faces after coring
    int threads = 0;          // 0 = hardware concurrency
};

/// All lcms of nonempty subsets of the minimal generators, plus the
/// bottom element 1, ordered by divisibility.
struct LcmLattice {
    int n_vars = 0;
    std::vector<Monomial> elements;    // elements[0] == 1; rest sorted by degree, then lex
    std::vector<std::size_t> atoms;    // indices of the minimal generators
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const OracleCaps& caps = {});

/// Multigraded Betti numbers of the quotient S/I: entries[(i, m)] is
/// beta_{i,m}(S/I) for i >= 1; zero entries are absent.
struct BettiTable {
    std::map<std::pair<long, Monomial>, long> entries;

    long pd() const; // projective dimension of S/I: largest index present, 0 when empty
    long total(long i) const;
    std::string str() const;
};

// beta_{i,m}(S/I) as the rank of reduced homology in degree i-2 of the
// order complex of the open interval (1, m) in the lcm lattice, over the
// rationals.
BettiTable betti_numbers(const MonomialIdeal& ideal, const OracleCaps& caps = {});

// depth S/I = n_vars - pd(S/I) by Auslander-Buchsbaum.  The zero ideal
// has depth n_vars.
long depth_oracle(const MonomialIdeal& ideal, const OracleCaps& caps = {});
long pd_oracle(const MonomialIdeal& ideal, const OracleCaps& caps = {});

long depth_power_oracle(const Graph& g, long t, const OracleCaps& caps = {});

} // namespace edgedepth

#endif

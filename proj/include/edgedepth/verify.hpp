#ifndef EDGEDEPTH_VERIFY_HPP
#define EDGEDEPTH_VERIFY_HPP

#include "edgedepth/config.hpp"
#include "edgedepth/graph.hpp"
#include "edgedepth/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgedepth {

/// One verification case: a formula value and an independently computed
/// value, with agreement when both are available.
struct RunReport {
    std::string graph_spec;
    long power = 0;
    std::optional<long> formula_depth;
    std::optional<long> oracle_depth;
    std::optional<bool> agreement; // present iff both depths are
    std::string status;            // ok | mismatch | budget-exceeded | error
    std::string note;
    double ms = 0.0;
};

struct SweepResult {
    std::vector<RunReport> reports;
    long ok = 0, mismatches = 0, budget_exceeded = 0, errors = 0;

    // 0 all agree; 1 any disagreement; 3 budget-exceeded cases only
    int exit_code() const;
    void tally();
};

enum class Family {
    paths,
    cycles,
    starlike,
    caterpillars,
    trees,
    kimura,
    colon,
    factorization,
    mixedsum,
    properties,
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family family);

struct VerifyOptions {
    OracleCaps caps;
    int workers = 0; // sweep-level parallelism; 0 = hardware
    unsigned seed = 271828;

    long paths_n_max = 9;
    long cycles_n_max = 9;
    long starlike_k_max = 3, starlike_sum_max = 7, starlike_t_max = 3;
    long cat_d_max = 2, cat_t_max = 3;
    long trees_samples = 50, trees_n_max = 9;
    long qident_samples = 200, qident_n_max = 12;
    long kimura_samples = 100, kimura_n_max = 7, gnt_n_max = 8;
    long colon_n_max = 8, colon_t_max = 3;
    long fact_samples = 100, fact_tree_n_max = 8;
    long prop_ceil_bound = 200;
    long prop_g_k_max = 4, prop_g_a_max = 9;
    long prop_leaf_colon_n_max = 7, prop_leaf_colon_t_max = 4;
    long prop_subtree_samples = 100, prop_subtree_n_max = 10;

    static VerifyOptions from_config(const Config& config);
};

SweepResult run_family_sweep(Family family, const VerifyOptions& options);

// Deterministic random labeled tree (Prufer decode).
Graph prufer_decode(const std::vector<int>& seq, int n);

} // namespace edgedepth

#endif

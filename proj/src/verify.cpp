#include "edgedepth/verify.hpp"
#include "edgedepth/colon.hpp"
#include "edgedepth/errors.hpp"
#include "edgedepth/formulas.hpp"
#include "edgedepth/kimura.hpp"
#include "edgedepth/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace edgedepth {

int SweepResult::exit_code() const {
    if (mismatches > 0 || errors > 0)
        return 1;
    if (budget_exceeded > 0)
        return 3;
    return 0;
}

void SweepResult::tally() {
    ok = mismatches = budget_exceeded = errors = 0;
    for (const auto& report : reports) {
        if (report.status == "ok")
            ++ok;
        else if (report.status == "mismatch")
            ++mismatches;
        else if (report.status == "budget-exceeded")
            ++budget_exceeded;
        else
            ++errors;
    }
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "paths") return Family::paths;
    if (name == "cycles") return Family::cycles;
    if (name == "starlike") return Family::starlike;
    if (name == "caterpillars") return Family::caterpillars;
    if (name == "trees") return Family::trees;
    if (name == "kimura") return Family::kimura;
    if (name == "colon") return Family::colon;
    if (name == "factorization") return Family::factorization;
    if (name == "mixedsum") return Family::mixedsum;
    if (name == "properties") return Family::properties;
    return std::nullopt;
}

std::string family_name(Family family) {
    switch (family) {
    case Family::paths: return "paths";
    case Family::cycles: return "cycles";
    case Family::starlike: return "starlike";
    case Family::caterpillars: return "caterpillars";
    case Family::trees: return "trees";
    case Family::kimura: return "kimura";
    case Family::colon: return "colon";
    case Family::factorization: return "factorization";
    case Family::mixedsum: return "mixedsum";
    case Family::properties: return "properties";
    }
    return "?";
}

VerifyOptions VerifyOptions::from_config(const Config& config) {
    VerifyOptions options;
    options.caps.max_generators = config.get_long("max_generators", options.caps.max_generators);
    options.caps.max_lattice = config.get_long("max_lattice", options.caps.max_lattice);
    options.caps.max_faces = config.get_long("max_faces", options.caps.max_faces);
    options.caps.threads = config.get_int("oracle_threads", options.caps.threads);
    options.workers = config.get_int("workers", options.workers);
    options.seed = static_cast<unsigned>(config.get_long("seed", options.seed));
    options.paths_n_max = config.get_long("paths_n_max", options.paths_n_max);
    options.cycles_n_max = config.get_long("cycles_n_max", options.cycles_n_max);
    options.starlike_k_max = config.get_long("starlike_k_max", options.starlike_k_max);
    options.starlike_sum_max = config.get_long("starlike_sum_max", options.starlike_sum_max);
    options.starlike_t_max = config.get_long("starlike_t_max", options.starlike_t_max);
    options.cat_d_max = config.get_long("cat_d_max", options.cat_d_max);
    options.cat_t_max = config.get_long("cat_t_max", options.cat_t_max);
    options.trees_samples = config.get_long("trees_samples", options.trees_samples);
    options.trees_n_max = config.get_long("trees_n_max", options.trees_n_max);
    options.qident_samples = config.get_long("qident_samples", options.qident_samples);
    options.qident_n_max = config.get_long("qident_n_max", options.qident_n_max);
    options.kimura_samples = config.get_long("kimura_samples", options.kimura_samples);
    options.kimura_n_max = config.get_long("kimura_n_max", options.kimura_n_max);
    options.gnt_n_max = config.get_long("gnt_n_max", options.gnt_n_max);
    options.colon_n_max = config.get_long("colon_n_max", options.colon_n_max);
    options.colon_t_max = config.get_long("colon_t_max", options.colon_t_max);
    options.fact_samples = config.get_long("fact_samples", options.fact_samples);
    options.fact_tree_n_max = config.get_long("fact_tree_n_max", options.fact_tree_n_max);
    return options;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 1)
        throw std::invalid_argument("prufer_decode: need n >= 1");
    if (n <= 2) {
        if (!seq.empty())
            throw std::invalid_argument("prufer_decode: sequence must be empty for n <= 2");
        std::vector<VertexPair> edges;
        if (n == 2)
            edges.push_back({1, 2});
        return Graph(n, std::move(edges));
    }
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: sequence length must be n - 2");
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : seq) {
        if (v < 1 || v > n)
            throw std::invalid_argument("prufer_decode: label out of range");
        ++degree[v];
    }
    std::vector<VertexPair> edges;
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    int leaf_scan = 1;
    int leaf = -1;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) {
            leaf = v;
            leaf_scan = v;
            break;
        }
    for (int v : seq) {
        edges.push_back({leaf, v});
        done[leaf] = 1;
        if (--degree[v] == 1 && v < leaf_scan) {
            leaf = v;
        } else {
            while (leaf_scan <= n && (done[leaf_scan] || degree[leaf_scan] != 1))
                ++leaf_scan;
            leaf = leaf_scan;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!done[v] && v != leaf)
            edges.push_back({leaf, v});
    return Graph(n, std::move(edges));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string spec_of_edges(const Graph& g) {
    std::ostringstream out;
    out << "edges:" << g.n_vertices() << ':';
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first)
            out << ',';
        first = false;
        out << u << '-' << v;
    }
    return out.str();
}

struct Case {
    std::string spec;
    long power;
    std::function<void(RunReport&)> run;
};

// Runs cases on a small worker pool; report order is the generation order.
SweepResult run_cases(std::vector<Case> cases, const VerifyOptions& options) {
    SweepResult result;
    result.reports.resize(cases.size());
    int workers = options.workers;
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? static_cast<int>(hw) : 1;
    }
    workers = std::min<int>(workers, static_cast<int>(cases.size()) > 0
                                         ? static_cast<int>(cases.size())
                                         : 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size())
                return;
            RunReport& report = result.reports[i];
            report.graph_spec = cases[i].spec;
            report.power = cases[i].power;
            auto start = Clock::now();
            try {
                cases[i].run(report);
            } catch (const BudgetExceeded& e) {
                report.status = "budget-exceeded";
                report.note = e.what();
            } catch (const std::exception& e) {
                report.status = "error";
                report.note = e.what();
            }
            report.ms = elapsed_ms(start);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    result.tally();
    return result;
}

OracleCaps case_caps(const VerifyOptions& options) {
    OracleCaps caps = options.caps;
    if (options.workers != 1)
        caps.threads = 1; // the pool already keeps all cores busy
    return caps;
}

void compare_depths(RunReport& report, long formula, long oracle) {
    report.formula_depth = formula;
    report.oracle_depth = oracle;
    report.agreement = formula == oracle;
    report.status = *report.agreement ? "ok" : "mismatch";
    if (!*report.agreement)
        report.note = "formula " + std::to_string(formula) + " vs oracle " +
                      std::to_string(oracle);
}

std::vector<Case> cases_paths(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    for (long n = 2; n <= options.paths_n_max; ++n)
        for (long t = 1; t <= n - 1; ++t)
            cases.push_back({"path:" + std::to_string(n), t, [n, t, caps](RunReport& report) {
                                 compare_depths(report, depth_path_power(n, t),
                                                depth_power_oracle(make_path(static_cast<int>(n)),
                                                                   t, caps));
                             }});
    return cases;
}

std::vector<Case> cases_cycles(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    for (long n = 3; n <= options.cycles_n_max; ++n) {
        long t_max = (n + 2) / 2 + 1; // one past the stabilization index
        for (long t = 1; t <= t_max; ++t)
            cases.push_back({"cycle:" + std::to_string(n), t, [n, t, caps](RunReport& report) {
                                 compare_depths(report, depth_cycle_power(n, t),
                                                depth_power_oracle(make_cycle(static_cast<int>(n)),
                                                                   t, caps));
                             }});
    }
    return cases;
}

void shapes_rec(long k_max, long sum_max, long min_part, std::vector<long>& current,
                std::vector<std::vector<long>>& out) {
    if (!current.empty())
        out.push_back(current);
    if (static_cast<long>(current.size()) == k_max)
        return;
    long used = 0;
    for (long x : current)
        used += x;
    for (long next = min_part; used + next <= sum_max; ++next) {
        current.push_back(next);
        shapes_rec(k_max, sum_max, next, current, out);
        current.pop_back();
    }
}

// canonical starlike shapes: non-decreasing tuples, dedup by sortedness
std::vector<std::vector<long>> starlike_shapes(long k_max, long sum_max) {
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    shapes_rec(k_max, sum_max, 1, current, out);
    return out;
}

std::string star_spec(const std::vector<long>& shape) {
    std::ostringstream out;
    out << "star:";
    for (std::size_t i = 0; i < shape.size(); ++i)
        out << (i ? "," : "") << shape[i];
    return out.str();
}

std::vector<Case> cases_starlike(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    for (const auto& shape : starlike_shapes(options.starlike_k_max, options.starlike_sum_max))
        for (long t = 1; t <= options.starlike_t_max; ++t)
            cases.push_back({star_spec(shape), t, [shape, t, caps](RunReport& report) {
                                 StarlikeShape s(shape);
                                 compare_depths(report, depth_starlike_power(s, t).depth,
                                                depth_power_oracle(make_starlike(s), t, caps));
                             }});
    return cases;
}

std::vector<Case> cases_caterpillars(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    long d_max = options.cat_d_max;
    for (long d1 = 0; d1 <= d_max; ++d1)
        for (long d2 = 0; d2 <= d_max; ++d2)
            for (long d3 = 0; d3 <= d_max; ++d3)
                for (long t = 1; t <= options.cat_t_max; ++t) {
                    std::string spec = "cat3:" + std::to_string(d1) + "," + std::to_string(d2) +
                                       "," + std::to_string(d3);
                    cases.push_back({spec, t, [d1, d2, d3, t, caps](RunReport& report) {
                                         Graph g = make_caterpillar3(
                                             static_cast<int>(d1), static_cast<int>(d2),
                                             static_cast<int>(d3), true);
                                         compare_depths(report,
                                                        depth_caterpillar3_power(d1, d2, d3, t),
                                                        depth_power_oracle(g, t, caps));
                                     }});
                }
    return cases;
}

std::vector<int> random_prufer(std::mt19937& rng, int n) {
    std::vector<int> seq;
    if (n <= 2)
        return seq;
    std::uniform_int_distribution<int> label(1, n);
    for (int i = 0; i < n - 2; ++i)
        seq.push_back(label(rng));
    return seq;
}

std::string prufer_spec(const std::vector<int>& seq, int n) {
    std::ostringstream out;
    out << "prufer:" << n;
    for (int v : seq)
        out << ',' << v;
    return out.str();
}

std::vector<Case> cases_trees(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<int> size(2, static_cast<int>(options.trees_n_max));
    for (long i = 0; i < options.trees_samples; ++i) {
        int n = size(rng);
        auto seq = random_prufer(rng, n);
        cases.push_back({prufer_spec(seq, n), 1, [seq, n, caps](RunReport& report) {
                             Graph tree = prufer_decode(seq, n);
                             compare_depths(report, q_tree(tree),
                                            depth_power_oracle(tree, 1, caps));
                         }});
    }
    // q_tree against the brute-force oracle on larger trees
    std::uniform_int_distribution<int> qsize(2, static_cast<int>(options.qident_n_max));
    for (long i = 0; i < options.qident_samples; ++i) {
        int n = qsize(rng);
        auto seq = random_prufer(rng, n);
        cases.push_back({prufer_spec(seq, n), 0, [seq, n](RunReport& report) {
                             Graph tree = prufer_decode(seq, n);
                             compare_depths(report, q_tree(tree), q_bruteforce(tree));
                         }});
    }
    return cases;
}

std::vector<Case> cases_kimura(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    std::mt19937 rng(options.seed + 1);
    std::uniform_int_distribution<int> size(2, static_cast<int>(options.kimura_n_max));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    long accepted = 0;
    while (accepted < options.kimura_samples) {
        int n = size(rng);
        std::vector<VertexPair> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng) < 0.5)
                    edges.push_back({u, v});
        Graph g(n, std::move(edges));
        if (g.edge_count() == 0 || !is_weakly_chordal(g))
            continue;
        ++accepted;
        cases.push_back({spec_of_edges(g), 1, [g, caps](RunReport& report) {
                             long pd_k = pd_weakly_chordal(g);
                             long pd_o = pd_oracle(edge_ideal(g), caps);
                             compare_depths(report, g.n_vertices() - pd_k,
                                            g.n_vertices() - pd_o);
                         }});
    }
    // closed check on the path colon graphs: pd(G_{n,t}) = n - phi(n,t)
    for (long n = 4; n <= options.gnt_n_max; ++n)
        for (long t = 2; t <= n - 2; ++t) {
            std::string spec = "gnt:" + std::to_string(n) + "," + std::to_string(t);
            cases.push_back({spec, t, [n, t](RunReport& report) {
                                 Graph g = path_colon_graph(static_cast<int>(n),
                                                            static_cast<int>(t));
                                 long pd_k = pd_weakly_chordal(g);
                                 compare_depths(report, phi(n, t), n - pd_k);
                             }});
        }
    return cases;
}

std::vector<Case> cases_colon(const VerifyOptions& options) {
    std::vector<Case> cases;
    for (int kind = 0; kind < 2; ++kind) {
        bool is_cycle = kind == 1;
        for (long n = is_cycle ? 3 : 2; n <= options.colon_n_max; ++n) {
            for (long t = 1; t <= options.colon_t_max; ++t) {
                if (t > n - 1)
                    continue;
                std::string spec =
                    (is_cycle ? "cycle:" : "path:") + std::to_string(n);
                cases.push_back({spec, t, [is_cycle, n, t](RunReport& report) {
                    Graph g = is_cycle ? make_cycle(static_cast<int>(n))
                                       : make_path(static_cast<int>(n));
                    // factors e_2 .. e_t
                    std::vector<VertexPair> factors;
                    for (long i = 2; i <= t; ++i)
                        factors.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
                    EdgeProduct ep(g, factors);
                    ColonGraph cg = banerjee_colon_graph(ep);
                    MonomialIdeal lhs = colon_graph_ideal(cg);
                    MonomialIdeal rhs = colon(power(edge_ideal(g), t), factor_monomial(ep));
                    bool sound = lhs == rhs;
                    bool closed_form_ok = true;
                    if (t >= 2 && t <= n - 2) {
                        Graph predicted = is_cycle
                                              ? cycle_colon_graph(static_cast<int>(n),
                                                                  static_cast<int>(t))
                                              : path_colon_graph(static_cast<int>(n),
                                                                 static_cast<int>(t));
                        closed_form_ok =
                            predicted == cg.graph && cg.square_vertices.empty();
                    }
                    report.status = (sound && closed_form_ok) ? "ok" : "mismatch";
                    if (!sound)
                        report.note = "Banerjee graph ideal differs from the monomial colon";
                    else if (!closed_form_ok)
                        report.note = "parity-rule colon graph differs from the Banerjee graph";
                }});
            }
        }
    }
    return cases;
}

std::vector<Case> cases_factorization(const VerifyOptions& options) {
    std::vector<Case> cases;
    std::mt19937 rng(options.seed + 2);
    long made = 0;
    std::uniform_int_distribution<int> tree_n(4, static_cast<int>(options.fact_tree_n_max));
    std::uniform_int_distribution<int> cycle_n(8, 10);
    std::uniform_int_distribution<int> count(1, 2); // |factors|; lemma index t = count+1
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (made < options.fact_samples) {
        bool use_cycle = coin(rng) < 0.4;
        Graph g;
        if (use_cycle) {
            g = make_cycle(cycle_n(rng));
        } else {
            int n = tree_n(rng);
            g = prufer_decode(random_prufer(rng, n), n);
        }
        const auto& all_edges = g.edges();
        int want = count(rng) + 1; // factors plus the extra edge
        if (static_cast<int>(all_edges.size()) < want)
            continue;
        std::vector<int> idx(all_edges.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = static_cast<int>(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<VertexPair> chosen;
        for (int i = 0; i < want; ++i)
            chosen.push_back(all_edges[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        VertexPair extra = chosen.back();
        chosen.pop_back();
        std::vector<VertexPair> with_extra = chosen;
        with_extra.push_back(extra);
        if (!neighborhood_odd_cycle_free(EdgeProduct(g, with_extra)))
            continue;
        ++made;
        std::string spec = spec_of_edges(g);
        cases.push_back({spec, static_cast<long>(chosen.size()) + 1,
                         [g, chosen, extra](RunReport& report) {
                             bool holds = colon_factorization_check(EdgeProduct(g, chosen), extra);
                             report.status = holds ? "ok" : "mismatch";
                             if (!holds)
                                 report.note = "J_{t+1} != J_t:u intersect J_t:v";
                         }});
    }
    return cases;
}

std::vector<Case> cases_mixedsum(const VerifyOptions& options) {
    std::vector<Case> cases;
    OracleCaps caps = case_caps(options);
    std::vector<std::pair<std::string, Graph>> parts = {
        {"path:3", make_path(3)}, {"path:4", make_path(4)}, {"cycle:3", make_cycle(3)}};
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a; b < parts.size(); ++b)
            for (long s = 1; s <= 2; ++s) {
                std::string spec = parts[a].first + "+" + parts[b].first;
                Graph ga = parts[a].second, gb = parts[b].second;
                cases.push_back({spec, s, [ga, gb, s, caps](RunReport& report) {
                                     std::vector<long> dI, dJ;
                                     for (long t = 1; t <= s; ++t) {
                                         dI.push_back(depth_power_oracle(ga, t, caps));
                                         dJ.push_back(depth_power_oracle(gb, t, caps));
                                     }
                                     long combined = depth_sum_powers(dI, dJ, s);
                                     long direct = depth_power_oracle(disjoint_union(ga, gb), s,
                                                                      caps);
                                     compare_depths(report, combined, direct);
                                 }});
            }
    return cases;
}

std::vector<Case> cases_properties(const VerifyOptions& options) {
    std::vector<Case> cases;
    long bound = options.prop_ceil_bound;
    cases.push_back({"ceiling-superadditivity", 0, [bound](RunReport& report) {
                         for (long a = -bound; a <= bound; ++a)
                             for (long b = -bound; b <= bound; ++b)
                                 if (ceil_div(a, 3) + ceil_div(b, 3) < ceil_div(a + b, 3)) {
                                     report.status = "mismatch";
                                     report.note = "a=" + std::to_string(a) +
                                                   " b=" + std::to_string(b);
                                     return;
                                 }
                         report.status = "ok";
                     }});
    long k_max = options.prop_g_k_max, a_max = options.prop_g_a_max;
    cases.push_back({"g-recurrences", 0, [k_max, a_max](RunReport& report) {
        std::vector<long> shape;
        auto sweep = [&](auto&& self) -> bool {
            if (!shape.empty()) {
                for (std::size_t i = 0; i < shape.size(); ++i) {
                    if (shape[i] >= 3) {
                        auto reduced = shape;
                        reduced[i] -= 3;
                        if (g_value(shape) != g_value(reduced) + 1)
                            return false;
                    }
                    if (shape[i] >= 2) {
                        auto reduced = shape;
                        reduced[i] -= 2;
                        if (g_value(shape) > 1 + g_value(reduced))
                            return false;
                    }
                }
            }
            if (static_cast<long>(shape.size()) == k_max)
                return true;
            for (long next = 1; next <= a_max; ++next) {
                shape.push_back(next);
                bool ok = self(self);
                shape.pop_back();
                if (!ok)
                    return false;
            }
            return true;
        };
        report.status = sweep(sweep) ? "ok" : "mismatch";
    }});
    long lc_n = options.prop_leaf_colon_n_max, lc_t = options.prop_leaf_colon_t_max;
    cases.push_back({"leaf-edge-colon", 0, [lc_n, lc_t](RunReport& report) {
        // I(G)^t : (xy) = I(G)^{t-1} for a leaf x with neighbor y
        std::mt19937 rng(99);
        for (int sample = 0; sample < 40; ++sample) {
            int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(lc_n - 1));
            Graph tree = prufer_decode(random_prufer(rng, n), n);
            MonomialIdeal ideal = edge_ideal(tree);
            for (int x : leaves(tree)) {
                int y = tree.neighbors(x)[0];
                for (long t = 2; t <= lc_t; ++t) {
                    MonomialIdeal lhs = colon(power(ideal, t), Monomial::edge(x, y));
                    if (!(lhs == power(ideal, t - 1))) {
                        report.status = "mismatch";
                        report.note = "leaf colon failed on a tree with n=" + std::to_string(n);
                        return;
                    }
                }
            }
        }
        report.status = "ok";
    }});
    cases.push_back({"non-increasing-profiles", 0, [](RunReport& report) {
        auto check = [](const std::vector<long>& values) {
            for (std::size_t i = 1; i < values.size(); ++i)
                if (values[i] > values[i - 1])
                    return false;
            return true;
        };
        for (long n = 2; n <= 30; ++n) {
            std::vector<long> path_profile, cycle_profile;
            for (long t = 1; t <= n + 2; ++t) {
                path_profile.push_back(depth_path_power(n, t));
                if (n >= 3)
                    cycle_profile.push_back(depth_cycle_power(n, t));
            }
            if (!check(path_profile) || !check(cycle_profile)) {
                report.status = "mismatch";
                report.note = "profile increases at n=" + std::to_string(n);
                return;
            }
        }
        for (const auto& shape : starlike_shapes(4, 4 * 7)) {
            bool small = true;
            for (long x : shape)
                small &= x <= 7;
            if (!small || static_cast<long>(shape.size()) > 4)
                continue;
            StarlikeShape s(shape);
            std::vector<long> profile;
            long t_max = s.total() - s.k() + 2;
            for (long t = 1; t <= t_max; ++t)
                profile.push_back(depth_starlike_power(s, t).depth);
            if (!check(profile)) {
                report.status = "mismatch";
                report.note = "starlike profile increases";
                return;
            }
        }
        for (long d1 = 0; d1 <= 5; ++d1)
            for (long d2 = 0; d2 <= 5; ++d2)
                for (long d3 = 0; d3 <= 5; ++d3) {
                    std::vector<long> profile;
                    for (long t = 1; t <= 5; ++t)
                        profile.push_back(depth_caterpillar3_power(d1, d2, d3, t));
                    if (!check(profile)) {
                        report.status = "mismatch";
                        report.note = "caterpillar profile increases";
                        return;
                    }
                }
        report.status = "ok";
    }});
    long sub_samples = options.prop_subtree_samples, sub_n = options.prop_subtree_n_max;
    unsigned seed = options.seed + 3;
    cases.push_back({"subtree-q-monotone", 0, [sub_samples, sub_n, seed](RunReport& report) {
        std::mt19937 rng(seed);
        for (long i = 0; i < sub_samples; ++i) {
            int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(sub_n - 1));
            Graph big = prufer_decode(random_prufer(rng, n), n);
            // grow a random connected vertex set
            int target = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            std::vector<int> chosen = {1 + static_cast<int>(rng() % static_cast<unsigned>(n))};
            std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
            in[static_cast<std::size_t>(chosen[0])] = 1;
            while (static_cast<int>(chosen.size()) < target) {
                std::vector<int> frontier;
                for (int v : chosen)
                    for (int w : big.neighbors(v))
                        if (!in[w])
                            frontier.push_back(w);
                if (frontier.empty())
                    break;
                int pick = frontier[rng() % frontier.size()];
                in[static_cast<std::size_t>(pick)] = 1;
                chosen.push_back(pick);
            }
            Graph small = induced_subgraph(big, chosen).graph;
            if (q_tree(small) > q_tree(big)) {
                report.status = "mismatch";
                report.note = "q increased on a subtree, n=" + std::to_string(n);
                return;
            }
        }
        report.status = "ok";
    }});
    return cases;
}

} // namespace

SweepResult run_family_sweep(Family family, const VerifyOptions& options) {
    std::vector<Case> cases;
    switch (family) {
    case Family::paths: cases = cases_paths(options); break;
    case Family::cycles: cases = cases_cycles(options); break;
    case Family::starlike: cases = cases_starlike(options); break;
    case Family::caterpillars: cases = cases_caterpillars(options); break;
    case Family::trees: cases = cases_trees(options); break;
    case Family::kimura: cases = cases_kimura(options); break;
    case Family::colon: cases = cases_colon(options); break;
    case Family::factorization: cases = cases_factorization(options); break;
    case Family::mixedsum: cases = cases_mixedsum(options); break;
    case Family::properties: cases = cases_properties(options); break;
    }
    return run_cases(std::move(cases), options);
}

} // namespace edgedepth

#include "edgedepth.h"

#include "edgedepth/colon.hpp"
#include "edgedepth/config.hpp"
#include "edgedepth/errors.hpp"
#include "edgedepth/formulas.hpp"
#include "edgedepth/graph.hpp"
#include "edgedepth/kimura.hpp"
#include "edgedepth/monomial.hpp"
#include "edgedepth/oracle.hpp"
#include "edgedepth/verify.hpp"

#include <json.hpp>

#include <cstring>
#include <string>

using nlohmann::json;

struct edep_graph {
    edgedepth::Graph g;
};

namespace {

thread_local std::string last_error_message;

const edgedepth::Graph& unwrap(const edep_graph* g) {
    if (!g)
        throw std::invalid_argument("null graph handle");
    return g->g;
}

template <typename Fn>
edep_status guarded(Fn&& fn) {
    try {
        fn();
        return EDEP_OK;
    } catch (const edgedepth::BudgetExceeded& e) {
        last_error_message = e.what();
        return EDEP_ERR_BUDGET_EXCEEDED;
    } catch (const edgedepth::PreconditionFailed& e) {
        last_error_message = e.what();
        return EDEP_ERR_PRECONDITION;
    } catch (const edgedepth::UnsupportedFamily& e) {
        last_error_message = e.what();
        return EDEP_ERR_UNSUPPORTED_FAMILY;
    } catch (const edgedepth::ParseError& e) {
        last_error_message = e.what();
        return EDEP_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        last_error_message = e.what();
        return EDEP_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error_message = e.what();
        return EDEP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

edgedepth::OracleCaps to_cpp_caps(const edep_caps* caps) {
    edgedepth::OracleCaps out;
    if (caps) {
        out.max_generators = caps->max_generators;
        out.max_lattice = caps->max_lattice;
        out.max_faces = caps->max_faces;
        out.threads = caps->threads;
    }
    return out;
}

std::vector<edgedepth::VertexPair> pairs_from_flat(const int* uv, int count) {
    if (count > 0 && !uv)
        throw std::invalid_argument("null edge array");
    std::vector<edgedepth::VertexPair> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        pairs.push_back({uv[2 * i], uv[2 * i + 1]});
    return pairs;
}

json report_to_json(const edgedepth::RunReport& report) {
    json j;
    j["graph"] = report.graph_spec;
    j["power"] = report.power;
    if (report.formula_depth)
        j["formula_depth"] = *report.formula_depth;
    if (report.oracle_depth)
        j["oracle_depth"] = *report.oracle_depth;
    if (report.agreement)
        j["agreement"] = *report.agreement;
    j["status"] = report.status;
    if (!report.note.empty())
        j["note"] = report.note;
    j["ms"] = report.ms;
    return j;
}

} // namespace

extern "C" {

const char* edep_last_error(void) { return last_error_message.c_str(); }

void edep_caps_init(edep_caps* caps) {
    if (!caps)
        return;
    edgedepth::OracleCaps defaults;
    caps->max_generators = defaults.max_generators;
    caps->max_lattice = defaults.max_lattice;
    caps->max_faces = defaults.max_faces;
    caps->threads = defaults.threads;
}

edep_status edep_caps_from_config(const char* config_text, edep_caps* caps) {
    return guarded([&] {
        if (!caps)
            throw std::invalid_argument("null caps");
        auto config = edgedepth::Config::parse(config_text ? config_text : "");
        caps->max_generators = config.get_long("max_generators", caps->max_generators);
        caps->max_lattice = config.get_long("max_lattice", caps->max_lattice);
        caps->max_faces = config.get_long("max_faces", caps->max_faces);
        caps->threads = config.get_int("oracle_threads", caps->threads);
    });
}

edep_status edep_graph_parse(const char* spec, edep_graph** out) {
    return guarded([&] {
        if (!spec || !out)
            throw std::invalid_argument("null argument");
        *out = new edep_graph{edgedepth::parse_graph_spec(spec)};
    });
}

edep_status edep_graph_path(int n, edep_graph** out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = new edep_graph{edgedepth::make_path(n)};
    });
}

edep_status edep_graph_cycle(int n, edep_graph** out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = new edep_graph{edgedepth::make_cycle(n)};
    });
}

edep_status edep_graph_starlike(const long* branch_lengths, int k, edep_graph** out) {
    return guarded([&] {
        if (!branch_lengths || !out)
            throw std::invalid_argument("null argument");
        std::vector<long> lengths(branch_lengths, branch_lengths + k);
        *out = new edep_graph{edgedepth::make_starlike(edgedepth::StarlikeShape(lengths))};
    });
}

edep_status edep_graph_caterpillar3(int d1, int d2, int d3, int allow_bare_path,
                                    edep_graph** out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = new edep_graph{edgedepth::make_caterpillar3(d1, d2, d3, allow_bare_path != 0)};
    });
}

edep_status edep_graph_from_edges(int n_vertices, const int* endpoints_uv, int n_edges,
                                  edep_graph** out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = new edep_graph{
            edgedepth::Graph(n_vertices, pairs_from_flat(endpoints_uv, n_edges))};
    });
}

void edep_graph_free(edep_graph* g) { delete g; }

int edep_graph_n_vertices(const edep_graph* g) { return g ? g->g.n_vertices() : -1; }

int edep_graph_n_edges(const edep_graph* g) { return g ? g->g.edge_count() : -1; }

edep_status edep_graph_edges(const edep_graph* g, int* endpoints_uv) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!endpoints_uv && graph.edge_count() > 0)
            throw std::invalid_argument("null output buffer");
        int i = 0;
        for (const auto& [u, v] : graph.edges()) {
            endpoints_uv[2 * i] = u;
            endpoints_uv[2 * i + 1] = v;
            ++i;
        }
    });
}

edep_status edep_graph_is_tree(const edep_graph* g, int* out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = edgedepth::is_tree(unwrap(g)) ? 1 : 0;
    });
}

edep_status edep_graph_is_weakly_chordal(const edep_graph* g, int max_n, int* out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = edgedepth::is_weakly_chordal(unwrap(g), max_n) ? 1 : 0;
    });
}

edep_status edep_formula_depth(const edep_graph* g, long power, long* out_depth) {
    return guarded([&] {
        if (!out_depth)
            throw std::invalid_argument("null output");
        *out_depth = edgedepth::formula_depth(unwrap(g), power);
    });
}

edep_status edep_formula_profile(const edep_graph* g, long t_max, long* values,
                                 long* stable_value, long* stable_index) {
    return guarded([&] {
        if (!values)
            throw std::invalid_argument("null output");
        auto profile = edgedepth::formula_profile(unwrap(g), t_max);
        for (long t = 0; t < t_max; ++t)
            values[t] = profile.values[static_cast<std::size_t>(t)];
        if (stable_value)
            *stable_value = profile.stable_value;
        if (stable_index)
            *stable_index = profile.stable_index;
    });
}

edep_status edep_q_tree(const edep_graph* g, long* out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        *out = edgedepth::q_tree(unwrap(g));
    });
}

edep_status edep_dstab(const edep_graph* g, long* out) {
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output");
        const auto& graph = unwrap(g);
        auto info = edgedepth::recognize_family(graph);
        using Kind = edgedepth::FamilyInfo::Kind;
        if (info.kind == Kind::cycle && graph.n_vertices() >= 5)
            *out = edgedepth::dstab_cycle(graph.n_vertices());
        else if (edgedepth::is_tree(graph))
            *out = edgedepth::dstab_tree(graph);
        else
            throw edgedepth::UnsupportedFamily(
                "dstab formula covers trees and cycles of length >= 5");
    });
}

edep_status edep_oracle_depth(const edep_graph* g, long power, const edep_caps* caps,
                              long* out_depth, long* out_pd) {
    return guarded([&] {
        if (!out_depth)
            throw std::invalid_argument("null output");
        const auto& graph = unwrap(g);
        long depth =
            edgedepth::depth_power_oracle(graph, power, to_cpp_caps(caps));
        *out_depth = depth;
        if (out_pd)
            *out_pd = graph.n_vertices() - depth;
    });
}

edep_status edep_oracle_betti_json(const edep_graph* g, long power, const edep_caps* caps,
                                   char** out_json) {
    return guarded([&] {
        if (!out_json)
            throw std::invalid_argument("null output");
        const auto& graph = unwrap(g);
        auto ideal = edgedepth::power(edgedepth::edge_ideal(graph), power);
        json doc;
        doc["schema"] = 1;
        doc["graph_vertices"] = graph.n_vertices();
        doc["power"] = power;
        doc["n_vars"] = ideal.n_vars();
        if (ideal.is_zero()) {
            doc["depth"] = ideal.n_vars();
            doc["pd"] = 0;
            doc["table"] = json::array();
        } else {
            auto table = edgedepth::betti_numbers(ideal, to_cpp_caps(caps));
            doc["pd"] = table.pd();
            doc["depth"] = ideal.n_vars() - table.pd();
            json rows = json::array();
            for (const auto& [key, value] : table.entries) {
                json row;
                row["i"] = key.first;
                row["multidegree"] = key.second.str();
                row["value"] = value;
                rows.push_back(row);
            }
            doc["table"] = rows;
        }
        *out_json = dup_string(doc.dump(2));
    });
}

edep_status edep_colon_graph(const edep_graph* g, const int* factors_uv, int n_factors,
                             edep_graph** out_graph, int* square_vertices, int* n_squares) {
    return guarded([&] {
        if (!out_graph)
            throw std::invalid_argument("null output");
        edgedepth::EdgeProduct ep(unwrap(g), pairs_from_flat(factors_uv, n_factors));
        auto result = edgedepth::banerjee_colon_graph(ep);
        if (n_squares)
            *n_squares = static_cast<int>(result.square_vertices.size());
        if (square_vertices)
            for (std::size_t i = 0; i < result.square_vertices.size(); ++i)
                square_vertices[i] = result.square_vertices[i];
        *out_graph = new edep_graph{std::move(result.graph)};
    });
}

edep_status edep_colon_verify(const edep_graph* g, const int* factors_uv, int n_factors,
                              int* out_agrees) {
    return guarded([&] {
        if (!out_agrees)
            throw std::invalid_argument("null output");
        const auto& graph = unwrap(g);
        edgedepth::EdgeProduct ep(graph, pairs_from_flat(factors_uv, n_factors));
        auto result = edgedepth::banerjee_colon_graph(ep);
        auto lhs = edgedepth::colon_graph_ideal(result);
        auto rhs = edgedepth::colon(
            edgedepth::power(edgedepth::edge_ideal(graph), ep.t()),
            edgedepth::factor_monomial(ep));
        *out_agrees = (lhs == rhs) ? 1 : 0;
    });
}

edep_status edep_pd_kimura(const edep_graph* g, int max_n, long* out_pd) {
    return guarded([&] {
        if (!out_pd)
            throw std::invalid_argument("null output");
        *out_pd = edgedepth::pd_weakly_chordal(unwrap(g), max_n);
    });
}

edep_status edep_verify(const char* family, const char* config_text, char** out_json,
                        int* out_exit_code) {
    return guarded([&] {
        if (!family || !out_json)
            throw std::invalid_argument("null argument");
        auto parsed = edgedepth::family_from_name(family);
        if (!parsed)
            throw std::invalid_argument(std::string("unknown verify family '") + family + "'");
        auto config = edgedepth::Config::parse(config_text ? config_text : "");
        auto options = edgedepth::VerifyOptions::from_config(config);
        auto result = edgedepth::run_family_sweep(*parsed, options);
        json doc;
        doc["schema"] = 1;
        doc["family"] = family;
        json reports = json::array();
        for (const auto& report : result.reports)
            reports.push_back(report_to_json(report));
        doc["reports"] = reports;
        doc["summary"] = {{"ok", result.ok},
                          {"mismatch", result.mismatches},
                          {"budget_exceeded", result.budget_exceeded},
                          {"error", result.errors}};
        doc["exit_code"] = result.exit_code();
        *out_json = dup_string(doc.dump(2));
        if (out_exit_code)
            *out_exit_code = result.exit_code();
    });
}

void edep_string_free(char* s) { delete[] s; }

} // extern "C"

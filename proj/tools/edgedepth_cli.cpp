#include "edgedepth.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_BUDGET = 3;

struct GraphHandle {
    edep_graph* g = nullptr;
    ~GraphHandle() { edep_graph_free(g); }
};

int status_to_exit(edep_status status) {
    switch (status) {
    case EDEP_OK: return 0;
    case EDEP_ERR_BUDGET_EXCEEDED: return EXIT_BUDGET;
    default: return EXIT_USAGE;
    }
}

int fail(edep_status status) {
    std::cerr << "error: " << edep_last_error() << "\n";
    if (status == EDEP_ERR_UNSUPPORTED_FAMILY)
        std::cerr << "hint: the `oracle` subcommand handles arbitrary graphs\n";
    return status_to_exit(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Edge labels follow the paper: e_i = {i, i+1} on paths and cycles, with
// e_n = {1, n} closing a cycle; on other graphs e_i is the i-th edge in
// canonical order.
std::vector<int> edges_from_indices(const std::string& spec, const edep_graph* g,
                                    const std::vector<int>& indices) {
    int n = edep_graph_n_vertices(g);
    int m = edep_graph_n_edges(g);
    bool path_like = spec.rfind("path:", 0) == 0;
    bool cycle_like = spec.rfind("cycle:", 0) == 0;
    std::vector<int> flat;
    std::vector<int> all(static_cast<std::size_t>(2 * m));
    if (edep_graph_edges(g, all.data()) != EDEP_OK)
        throw CLI::ValidationError("--edges", edep_last_error());
    for (int i : indices) {
        int u, v;
        if (path_like || cycle_like) {
            if (i < 1 || i > (path_like ? n - 1 : n))
                throw CLI::ValidationError("--edges", "edge index out of range: e_" +
                                                          std::to_string(i));
            if (cycle_like && i == n) {
                u = 1;
                v = n;
            } else {
                u = i;
                v = i + 1;
            }
        } else {
            if (i < 1 || i > m)
                throw CLI::ValidationError("--edges", "edge index out of range: e_" +
                                                          std::to_string(i));
            u = all[static_cast<std::size_t>(2 * (i - 1))];
            v = all[static_cast<std::size_t>(2 * (i - 1) + 1)];
        }
        flat.push_back(u);
        flat.push_back(v);
    }
    return flat;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

struct CapsFlags {
    long max_generators = -1, max_lattice = -1, max_faces = -1;
    int threads = -1;
    std::string config_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value config file");
        cmd->add_option("--max-generators", max_generators, "oracle generator cap");
        cmd->add_option("--max-lattice", max_lattice, "oracle lattice-size cap");
        cmd->add_option("--max-faces", max_faces, "oracle per-interval face cap");
        cmd->add_option("--threads", threads, "oracle worker threads (0 = all cores)");
    }

    edep_caps resolve() const {
        edep_caps caps;
        edep_caps_init(&caps);
        if (!config_path.empty()) {
            std::string text = read_file(config_path);
            if (edep_caps_from_config(text.c_str(), &caps) != EDEP_OK)
                throw CLI::ValidationError("--config", edep_last_error());
        } else {
            edep_caps_from_config("", &caps); // pick up environment overrides
        }
        if (max_generators >= 0)
            caps.max_generators = max_generators;
        if (max_lattice >= 0)
            caps.max_lattice = max_lattice;
        if (max_faces >= 0)
            caps.max_faces = max_faces;
        if (threads >= 0)
            caps.threads = threads;
        return caps;
    }
};

void print_records(const std::string& graph_spec, const std::vector<json>& records,
                   const json& extra, bool as_json) {
    if (as_json) {
        json doc;
        doc["schema"] = 1;
        doc["graph"] = graph_spec;
        doc["records"] = records;
        for (auto it = extra.begin(); it != extra.end(); ++it)
            doc[it.key()] = it.value();
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "t\tdepth\tsource\n";
    for (const auto& record : records)
        std::cout << record["t"].get<long>() << '\t' << record["depth"].get<long>() << '\t'
                  << record["source"].get<std::string>() << '\n';
    for (auto it = extra.begin(); it != extra.end(); ++it)
        std::cout << "# " << it.key() << " = " << it.value() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"depth of powers of edge ideals: formulas, colon graphs, "
                 "Kimura projective dimension, and an exact Betti oracle"};
    app.require_subcommand(1);

    std::string graph_spec, edge_list, family = "cycles", via = "kimura";
    long power = 1, t_max = 1;
    bool as_json = false, as_tsv = false, with_table = false, do_verify = false;
    std::vector<std::string> config_sets;
    CapsFlags caps_flags;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->add_flag("--tsv", as_tsv, "TSV output (default)");
    };

    auto* cmd_formula = app.add_subcommand("formula", "closed-form depth of S/I(G)^t");
    cmd_formula->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_formula->add_option("--power", power, "power t")->required();
    add_format(cmd_formula);

    auto* cmd_profile = app.add_subcommand("profile", "depth profile t = 1..t_max");
    cmd_profile->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_profile->add_option("--max-power", t_max, "largest power")->required();
    add_format(cmd_profile);

    auto* cmd_oracle = app.add_subcommand("oracle", "exact depth via lcm-lattice Betti numbers");
    cmd_oracle->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_oracle->add_option("--power", power, "power t")->required();
    cmd_oracle->add_flag("--table", with_table, "print the full Betti table as JSON");
    add_format(cmd_oracle);
    caps_flags.attach(cmd_oracle);

    auto* cmd_colon = app.add_subcommand("colon", "Banerjee colon graph of I^t : (e_i1 ... )");
    cmd_colon->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_colon->add_option("--edges", edge_list, "comma-separated edge indices, e.g. 2,3,4")
        ->required();
    cmd_colon->add_flag("--verify", do_verify, "cross-check against the monomial colon");
    add_format(cmd_colon);

    auto* cmd_pd = app.add_subcommand("pd", "projective dimension of S/I(G)");
    cmd_pd->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_pd->add_option("--via", via, "kimura | oracle")
        ->check(CLI::IsMember({"kimura", "oracle"}));
    add_format(cmd_pd);
    caps_flags.attach(cmd_pd);

    auto* cmd_dstab = app.add_subcommand("dstab", "index of depth stability");
    cmd_dstab->add_option("--graph", graph_spec, "graph spec")->required();
    add_format(cmd_dstab);

    auto* cmd_verify = app.add_subcommand("verify", "formula-vs-oracle sweep for a family");
    cmd_verify
        ->add_option("--family", family,
                     "paths | cycles | starlike | caterpillars | trees | kimura | colon")
        ->required();
    cmd_verify->add_option("--set", config_sets, "extra key=value config entries");
    add_format(cmd_verify);
    caps_flags.attach(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (app.got_subcommand(cmd_formula) || app.got_subcommand(cmd_profile)) {
            GraphHandle handle;
            edep_status status = edep_graph_parse(graph_spec.c_str(), &handle.g);
            if (status != EDEP_OK)
                return fail(status);
            long horizon = app.got_subcommand(cmd_formula) ? power : t_max;
            if (horizon < 1) {
                std::cerr << "error: power must be >= 1\n";
                return EXIT_USAGE;
            }
            std::vector<json> records;
            json extra;
            if (app.got_subcommand(cmd_formula)) {
                long depth = 0;
                status = edep_formula_depth(handle.g, power, &depth);
                if (status != EDEP_OK)
                    return fail(status);
                records.push_back({{"t", power}, {"depth", depth}, {"source", "formula"}});
            } else {
                std::vector<long> values(static_cast<std::size_t>(horizon));
                long stable_value = 0, stable_index = 0;
                status = edep_formula_profile(handle.g, horizon, values.data(), &stable_value,
                                              &stable_index);
                if (status != EDEP_OK)
                    return fail(status);
                for (long t = 1; t <= horizon; ++t)
                    records.push_back({{"t", t},
                                       {"depth", values[static_cast<std::size_t>(t - 1)]},
                                       {"source", "formula"}});
                extra["dstab"] = stable_index;
                extra["stable_value"] = stable_value;
            }
            print_records(graph_spec, records, extra, as_json && !as_tsv);
            return 0;
        }

        if (app.got_subcommand(cmd_oracle)) {
            GraphHandle handle;
            edep_status status = edep_graph_parse(graph_spec.c_str(), &handle.g);
            if (status != EDEP_OK)
                return fail(status);
            edep_caps caps = caps_flags.resolve();
            if (with_table) {
                char* doc = nullptr;
                status = edep_oracle_betti_json(handle.g, power, &caps, &doc);
                if (status != EDEP_OK)
                    return fail(status);
                std::cout << doc << "\n";
                edep_string_free(doc);
                return 0;
            }
            long depth = 0, pd = 0;
            status = edep_oracle_depth(handle.g, power, &caps, &depth, &pd);
            if (status != EDEP_OK)
                return fail(status);
            std::vector<json> records = {
                {{"t", power}, {"depth", depth}, {"source", "oracle"}}};
            json extra;
            extra["pd"] = pd;
            print_records(graph_spec, records, extra, as_json && !as_tsv);
            return 0;
        }

        if (app.got_subcommand(cmd_colon)) {
            GraphHandle handle;
            edep_status status = edep_graph_parse(graph_spec.c_str(), &handle.g);
            if (status != EDEP_OK)
                return fail(status);
            auto indices = parse_int_list(edge_list);
            auto flat = edges_from_indices(graph_spec, handle.g, indices);
            GraphHandle colon_handle;
            std::vector<int> squares(static_cast<std::size_t>(edep_graph_n_vertices(handle.g)));
            int n_squares = 0;
            status = edep_colon_graph(handle.g, flat.data(), static_cast<int>(indices.size()),
                                      &colon_handle.g, squares.data(), &n_squares);
            if (status != EDEP_OK)
                return fail(status);
            int agrees = -1;
            if (do_verify) {
                status = edep_colon_verify(handle.g, flat.data(),
                                           static_cast<int>(indices.size()), &agrees);
                if (status != EDEP_OK)
                    return fail(status);
            }
            int m = edep_graph_n_edges(colon_handle.g);
            std::vector<int> uv(static_cast<std::size_t>(2 * m));
            edep_graph_edges(colon_handle.g, uv.data());
            if (as_json && !as_tsv) {
                json doc;
                doc["schema"] = 1;
                doc["graph"] = graph_spec;
                doc["t"] = static_cast<long>(indices.size()) + 1;
                json edges = json::array();
                for (int i = 0; i < m; ++i)
                    edges.push_back({uv[static_cast<std::size_t>(2 * i)],
                                     uv[static_cast<std::size_t>(2 * i + 1)]});
                doc["colon_edges"] = edges;
                doc["square_vertices"] =
                    std::vector<int>(squares.begin(), squares.begin() + n_squares);
                if (agrees >= 0)
                    doc["verified"] = agrees == 1;
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << edep_graph_n_vertices(colon_handle.g) << ' ' << m << "\n";
                for (int i = 0; i < m; ++i)
                    std::cout << uv[static_cast<std::size_t>(2 * i)] << ' '
                              << uv[static_cast<std::size_t>(2 * i + 1)] << "\n";
                for (int i = 0; i < n_squares; ++i)
                    std::cout << "# square: x" << squares[static_cast<std::size_t>(i)] << "\n";
                if (agrees >= 0)
                    std::cout << "# verified = " << (agrees ? "true" : "false") << "\n";
            }
            return (do_verify && agrees != 1) ? 1 : 0;
        }

        if (app.got_subcommand(cmd_pd)) {
            GraphHandle handle;
            edep_status status = edep_graph_parse(graph_spec.c_str(), &handle.g);
            if (status != EDEP_OK)
                return fail(status);
            long pd = 0;
            if (via == "kimura") {
                status = edep_pd_kimura(handle.g, 12, &pd);
            } else {
                edep_caps caps = caps_flags.resolve();
                long depth = 0;
                status = edep_oracle_depth(handle.g, 1, &caps, &depth, &pd);
            }
            if (status != EDEP_OK)
                return fail(status);
            long n = edep_graph_n_vertices(handle.g);
            if (as_json && !as_tsv) {
                json doc = {{"schema", 1}, {"graph", graph_spec}, {"via", via},
                            {"pd", pd},    {"depth", n - pd}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "pd\tdepth\tvia\n" << pd << '\t' << (n - pd) << '\t' << via << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_dstab)) {
            GraphHandle handle;
            edep_status status = edep_graph_parse(graph_spec.c_str(), &handle.g);
            if (status != EDEP_OK)
                return fail(status);
            long value = 0;
            status = edep_dstab(handle.g, &value);
            if (status != EDEP_OK)
                return fail(status);
            if (as_json && !as_tsv) {
                json doc = {{"schema", 1}, {"graph", graph_spec}, {"dstab", value}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "dstab\n" << value << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            std::string config_text;
            if (!caps_flags.config_path.empty())
                config_text = read_file(caps_flags.config_path);
            config_text += "\n";
            for (const auto& entry : config_sets)
                config_text += entry + "\n";
            if (caps_flags.max_generators >= 0)
                config_text +=
                    "max_generators = " + std::to_string(caps_flags.max_generators) + "\n";
            if (caps_flags.max_lattice >= 0)
                config_text += "max_lattice = " + std::to_string(caps_flags.max_lattice) + "\n";
            if (caps_flags.max_faces >= 0)
                config_text += "max_faces = " + std::to_string(caps_flags.max_faces) + "\n";
            if (caps_flags.threads >= 0)
                config_text += "oracle_threads = " + std::to_string(caps_flags.threads) + "\n";
            char* doc_text = nullptr;
            int exit_code = 0;
            edep_status status =
                edep_verify(family.c_str(), config_text.c_str(), &doc_text, &exit_code);
            if (status != EDEP_OK)
                return fail(status);
            if (as_json && !as_tsv) {
                std::cout << doc_text << "\n";
            } else {
                json doc = json::parse(doc_text);
                for (const auto& report : doc["reports"]) {
                    std::cout << '[' << report["status"].get<std::string>() << "] "
                              << report["graph"].get<std::string>();
                    if (report["power"].get<long>() > 0)
                        std::cout << " t=" << report["power"].get<long>();
                    if (report.contains("formula_depth"))
                        std::cout << " formula=" << report["formula_depth"].get<long>();
                    if (report.contains("oracle_depth"))
                        std::cout << " oracle=" << report["oracle_depth"].get<long>();
                    if (report.contains("note"))
                        std::cout << " (" << report["note"].get<std::string>() << ")";
                    std::cout << "\n";
                }
                const auto& summary = doc["summary"];
                std::cout << "summary: ok=" << summary["ok"] << " mismatch=" << summary["mismatch"]
                          << " budget-exceeded=" << summary["budget_exceeded"]
                          << " error=" << summary["error"] << "\n";
            }
            edep_string_free(doc_text);
            return exit_code;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}

// planedual: validate, dualize, check and solve loopless 2-connected
// plane multigraphs given as pmap rotation systems. Every subcommand
// prints a single JSON object on stdout; diagnostics go to stderr.
//
// Exit codes: 0 ok/found, 1 usage error, 2 validation failure,
// 3 no solution exists, 4 budget or limit exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planedual/dual.hpp"
#include "planedual/export.hpp"
#include "planedual/generator.hpp"
#include "planedual/pmap_io.hpp"
#include "planedual/solver.hpp"

using json = nlohmann::ordered_json;
using namespace planedual;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNone = 3;
constexpr int kExitBudget = 4;

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

int fail_usage(const std::string& message) {
    emit(json{{"error", message}});
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json witness_json(const ValidationReport& report) {
    json w = json::object();
    if (report.dart) w["dart"] = *report.dart;
    if (report.vertex) w["vertex"] = *report.vertex;
    if (report.edge) w["edge"] = *report.edge;
    if (report.euler_characteristic) w["euler_characteristic"] = *report.euler_characteristic;
    return w;
}

struct LoadedGraph {
    std::optional<PlaneMultigraph> graph;
    int exit_code = kExitOk;
};

// Parse and validate, emitting the error JSON on failure.
LoadedGraph load_graph(const std::string& path) {
    LoadedGraph out;
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& ex) {
        out.exit_code = fail_usage(ex.what());
        return out;
    }
    try {
        RotationSystem rs = parse_rotation_system(text);
        ValidationReport report;
        auto g = validate(rs, &report);
        if (!g) {
            emit(json{{"verdict", to_string(report.verdict)}, {"witness", witness_json(report)}});
            std::cerr << path << ": validation failed: " << to_string(report.verdict) << "\n";
            out.exit_code = kExitValidation;
            return out;
        }
        out.graph = std::move(*g);
    } catch (const ParseError& ex) {
        emit(json{{"error", "ParseError"},
                  {"kind", to_string(ex.kind())},
                  {"line", ex.line()},
                  {"message", ex.what()}});
        std::cerr << path << ": " << ex.what() << "\n";
        out.exit_code = kExitValidation;
    }
    return out;
}

std::vector<VertexId> parse_id_list(const std::string& csv) {
    std::vector<VertexId> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::runtime_error("empty id in list '" + csv + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

json partition_json(const Bipartition& p) {
    return json{{"S", p.s_vertices()}, {"T", p.t_vertices()}};
}

int write_document(const std::string& out_path, const std::string& document, json& payload) {
    if (out_path.empty()) {
        payload["document"] = document;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail_usage("cannot write " + out_path);
    out << document;
    payload["out"] = out_path;
    return kExitOk;
}

int cmd_validate(const std::string& graph_path) {
    std::string text;
    try {
        text = read_file(graph_path);
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }
    try {
        RotationSystem rs = parse_rotation_system(text);
        ValidationReport report;
        auto g = validate(rs, &report);
        if (!g) {
            emit(json{{"verdict", to_string(report.verdict)}, {"witness", witness_json(report)}});
            return kExitValidation;
        }
        emit(json{{"verdict", "ok"},
                  {"V", g->vertex_count()},
                  {"E", g->edge_count()},
                  {"F", g->face_count()}});
        return kExitOk;
    } catch (const ParseError& ex) {
        emit(json{{"error", "ParseError"},
                  {"kind", to_string(ex.kind())},
                  {"line", ex.line()},
                  {"message", ex.what()}});
        return kExitValidation;
    }
}

int cmd_faces(const std::string& graph_path) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    json faces = json::array();
    for (const FacialCycle& c : loaded.graph->faces())
        faces.push_back(json{{"id", c.id}, {"darts", c.darts}, {"vertices", c.vertices}});
    emit(json{{"count", loaded.graph->face_count()}, {"faces", faces}});
    return kExitOk;
}

int cmd_dual(const std::string& graph_path, const std::string& out_path) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    DualPair pair = dual(*loaded.graph);
    json correspondence = json::object();
    for (EdgeId e = 0; e < pair.primal.edge_count(); ++e)
        correspondence[std::to_string(e)] = DualPair::dual_edge(e);
    json payload{{"V", pair.dual.vertex_count()},
                 {"E", pair.dual.edge_count()},
                 {"F", pair.dual.face_count()},
                 {"correspondence", correspondence}};
    int rc = write_document(out_path, serialize(pair.dual.rotation()), payload);
    if (rc != kExitOk) return rc;
    emit(payload);
    return kExitOk;
}

int cmd_check(const std::string& graph_path, const std::string& s_list,
              const std::string& condition) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    Bipartition p = Bipartition::from_s_vertices(loaded.graph->vertex_count(),
                                                 parse_id_list(s_list));
    json payload = json::object();
    if (condition == "all") {
        for (int which = 1; which <= 4; ++which)
            payload[std::to_string(which)] = check_condition(*loaded.graph, p, which);
    } else {
        int which = std::stoi(condition);
        if (which < 1 || which > 4) return fail_usage("condition must be all, 1, 2, 3 or 4");
        payload[condition] = check_condition(*loaded.graph, p, which);
    }
    emit(payload);
    return kExitOk;
}

int cmd_convert(const std::string& graph_path, bool to_cycle, const std::string& s_list,
                const std::string& cycle) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    if (to_cycle) {
        Bipartition p = Bipartition::from_s_vertices(loaded.graph->vertex_count(),
                                                     parse_id_list(s_list));
        try {
            HamiltonCycleCertificate cert = partition_to_dual_cycle(*loaded.graph, p);
            json steps = json::array();
            for (const CertStep& s : cert.steps()) steps.push_back(json::array({s.face, s.edge}));
            emit(json{{"certificate", cert.to_string()}, {"steps", steps}});
            return kExitOk;
        } catch (const ConditionViolated& ex) {
            emit(json{{"error", "ConditionViolated"}, {"clause", ex.clause()}});
            std::cerr << "condition 1 violated: " << ex.clause() << "\n";
            return kExitValidation;
        }
    }
    try {
        HamiltonCycleCertificate cert = HamiltonCycleCertificate::parse(cycle);
        Bipartition p = dual_cycle_to_partition(*loaded.graph, cert);
        emit(partition_json(p));
        return kExitOk;
    } catch (const InvalidCertificate& ex) {
        emit(json{{"error", "InvalidCertificate"}, {"reason", ex.what()}});
        std::cerr << "invalid certificate: " << ex.what() << "\n";
        return kExitValidation;
    }
}

json stats_json(const SearchStats& stats) {
    return json{{"nodes", stats.nodes_expanded},
                {"pruned", json{{"cycle_s", stats.pruned_cycle_s},
                                {"cycle_t", stats.pruned_cycle_t},
                                {"dead_s", stats.pruned_dead_s},
                                {"dead_t", stats.pruned_dead_t}}}};
}

int cmd_solve(const std::string& graph_path, std::optional<std::int64_t> budget,
              const std::string& order, int workers) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    SearchConfig cfg;
    cfg.node_budget = budget;
    cfg.workers = workers;
    if (order == "degree")
        cfg.order = VertexOrderPolicy::DegreeDescending;
    else if (order != "input")
        return fail_usage("--order must be input or degree");

    SearchOutcome outcome = find_tree_partition(*loaded.graph, cfg);
    json payload{{"result", to_string(outcome.result)}};
    if (outcome.partition) {
        payload["partition"] = partition_json(*outcome.partition);
        payload["certificate"] =
            partition_to_dual_cycle(*loaded.graph, *outcome.partition).to_string();
    }
    payload["stats"] = stats_json(outcome.stats);
    emit(payload);
    switch (outcome.result) {
    case SearchResult::Found: return kExitOk;
    case SearchResult::Exhausted: return kExitNone;
    case SearchResult::BudgetExceeded: return kExitBudget;
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& graph_path, std::optional<std::int64_t> limit,
                  bool with_lists) {
    LoadedGraph loaded = load_graph(graph_path);
    if (!loaded.graph) return loaded.exit_code;
    PartitionEnumeration partitions = enumerate_tree_partitions(*loaded.graph, limit);
    if (!partitions.complete) {
        emit(json{{"complete", false}, {"partitions_at_limit", partitions.count()}});
        std::cerr << "enumeration stopped at the limit\n";
        return kExitBudget;
    }
    auto cycles = enumerate_dual_hamilton_cycles(*loaded.graph);
    json payload{{"partitions", partitions.count()},
                 {"dual_hamilton_cycles", static_cast<std::int64_t>(cycles.size())},
                 {"equal", partitions.count() == static_cast<std::int64_t>(cycles.size())}};
    if (with_lists) {
        json plist = json::array();
        for (const Bipartition& p : partitions.partitions) plist.push_back(partition_json(p));
        json clist = json::array();
        for (const auto& cert : cycles) clist.push_back(cert.to_string());
        payload["partition_list"] = plist;
        payload["cycle_list"] = clist;
    }
    emit(payload);
    return partitions.count() > 0 ? kExitOk : kExitNone;
}

int cmd_generate(std::uint64_t seed, std::int32_t steps, const std::string& weights,
                 const std::string& start, const std::string& out_path) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.steps = steps;
    if (start == "c3")
        cfg.start = StartGraph::C3;
    else if (start != "d2")
        return fail_usage("--start must be d2 or c3");
    if (!weights.empty()) {
        auto parts = parse_id_list(weights);
        if (parts.size() != 3) return fail_usage("--weights needs three comma-separated values");
        for (std::size_t i = 0; i < 3; ++i) {
            if (parts[i] < 0) return fail_usage("weights must be non-negative");
            cfg.weights[i] = static_cast<std::uint32_t>(parts[i]);
        }
    }

    PlaneMultigraph g = generate(cfg);
    std::string body = serialize(g.rotation());
    std::ostringstream doc;
    std::size_t first_newline = body.find('\n');
    doc << body.substr(0, first_newline + 1);
    doc << "# generated: seed=" << cfg.seed << " steps=" << cfg.steps
        << " rng=splitmix64 start=" << (cfg.start == StartGraph::D2 ? "d2" : "c3")
        << " weights=" << cfg.weights[0] << "," << cfg.weights[1] << "," << cfg.weights[2]
        << "\n";
    doc << body.substr(first_newline + 1);

    json payload{{"V", g.vertex_count()},
                 {"E", g.edge_count()},
                 {"F", g.face_count()},
                 {"seed", cfg.seed},
                 {"steps", cfg.steps}};
    int rc = write_document(out_path, doc.str(), payload);
    if (rc != kExitOk) return rc;
    emit(payload);
    return kExitOk;
}

int cmd_export(const std::string& graph_path, const std::string& format,
               const std::string& out_path) {
    // Export works on any well-formed rotation system; family membership
    // is not required to dump the edge multiset.
    std::string text;
    try {
        text = read_file(graph_path);
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }
    try {
        RotationSystem rs = parse_rotation_system(text);
        std::string document;
        if (format == "dot")
            document = to_dot(rs);
        else if (format == "graphml")
            document = to_graphml(rs);
        else
            return fail_usage("--format must be dot or graphml");
        json payload{{"format", format}};
        int rc = write_document(out_path, document, payload);
        if (rc != kExitOk) return rc;
        emit(payload);
        return kExitOk;
    } catch (const ParseError& ex) {
        emit(json{{"error", "ParseError"},
                  {"kind", to_string(ex.kind())},
                  {"line", ex.line()},
                  {"message", ex.what()}});
        return kExitValidation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane multigraph duality toolkit"};
    app.require_subcommand(1);

    std::string graph_path, s_list, condition = "all", cycle, out_path, format = "dot";
    std::string order = "input", start = "d2", weights;
    std::int64_t budget = -1, limit = -1;
    int workers = 1;
    std::uint64_t seed = 0;
    std::int32_t steps = 0;
    bool to_cycle = false, to_partition = false, with_lists = false;

    auto* validate_cmd = app.add_subcommand("validate", "check family membership");
    validate_cmd->add_option("--graph", graph_path, "pmap file")->required();

    auto* faces_cmd = app.add_subcommand("faces", "list facial cycles");
    faces_cmd->add_option("--graph", graph_path)->required();

    auto* dual_cmd = app.add_subcommand("dual", "construct the dual map");
    dual_cmd->add_option("--graph", graph_path)->required();
    dual_cmd->add_option("--out", out_path, "write the dual pmap here");

    auto* check_cmd = app.add_subcommand("check", "evaluate the four conditions");
    check_cmd->add_option("--graph", graph_path)->required();
    check_cmd->add_option("--S", s_list, "comma-separated vertex ids")->required();
    check_cmd->add_option("--condition", condition, "all, 1, 2, 3 or 4");

    auto* convert_cmd = app.add_subcommand("convert", "partition <-> dual Hamilton cycle");
    convert_cmd->add_option("--graph", graph_path)->required();
    convert_cmd->add_flag("--to-cycle", to_cycle);
    convert_cmd->add_flag("--to-partition", to_partition);
    convert_cmd->add_option("--S", s_list);
    convert_cmd->add_option("--cycle", cycle, "face:edge,face:edge,...");

    auto* solve_cmd = app.add_subcommand("solve", "find a tree-tree bipartition");
    solve_cmd->add_option("--graph", graph_path)->required();
    solve_cmd->add_option("--budget", budget, "node budget");
    solve_cmd->add_option("--order", order, "input or degree");
    solve_cmd->add_option("--workers", workers, "search workers");

    auto* enum_cmd = app.add_subcommand("enumerate", "count partitions and dual cycles");
    enum_cmd->add_option("--graph", graph_path)->required();
    enum_cmd->add_option("--limit", limit, "stop after this many partitions");
    enum_cmd->add_flag("--list", with_lists, "include the objects themselves");

    auto* gen_cmd = app.add_subcommand("generate", "seeded random family member");
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--steps", steps)->required();
    gen_cmd->add_option("--weights", weights, "AddParallel,AddChord,Subdivide");
    gen_cmd->add_option("--start", start, "d2 or c3");
    gen_cmd->add_option("--out", out_path, "write the pmap here");

    auto* export_cmd = app.add_subcommand("export", "emit dot or graphml");
    export_cmd->add_option("--graph", graph_path)->required();
    export_cmd->add_option("--format", format, "dot or graphml");
    export_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(graph_path);
        if (faces_cmd->parsed()) return cmd_faces(graph_path);
        if (dual_cmd->parsed()) return cmd_dual(graph_path, out_path);
        if (check_cmd->parsed()) return cmd_check(graph_path, s_list, condition);
        if (convert_cmd->parsed()) {
            if (to_cycle == to_partition)
                return fail_usage("convert needs exactly one of --to-cycle, --to-partition");
            if (to_cycle && s_list.empty()) return fail_usage("--to-cycle needs --S");
            if (to_partition && cycle.empty()) return fail_usage("--to-partition needs --cycle");
            return cmd_convert(graph_path, to_cycle, s_list, cycle);
        }
        if (solve_cmd->parsed())
            return cmd_solve(graph_path,
                             budget >= 0 ? std::optional<std::int64_t>(budget) : std::nullopt,
                             order, workers);
        if (enum_cmd->parsed())
            return cmd_enumerate(graph_path,
                                 limit >= 0 ? std::optional<std::int64_t>(limit) : std::nullopt,
                                 with_lists);
        if (gen_cmd->parsed()) return cmd_generate(seed, steps, weights, start, out_path);
        if (export_cmd->parsed()) return cmd_export(graph_path, format, out_path);
    } catch (const std::exception& ex) {
        return fail_usage(ex.what());
    }
    return kExitUsage;
}

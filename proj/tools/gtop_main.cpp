// gtop: algebraic topology of graphs over finite abelian groups, and exact /
// sampled partition functions of Ising-type models built on it.

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "gtop/config.hpp"
#include "gtop/ising.hpp"
#include "gtop/json_io.hpp"
#include "gtop/nr.hpp"
#include "gtop/spaces.hpp"
#include "gtop/verify.hpp"

namespace {

using gtop::RunConfig;
using json = gtop::io::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

void emit(const json& report, const RunConfig& cfg) {
    if (cfg.output_format == "csv")
        std::cout << gtop::io::to_csv(report);
    else
        std::cout << report.dump(2) << "\n";
}

json matrix_json(const gtop::topo::Matrix& m) {
    json j = json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

gtop::topo::SpanningTree pick_tree(const gtop::topo::OrientedGraph& g, const RunConfig& cfg) {
    if (cfg.tree_override) return gtop::topo::spanning_tree(g, *cfg.tree_override);
    return gtop::topo::spanning_tree(g);
}

json partition_value_json(const gtop::nfg::PartitionValue& pv) {
    json j;
    j["method"] = pv.method;
    j["value"] = {pv.value.real(), pv.value.imag()};
    j["declared_scale"] = pv.declared_scale.to_string();
    gtop::group::cplx norm = pv.value / pv.declared_scale.to_double();
    j["normalized"] = {norm.real(), norm.imag()};
    if (pv.info_set_size >= 0) j["info_set_size"] = pv.info_set_size;
    j["wall_ms"] = pv.wall_ms;
    return j;
}

int cmd_topo(const std::string& graph_file, const RunConfig& cfg) {
    json in = gtop::io::load_file(graph_file);
    json report;
    auto g = gtop::io::parse_graph(in);
    report["graph"] = gtop::io::graph_to_json(g);
    report["connection_matrix"] = matrix_json(gtop::topo::connection_matrix(g));
    auto [b0, b1] = gtop::topo::betti(g);
    report["betti"] = {b0, b1};
    if (gtop::topo::is_connected(g)) {
        auto tree = pick_tree(g, cfg);
        json tree_edges = json::array();
        for (int e : tree.tree_edges) tree_edges.push_back(g.edges[e].id);
        report["spanning_tree"] = tree_edges;
        json cuts;
        for (const auto& [e, cut] : gtop::topo::fundamental_cut_sets(g, tree)) {
            json ids = json::array();
            for (int c : cut) ids.push_back(g.edges[c].id);
            cuts[g.edges[e].id] = ids;
        }
        report["fundamental_cut_sets"] = cuts;
        json cycles;
        for (const auto& [e, cyc] : gtop::topo::fundamental_cycles(g, tree)) {
            json path = json::array();
            for (const auto& s : cyc) path.push_back({g.edges[s.edge].id, s.sign});
            cycles[g.edges[e].id] = path;
        }
        report["fundamental_cycles"] = cycles;
    }
    if (gtop::io::has_faces(in)) {
        auto k = gtop::io::parse_complex(in);
        report["second_connection_matrix"] = matrix_json(gtop::topo::second_connection_matrix(k));
        report["homology_dimensions"] = gtop::topo::homology_dimensions(
            k, gtop::group::FiniteAbelianGroup::parse("Z2"), cfg.enumeration_cap);
        if (k.embedding == gtop::topo::PlanarComplex::Embedding::Sphere) {
            auto d = gtop::topo::dual_graph(k);
            report["dual_graph"] = gtop::io::complex_to_json(d);
            auto [db0, db1] = gtop::topo::betti(d.graph);
            report["dual_betti"] = {db0, db1};
        }
    }
    emit(report, cfg);
    return kExitOk;
}

int cmd_spaces(const std::string& graph_file, const std::string& alphabet, const RunConfig& cfg) {
    json in = gtop::io::load_file(graph_file);
    auto g = std::make_shared<const gtop::topo::OrientedGraph>(gtop::io::parse_graph(in));
    auto a = gtop::group::FiniteAbelianGroup::parse(alphabet);
    json report;
    report["alphabet"] = a.spec_string();

    auto z0 = gtop::spaces::zero_coboundary(*g, a, cfg.enumeration_cap);
    auto b1 = gtop::spaces::coboundary(*g, a, cfg.enumeration_cap);
    auto z1 = gtop::spaces::zero_boundary(*g, a, cfg.enumeration_cap);
    auto b0 = gtop::spaces::boundary(*g, a, cfg.enumeration_cap);
    auto code_json = [&](const gtop::gcode::GroupCode& c) {
        json j;
        j["size"] = c.size(cfg.enumeration_cap);
        if (auto k = c.dimension(cfg.enumeration_cap)) j["dimension"] = *k;
        j["generators"] = c.to_text();
        return j;
    };
    report["Z0"] = code_json(z0);
    report["B1"] = code_json(b1);
    report["Z1"] = code_json(z1);
    report["B0"] = code_json(b0);

    auto w01 = gtop::nr::build_w01(g, a);
    auto z0r = gtop::nr::derive_space_realization(w01, gtop::nr::SpaceKind::Z0);
    auto b1r = gtop::nr::derive_space_realization(w01, gtop::nr::SpaceKind::B1);
    json table = json::array();
    struct Row {
        const char* space;
        gtop::nr::NormalRealization r;
    };
    std::vector<Row> rows;
    rows.push_back({"Z0", z0r});
    rows.push_back({"B1", b1r});
    rows.push_back({"Z1", gtop::nr::dualize(b1r)});
    rows.push_back({"B0", gtop::nr::dualize(z0r)});
    json realizations;
    for (const auto& row : rows) {
        auto s = gtop::nr::analyze(row.r, cfg.enumeration_cap);
        auto [ctrl, degree] = gtop::nr::controllability_test(row.r, cfg.enumeration_cap);
        json r;
        r["space"] = row.space;
        r["dimension"] = s.external_behavior.dimension(cfg.enumeration_cap)
                             ? json(*s.external_behavior.dimension(cfg.enumeration_cap))
                             : json(nullptr);
        r["observable"] = s.unobservable_size == 1;
        r["unobservable_size"] = s.unobservable_size;
        r["controllable"] = ctrl;
        r["uncontrollability_degree"] = degree;
        table.push_back(r);
        realizations[row.space] = gtop::io::nr_to_json(row.r);
    }
    report["realization_table"] = table;
    report["realizations"] = realizations;
    emit(report, cfg);
    return kExitOk;
}

int cmd_partition(const std::string& model_file, const std::string& method, long long samples,
                  const RunConfig& cfg) {
    json in = gtop::io::load_file(model_file);
    std::string base_dir = std::filesystem::path(model_file).parent_path().string();
    auto m = gtop::io::parse_model(in, base_dir);
    json report;
    report["model"] = model_file;
    report["method"] = method;

    auto t0 = std::chrono::steady_clock::now();
    auto ms_since = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (method == "exact") {
        auto z = gtop::ising::partition_exact(m, cfg.enumeration_cap);
        gtop::nfg::PartitionValue pv;
        pv.value = z;
        pv.method = "exact";
        pv.declared_scale = gtop::Rational(1);
        pv.info_set_size = static_cast<long long>(m.graph->vertex_ids.size());
        pv.wall_ms = ms_since();
        report["result"] = partition_value_json(pv);
    } else if (method == "primal" || method == "dual") {
        auto tree = pick_tree(*m.graph, cfg);
        auto pv = method == "primal" ? gtop::ising::partition_primal(m, tree, cfg.enumeration_cap)
                                     : gtop::ising::partition_dual(m, tree, cfg.enumeration_cap);
        report["result"] = partition_value_json(pv);
    } else if (method == "field-primal" || method == "field-dual" || method == "hybrid") {
        auto tree = pick_tree(*m.graph, cfg);
        auto fm = method == "field-primal" ? gtop::ising::FieldMethod::PrimalW01
                  : method == "field-dual" ? gtop::ising::FieldMethod::DualW10
                                           : gtop::ising::FieldMethod::Hybrid;
        auto pv = gtop::ising::partition_with_field(m, fm, tree, 0, cfg.enumeration_cap);
        report["result"] = partition_value_json(pv);
    } else if (method == "planar4") {
        json graph_json;
        if (in.contains("graph")) {
            graph_json = in.at("graph");
        } else {
            std::string path = in.at("graph_file").get<std::string>();
            if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
            graph_json = gtop::io::load_file(path);
        }
        if (!gtop::io::has_faces(graph_json))
            throw gtop::ValidationError("planar4 needs a graph with faces");
        auto k = gtop::io::parse_complex(graph_json);
        auto rep = gtop::ising::planar_representations(m, k, cfg.enumeration_cap);
        report["exact_primal"] = {rep.exact_primal.real(), rep.exact_primal.imag()};
        report["exact_dual"] = {rep.exact_dual.real(), rep.exact_dual.imag()};
        json reps = json::array();
        for (const auto& r : rep.primal_z) {
            json j = partition_value_json(r.pv);
            j["space"] = r.space;
            j["graph"] = r.graph;
            j["weights"] = r.weights;
            j["dimension"] = r.dimension;
            j["reference"] = "primal";
            reps.push_back(j);
        }
        for (const auto& r : rep.dual_z) {
            json j = partition_value_json(r.pv);
            j["space"] = r.space;
            j["graph"] = r.graph;
            j["weights"] = r.weights;
            j["dimension"] = r.dimension;
            j["reference"] = "dual";
            reps.push_back(j);
        }
        report["representations"] = reps;
    } else if (method == "mc") {
        auto tree = pick_tree(*m.graph, cfg);
        auto est = gtop::ising::importance_sampling(m, tree, samples, cfg.seed);
        json j;
        j["estimate"] = est.estimate;
        j["std_error"] = est.std_error;
        j["num_samples"] = est.num_samples;
        j["seed"] = est.seed;
        j["declared_scale"] = est.declared_scale.to_string();
        j["normalized_estimate"] = est.estimate / est.declared_scale.to_double();
        j["normalized_std_error"] = est.std_error / est.declared_scale.to_double();
        json tree_edges = json::array();
        for (int e : est.tree_used.tree_edges) tree_edges.push_back(m.graph->edges[e].id);
        j["tree"] = tree_edges;
        j["wall_ms"] = ms_since();
        report["result"] = j;
    } else {
        throw gtop::ValidationError("unknown method '" + method + "'");
    }
    emit(report, cfg);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    auto results = gtop::verify::run_suite(suite, cfg);
    json report;
    report["suite"] = suite;
    json props = json::array();
    for (const auto& r : results)
        props.push_back({{"property", r.property}, {"pass", r.pass}, {"detail", r.detail}});
    report["properties"] = props;
    bool ok = gtop::verify::all_pass(results);
    report["pass"] = ok;
    emit(report, cfg);
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic graph topology over finite abelian groups"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string tree_csv;
    app.add_option("--cap", cfg.enumeration_cap, "enumeration cap");
    app.add_option("--tol", cfg.tolerance, "comparison tolerance");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--tree", tree_csv, "spanning tree override, comma-separated edge ids");
    app.add_option("--format", cfg.output_format, "output format: json or csv");

    std::string graph_file, model_file, alphabet = "Z2", method = "exact", suite = "all";
    long long samples = 100000;

    auto* topo_cmd = app.add_subcommand("topo", "connection matrices, trees, cut sets, cycles");
    topo_cmd->add_option("graph", graph_file, "graph JSON file")->required();

    auto* spaces_cmd = app.add_subcommand("spaces", "kernel/image spaces and realization table");
    spaces_cmd->add_option("graph", graph_file, "graph JSON file")->required();
    spaces_cmd->add_option("--alphabet", alphabet, "group spec, e.g. Z2 or Z2xZ3");

    auto* part_cmd = app.add_subcommand("partition", "partition function of a model file");
    part_cmd->add_option("model", model_file, "model JSON file")->required();
    part_cmd->add_option("--method", method,
                         "exact|primal|dual|field-primal|field-dual|hybrid|planar4|mc");
    part_cmd->add_option("--samples", samples, "sample count for mc");

    auto* mc_cmd = app.add_subcommand("mc", "importance-sampling estimate");
    mc_cmd->add_option("model", model_file, "model JSON file")->required();
    mc_cmd->add_option("--samples", samples, "sample count");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "all|duality|nfgdt|scale|planar");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        if (!tree_csv.empty()) {
            std::vector<std::string> ids;
            std::stringstream ss(tree_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) ids.push_back(tok);
            cfg.tree_override = ids;
        }
        if (topo_cmd->parsed()) return cmd_topo(graph_file, cfg);
        if (spaces_cmd->parsed()) return cmd_spaces(graph_file, alphabet, cfg);
        if (part_cmd->parsed()) return cmd_partition(model_file, method, samples, cfg);
        if (mc_cmd->parsed()) return cmd_partition(model_file, "mc", samples, cfg);
        if (verify_cmd->parsed()) return cmd_verify(suite, cfg);
    } catch (const gtop::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const gtop::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

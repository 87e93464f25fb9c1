#include "hypercent/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hypercent/connectivity.hpp"
#include "hypercent/errors.hpp"
#include "hypercent/io.hpp"
#include "hypercent/ranking.hpp"
#include "hypercent/spectral.hpp"
#include "hypercent/tensor.hpp"

namespace hypercent {

namespace {

struct Options {
    std::string input;
    std::string format = "hyperedges";
    std::string method;
    std::string method_a, method_b;
    std::string scores_a, scores_b;
    std::string out, json_out;
    int k = 0;
    int tails = 0;
    double tol = 1e-10;
    int max_iter = 10000;
    double shift = 1.0;
    bool undirected = false;
    bool allow_unconverged = false;
};

struct Input {
    std::optional<Hypergraph> hypergraph;
    std::optional<LabeledDigraph> digraph;
};

Input load_input(const Options& o) {
    if (o.input.empty()) fail(errc::io_error, "--input is required");
    std::string text = read_file(o.input);
    Input in;
    if (o.format == "hyperedges")
        in.hypergraph = parse_hyperedges(text);
    else if (o.format == "reactions")
        in.hypergraph = parse_reactions(text);
    else if (o.format == "edgelist")
        in.digraph = parse_edgelist(text, o.undirected);
    else
        fail(errc::io_error, "unknown format '" + o.format + "'");
    return in;
}

struct MethodRun {
    CentralityResult result;
    std::vector<std::string> labels;
};

MethodRun run_method(const std::string& method, const Input& in, const SolverConfig& cfg, int k) {
    auto need_hypergraph = [&in, &method]() -> const Hypergraph& {
        if (!in.hypergraph)
            fail(errc::io_error, "method '" + method + "' needs a hyperedges/reactions input");
        return *in.hypergraph;
    };
    if (method == "hec") {
        const Hypergraph& h = need_hypergraph();
        return {hec(OrbitTensor::from_hypergraph(h), cfg), h.nodes().labels()};
    }
    if (method == "hec-directed") {
        const Hypergraph& h = need_hypergraph();
        return {hec_directed(h, cfg), h.nodes().labels()};
    }
    if (method == "ec-f") {
        const Hypergraph& h = need_hypergraph();
        return {ec_f_hypergraph(h, cfg), h.nodes().labels()};
    }
    if (method == "ec-projection") {
        if (in.digraph) return {ec_projection(in.digraph->graph, cfg), in.digraph->nodes.labels()};
        const Hypergraph& h = need_hypergraph();
        return {ec_projection(h.project(), cfg), h.nodes().labels()};
    }
    if (method == "kstep") {
        if (!in.digraph) fail(errc::io_error, "method 'kstep' needs an edgelist input");
        return {kstep_centrality(KStepOperator(in.digraph->graph, k), cfg),
                in.digraph->nodes.labels()};
    }
    fail(errc::io_error, "unknown method '" + method + "'");
}

void check_k(const Options& o, bool kstep_in_use) {
    if (kstep_in_use && o.k < 2)
        fail(errc::k_out_of_range, "--k >= 2 is required with method 'kstep'");
    if (!kstep_in_use && o.k != 0)
        fail(errc::k_out_of_range, "--k only applies to method 'kstep'");
}

void emit(const Options& o, const std::string& content) {
    if (o.out.empty())
        std::cout << content;
    else
        write_file(o.out, content);
}

int cmd_info(const Options& o) {
    Input in = load_input(o);
    if (in.digraph) {
        std::cout << "nodes: " << in.digraph->graph.node_count() << "\n";
        std::cout << "arcs: " << in.digraph->graph.arc_count() << "\n";
        return 0;
    }
    const Hypergraph& h = *in.hypergraph;
    std::cout << "nodes: " << h.node_count() << "\n";
    std::cout << "edges: " << h.edge_count() << "\n";
    std::vector<int> counts = h.kind_counts();
    std::cout << "kinds: undirected=" << counts[0] << " cyclic=" << counts[1]
              << " directed=" << counts[2] << "\n";
    if (h.edge_count() > 0) {
        std::string uniformity;
        try {
            uniformity = std::to_string(h.uniformity());
        } catch (const Error&) {
            uniformity = "mixed";
        }
        std::cout << "uniformity: " << uniformity << "\n";
        if (counts[2] == h.edge_count()) {
            std::string tails;
            try {
                tails = std::to_string(h.tail_uniformity());
            } catch (const Error&) {
                tails = "mixed";
            }
            std::cout << "tail-uniformity: " << tails << "\n";
        }
    }
    return 0;
}

int cmd_core(const Options& o) {
    Input in = load_input(o);
    if (!in.hypergraph) fail(errc::io_error, "core needs a hyperedges/reactions input");
    const Hypergraph& h = *in.hypergraph;
    int tails = o.tails;
    if (tails <= 0) {
        // Modal tail cardinality, smallest value on ties.
        std::map<int, int> counts;
        for (const Hyperedge& e : h.edges()) {
            if (e.kind != EdgeKind::directed)
                fail(errc::not_directed, "core needs directed hyperedges");
            ++counts[static_cast<int>(e.tail.size())];
        }
        if (counts.empty()) fail(errc::not_directed, "no directed hyperedges");
        tails = counts.begin()->first;
        for (const auto& [size, count] : counts)
            if (count > counts.at(tails)) tails = size;
        std::cout << "tails: " << tails << " (modal)\n";
    }
    Hypergraph core = b_uniform_core(h, tails);
    std::cout << "core: " << core.node_count() << " nodes, " << core.edge_count() << " edges\n";
    emit(o, serialize_hyperedges(core));
    return 0;
}

int cmd_centrality(const Options& o) {
    check_k(o, o.method == "kstep");
    Input in = load_input(o);
    SolverConfig cfg{.tol = o.tol, .max_iter = o.max_iter, .shift = o.shift};
    MethodRun run = run_method(o.method, in, cfg, o.k);
    if (!run.result.converged && !o.allow_unconverged) {
        std::cerr << "NotConverged: " << run.result.iterations << " iterations, residual "
                  << format_double(run.result.residual) << "\n";
        return 2;
    }
    Ranking ranking = rank_descending(run.result.scores);
    emit(o, rankings_csv(run.result, ranking, run.labels, o.allow_unconverged));
    if (!o.json_out.empty())
        write_file(o.json_out, rankings_json(run.result, ranking, run.labels, o.allow_unconverged));
    return 0;
}

int cmd_compare(const Options& o) {
    std::vector<double> a, b;
    if (!o.scores_a.empty() || !o.scores_b.empty()) {
        if (o.scores_a.empty() || o.scores_b.empty())
            fail(errc::io_error, "--scores-a and --scores-b must be given together");
        auto rows_a = parse_scores_csv(read_file(o.scores_a));
        auto rows_b = parse_scores_csv(read_file(o.scores_b));
        std::map<std::string, double> by_label(rows_b.begin(), rows_b.end());
        if (rows_a.size() != by_label.size())
            fail(errc::length_mismatch, "score files disagree on node count");
        for (const auto& [label, score] : rows_a) {
            auto it = by_label.find(label);
            if (it == by_label.end())
                fail(errc::unknown_node, "node '" + label + "' missing from --scores-b");
            a.push_back(score);
            b.push_back(it->second);
        }
    } else {
        if (o.method_a.empty() || o.method_b.empty())
            fail(errc::io_error, "compare needs --method-a/--method-b or --scores-a/--scores-b");
        check_k(o, o.method_a == "kstep" || o.method_b == "kstep");
        Input in = load_input(o);
        SolverConfig cfg{.tol = o.tol, .max_iter = o.max_iter, .shift = o.shift};
        MethodRun run_a = run_method(o.method_a, in, cfg, o.k);
        MethodRun run_b = run_method(o.method_b, in, cfg, o.k);
        if ((!run_a.result.converged || !run_b.result.converged) && !o.allow_unconverged) {
            std::cerr << "NotConverged: one of the methods did not converge\n";
            return 2;
        }
        a = run_a.result.scores;
        b = run_b.result.scores;
    }
    RankComparison cmp = topk_curve(a, b, default_k_grid(static_cast<int>(a.size())));
    if (!o.out.empty()) std::cout << "rho_full = " << format_double(cmp.rho_full) << "\n";
    emit(o, comparison_csv(cmp));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Spectral centralities for heterogeneous hypergraphs", "hypercent"};
    app.require_subcommand(1);

    Options o;
    auto add_input = [&o](CLI::App* cmd) {
        cmd->add_option("--input", o.input, "input file")->required();
        cmd->add_option("--format", o.format, "input format")
            ->check(CLI::IsMember({"hyperedges", "reactions", "edgelist"}));
        cmd->add_flag("--undirected", o.undirected, "mirror every edge-list arc");
    };
    auto add_solver = [&o](CLI::App* cmd) {
        cmd->add_option("--tol", o.tol, "convergence tolerance (bracket width)");
        cmd->add_option("--max-iter", o.max_iter, "iteration cap");
        cmd->add_option("--shift", o.shift, "power-iteration shift");
        cmd->add_option("--k", o.k, "walk order for method 'kstep'");
        cmd->add_flag("--allow-unconverged", o.allow_unconverged,
                      "emit results even without convergence");
    };
    const std::vector<std::string> methods{"hec", "hec-directed", "ec-f", "ec-projection",
                                           "kstep"};

    CLI::App* info = app.add_subcommand("info", "node/edge counts and uniformity checks");
    add_input(info);

    CLI::App* core = app.add_subcommand(
        "core", "extract the strongly connected tail-uniform sub-hypergraph");
    add_input(core);
    core->add_option("--tails", o.tails, "tail cardinality (default: modal)");
    core->add_option("--out", o.out, "output hyperedges file");

    CLI::App* centrality = app.add_subcommand("centrality", "compute a centrality ranking");
    add_input(centrality);
    add_solver(centrality);
    centrality->add_option("--method", o.method, "centrality method")
        ->required()
        ->check(CLI::IsMember(methods));
    centrality->add_option("--out", o.out, "rankings CSV path (stdout when omitted)");
    centrality->add_option("--json", o.json_out, "also write a JSON rankings document");

    CLI::App* compare = app.add_subcommand(
        "compare", "Spearman top-K correlation curves between two rankings. Direction a->b at K "
                   "correlates the rank positions of a's top-K nodes against those nodes' "
                   "positions in b's full ranking (average ranks on ties); b->a symmetrically.");
    compare->add_option("--input", o.input, "input file");
    compare->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"hyperedges", "reactions", "edgelist"}));
    compare->add_flag("--undirected", o.undirected, "mirror every edge-list arc");
    add_solver(compare);
    compare->add_option("--method-a", o.method_a, "first method")->check(CLI::IsMember(methods));
    compare->add_option("--method-b", o.method_b, "second method")->check(CLI::IsMember(methods));
    compare->add_option("--scores-a", o.scores_a, "first rankings CSV (instead of --method-a)");
    compare->add_option("--scores-b", o.scores_b, "second rankings CSV (instead of --method-b)");
    compare->add_option("--out", o.out, "curve CSV path (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(o);
        if (app.got_subcommand(core)) return cmd_core(o);
        if (app.got_subcommand(centrality)) return cmd_centrality(o);
        if (app.got_subcommand(compare)) return cmd_compare(o);
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return err.code() == errc::not_converged ? 2 : 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hypercent

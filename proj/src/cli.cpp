#include "mdg/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "mdg/io.hpp"
#include "mdg/oracle.hpp"

namespace mdg {

namespace {

constexpr int kJsonIndent = 2;

void print_json(std::ostream& out, const Json& doc) {
    out << doc.dump(kJsonIndent) << '\n';
}

std::vector<Digraph> load_all(const std::vector<std::string>& paths) {
    std::vector<Digraph> ds;
    ds.reserve(paths.size());
    for (const std::string& p : paths) ds.push_back(load_digraph_file(p));
    return ds;
}

int cmd_analyze(const std::string& path, std::ostream& out) {
    const Digraph d = load_digraph_file(path);
    print_json(out, report_document(d, full_report(d)));
    return kExitOk;
}

int cmd_product(const std::vector<std::string>& paths, const std::string& out_path,
                int budget, std::ostream& out) {
    const std::vector<Digraph> factors = load_all(paths);
    const Digraph p = n_ary_product(factors, budget);
    Json doc;
    doc["n"] = p.order();
    doc["arcs"] = p.arc_count();
    Json sizes = Json::array();
    for (const Digraph& f : factors) sizes.push_back(f.order());
    doc["factor_sizes"] = sizes;
    if (!out_path.empty()) {
        save_digraph_file(p, out_path);
        doc["written"] = out_path;
    }
    print_json(out, doc);
    return kExitOk;
}

int cmd_factor_analyze(const std::vector<std::string>& paths, int budget,
                       std::ostream& out) {
    const std::vector<Digraph> factors = load_all(paths);
    const FactorAnalysis analysis = factor_analysis(factors);
    const FactoredReport fr = factored_sets(factors, analysis, budget);
    std::vector<int> sizes;
    for (const Digraph& f : factors) sizes.push_back(f.order());
    print_json(out, factored_report_document(factors, analysis, fr,
                                             step_count_ledger(sizes)));
    return kExitOk;
}

int cmd_verify(int trials, int max_n, std::uint64_t seed, std::ostream& out) {
    const SuiteConfig cfg{trials, max_n, seed};
    const std::vector<PropertyOutcome> outcomes = run_property_suite(cfg);
    print_json(out, outcomes_document(cfg, outcomes));
    return has_must_hold_violation(outcomes) ? kExitViolation : kExitOk;
}

int cmd_search(const std::string& which, int trials, int max_n,
               std::uint64_t seed, bool symmetric, const std::string& witness_out,
               std::ostream& out) {
    const CounterexampleKind kind = which == "interval-closure"
                                        ? CounterexampleKind::interval_closure
                                        : CounterexampleKind::cardinality_two;
    const PropertyOutcome outcome =
        search_counterexample(kind, trials, max_n, seed, symmetric);
    print_json(out, outcome_document(outcome));
    if (!witness_out.empty() && !outcome.failures.empty())
        save_digraph_file(outcome.failures.front().witnesses.front(), witness_out);
    return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, int reps, std::ostream& out) {
    print_json(out, ledger_document(benchmark_step_counts(sizes, reps), true));
    return kExitOk;
}

int cmd_gen(int n, double p, std::uint64_t seed, bool symmetric,
            std::ostream& out) {
    const GeneratorConfig cfg{n, p, seed};
    out << emit_digraph(symmetric ? random_symmetric_strong_digraph(cfg)
                                  : random_strong_digraph(cfg));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"maximum-distance structure of strong digraphs"};
    app.require_subcommand(1);

    std::string analyze_path;
    auto* analyze = app.add_subcommand(
        "analyze", "boundary-type sets and eccentricities of one digraph");
    analyze->add_option("file", analyze_path, "digraph file")->required();

    std::vector<std::string> product_paths;
    std::string product_out;
    int budget = kDefaultVertexBudget;
    auto* product =
        app.add_subcommand("product", "build the Cartesian product of digraphs");
    product->add_option("files", product_paths, "factor files")->required();
    product->add_option("--explicit-out", product_out, "write the product here");
    product->add_option("--budget", budget, "vertex budget");

    std::vector<std::string> fa_paths;
    int fa_budget = kDefaultVertexBudget;
    auto* fanalyze = app.add_subcommand(
        "factor-analyze", "analyse a product through its factors");
    fanalyze->add_option("files", fa_paths, "factor files")->required();
    fanalyze->add_option("--budget", fa_budget, "vertex budget for fallbacks");

    int trials = 1000, max_n = 7;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--trials", trials, "trials per property");
    verify->add_option("--max-n", max_n, "largest digraph order");
    verify->add_option("--seed", seed, "suite seed");

    std::string which;
    int s_trials = 2000, s_max_n = 7;
    std::uint64_t s_seed = 0;
    bool s_symmetric = false;
    std::string witness_out;
    auto* search = app.add_subcommand("search-counterexample",
                                      "look for failures of the undirected-graph "
                                      "count statements");
    search->add_option("--which", which, "interval-closure or cardinality-two")
        ->required()
        ->check(CLI::IsMember({"interval-closure", "cardinality-two"}));
    search->add_option("--trials", s_trials, "random trials before exhaustion");
    search->add_option("--max-n", s_max_n, "largest digraph order");
    search->add_option("--seed", s_seed, "search seed");
    search->add_flag("--symmetric", s_symmetric, "restrict to symmetric digraphs");
    search->add_option("--witness-out", witness_out, "write the first witness here");

    std::vector<int> sizes;
    int reps = 100;
    auto* bench = app.add_subcommand(
        "bench", "step counts and wall time, direct versus factored");
    bench->add_option("--sizes", sizes, "factor sizes, comma separated")
        ->required()
        ->delimiter(',');
    bench->add_option("--reps", reps, "timing repetitions");

    int gen_n = 5;
    double gen_p = 0.2;
    std::uint64_t gen_seed = 0;
    bool gen_symmetric = false;
    auto* gen = app.add_subcommand("gen", "emit a random strong digraph");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "extra arc probability");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_flag("--symmetric", gen_symmetric, "emit a symmetric digraph");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_path, out);
        if (*product) return cmd_product(product_paths, product_out, budget, out);
        if (*fanalyze) return cmd_factor_analyze(fa_paths, fa_budget, out);
        if (*verify) return cmd_verify(trials, max_n, seed, out);
        if (*search)
            return cmd_search(which, s_trials, s_max_n, s_seed, s_symmetric,
                              witness_out, out);
        if (*bench) return cmd_bench(sizes, reps, out);
        if (*gen) return cmd_gen(gen_n, gen_p, gen_seed, gen_symmetric, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const NotStronglyConnectedError& e) {
        err << e.what() << '\n';
        return kExitNotStrong;
    } catch (const BudgetError& e) {
        err << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mdg

// flatcurve command-line interface: generate synthetic social networks,
// analyze clustering/centrality, run targeted-isolation scenarios, and
// orchestrate Monte-Carlo experiments from a JSON config.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatcurve/centrality.hpp"
#include "flatcurve/clustering.hpp"
#include "flatcurve/curve.hpp"
#include "flatcurve/edge_list_io.hpp"
#include "flatcurve/experiment.hpp"
#include "flatcurve/generators.hpp"
#include "flatcurve/isolation.hpp"
#include "flatcurve/rng.hpp"

using nlohmann::json;
using namespace flatcurve;

namespace {

json dist_to_json(const DistanceDistribution& dist) {
    return json{{"counts", dist.counts},
                {"fractions", dist.fractions()},
                {"n_reachable", dist.n_reachable},
                {"unreachable", dist.unreachable},
                {"n_active", dist.n_active},
                {"source_info", dist.source_info}};
}

json gamma_to_json(const std::optional<GammaParams>& p) {
    if (!p)
        return nullptr;
    return json{{"k", p->k}, {"theta", p->theta}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot write '" + out_path + "'");
    out << j.dump(2) << '\n';
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t cur = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
            prev = cur;
        }
    }
    return row[b.size()];
}

void collect_option_names(const CLI::App* app, std::vector<std::string>& names) {
    for (const CLI::Option* opt : app->get_options())
        for (const std::string& n : opt->get_lnames())
            names.push_back("--" + n);
    for (const CLI::App* sub : app->get_subcommands({}))
        collect_option_names(sub, names);
}

// Nearest registered flag for a typo, if anything is close enough.
std::string suggest_flag(const CLI::App& app, int argc, char** argv) {
    std::vector<std::string> names;
    collect_option_names(&app, names);
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--", 0) != 0)
            continue;
        const std::string flag = arg.substr(0, arg.find('='));
        if (std::find(names.begin(), names.end(), flag) != names.end())
            continue;
        std::string best;
        std::size_t best_dist = 4;  // suggest only close matches
        for (const std::string& n : names) {
            const std::size_t d = levenshtein(flag, n);
            if (d < best_dist) {
                best_dist = d;
                best = n;
            }
        }
        if (!best.empty())
            return "did you mean '" + best + "'?";
    }
    return {};
}

struct GenerateArgs {
    std::string model = "ba";
    NodeId n = 1000;
    int m = 4;
    int m0 = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    GrowthSpec spec;
    spec.n = a.n;
    spec.m = a.m;
    spec.seed = a.seed;
    if (a.model == "ba") {
        spec.m0_pa = a.m;
    } else if (a.model == "hk") {
        if (a.m0 < 1)
            throw CLI::ValidationError("--m0", "hk model requires --m0 >= 1");
        spec.m0_pa = a.m0;
    } else {
        throw CLI::ValidationError("--model", "must be 'ba' or 'hk'");
    }
    const Graph g = generate(spec);
    write_edge_list(g, a.out);
    json meta{{"model", a.model},
              {"n", spec.n},
              {"m", spec.m},
              {"m0_pa", spec.m0_pa},
              {"seed", spec.seed},
              {"seed_graph_nodes", seed_graph_size(spec.m)},
              {"seed_graph_edges",
               static_cast<std::size_t>(seed_graph_size(spec.m)) *
                   (seed_graph_size(spec.m) - 1) / 2},
              {"edges", g.edge_count()}};
    std::ofstream side(a.out + ".json");
    if (!side)
        throw std::runtime_error("cannot write sidecar '" + a.out + ".json'");
    side << meta.dump(2) << '\n';
    std::cerr << "wrote " << g.n() << " nodes, " << g.edge_count() << " edges to " << a.out
              << '\n';
    return 0;
}

struct AnalyzeArgs {
    std::string in;
    std::string metrics = "clustering";
    std::string measure = "degree";
    double kappa = kDefaultKappa;
    double damping = kDefaultDamping;
    std::size_t top = 0;
    int source = -1;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
    const Graph g = load_graph(a.in);
    if (a.metrics == "clustering") {
        const ClusteringReport rep = clustering_report(g);
        emit(json{{"gcc1", rep.gcc1},
                  {"gcc2", rep.gcc2},
                  {"gcc2_defined", rep.gcc2_defined},
                  {"triads", rep.triangles},
                  {"triplets", rep.triplets}},
             a.out);
        return 0;
    }
    if (a.metrics == "centrality") {
        const CentralityScores s =
            compute_centrality(g, measure_from_string(a.measure), a.kappa, a.damping);
        json j{{"measure", to_string(s.measure)},
               {"params",
                {{"kappa", s.params.kappa},
                 {"damping", s.params.damping},
                 {"tolerance", s.params.tolerance},
                 {"iterations", s.params.iterations}}},
               {"scores", s.scores}};
        if (a.top > 0)
            j["top"] = rank_top(s, std::min(a.top, s.active.size()));
        emit(j, a.out);
        return 0;
    }
    if (a.metrics == "curve") {
        DistanceDistribution dist;
        if (a.source >= 0) {
            dist = distance_distribution(g, a.source);
        } else if (a.trials == 0) {
            dist = averaged_curve_exhaustive(g);
        } else {
            Rng rng(a.seed);
            dist = averaged_curve(g, std::min(a.trials, g.active_count()), rng);
        }
        if (a.format == "csv") {
            if (a.out.empty())
                write_curve_csv(dist, std::cout);
            else
                write_curve_csv(dist, a.out);
            return 0;
        }
        const ClusteringReport cl = clustering_report(g);
        json j = dist_to_json(dist);
        json meta{{"diameter", g.diameter()}, {"gcc1", cl.gcc1}, {"gcc2", cl.gcc2}};
        std::optional<GammaParams> fit;
        try {
            fit = fit_gamma(dist);
        } catch (const std::runtime_error&) {
        }
        if (fit) {
            meta["k"] = fit->k;
            meta["theta"] = fit->theta;
        } else {
            meta["k"] = nullptr;
            meta["theta"] = nullptr;
        }
        j["metadata"] = meta;
        emit(j, a.out);
        return 0;
    }
    throw CLI::ValidationError("--metrics", "must be clustering, centrality, or curve");
}

struct IsolateArgs {
    std::string in;
    std::string measure = "degree";
    std::string scenario = "fraction";
    double value = 0.05;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double kappa = kDefaultKappa;
    double damping = kDefaultDamping;
    bool recompute = false;
    std::string out;
};

int cmd_isolate(const IsolateArgs& a) {
    const Graph g = load_graph(a.in);
    const Measure measure = measure_from_string(a.measure);
    const std::size_t trials = a.trials == 0 ? g.active_count() : a.trials;
    Rng rng(a.seed);

    json j{{"input", a.in},
           {"measure", a.measure},
           {"scenario", a.scenario},
           {"value", a.value},
           {"source_trials", trials},
           {"seed", a.seed}};
    int code = 0;
    IsolationPlan plan;
    FlatteningReport rep;
    if (a.scenario == "fraction") {
        Scenario1Result res = scenario1(g, measure, a.value, trials, rng, a.kappa, a.damping);
        plan = std::move(res.plan);
        rep = std::move(res.report);
        j["isolated_count"] = plan.targets.size();
    } else if (a.scenario == "threshold") {
        Scenario2Result res =
            scenario2(g, measure, a.value, trials, rng, a.recompute, a.kappa, a.damping);
        plan = std::move(res.plan);
        rep = std::move(res.report);
        j["isolated_count"] = res.isolated_count;
        j["threshold_reached"] = res.threshold_reached;
        if (!res.threshold_reached) {
            std::cerr << "threshold unreachable: peak ratio " << rep.peak_drop << " > "
                      << a.value << " after " << res.isolated_count
                      << " isolations; writing partial report\n";
            code = 2;
        }
    } else {
        throw CLI::ValidationError("--scenario", "must be 'fraction' or 'threshold'");
    }
    j["plan"] = json{{"targets", plan.targets}, {"skipped", plan.skipped}};
    j["curve_before"] = dist_to_json(rep.curve_before);
    j["curve_after"] = dist_to_json(rep.curve_after);
    j["gamma_before"] = gamma_to_json(rep.gamma_before);
    j["gamma_after"] = gamma_to_json(rep.gamma_after);
    j["peak_drop"] = rep.peak_drop;
    j["mean_distance_change"] = rep.mean_distance_change;
    emit(j, a.out);
    return code;
}

struct ExperimentArgs {
    std::string config;
    std::string out;
    std::string format = "json";
    std::size_t workers = 0;
    std::int64_t seed = -1;
};

int cmd_experiment(const ExperimentArgs& a) {
    ExperimentConfig cfg = load_config(a.config);
    if (a.seed >= 0)
        cfg.master_seed = static_cast<std::uint64_t>(a.seed);
    const ExperimentReport rep = run_experiment(cfg, a.workers);
    const ReportFormat fmt = a.format == "csv" ? ReportFormat::csv : ReportFormat::json;
    if (a.out.empty()) {
        if (fmt == ReportFormat::json)
            std::cout << report_to_json(rep).dump(2) << '\n';
        else
            write_report(rep, "/dev/stdout", ReportFormat::csv);
    } else {
        write_report(rep, a.out, fmt);
        std::cerr << "wrote report for " << rep.records.size() << " trials ("
                  << rep.failed_trials << " failed) to " << a.out << '\n';
    }
    return 0;
}

struct FitGammaArgs {
    std::string in;
};

int cmd_fit_gamma(const FitGammaArgs& a) {
    const DistanceDistribution dist = read_curve_csv(a.in);
    const GammaParams p = fit_gamma(dist);
    std::cout << json{{"k", p.k}, {"theta", p.theta}}.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scale-free network generation, centrality analysis, and "
                 "infection-curve flattening experiments"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "grow a BA or HK network");
    generate->add_option("--model", gen.model, "ba or hk")->capture_default_str();
    generate->add_option("--n", gen.n, "final node count")->capture_default_str();
    generate->add_option("--m", gen.m, "links per new node")->capture_default_str();
    generate->add_option("--m0", gen.m0, "preferential-attachment links per new node (hk)")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    generate->add_option("--out", gen.out, "edge-list output path")->required();

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand("analyze", "compute metrics of an edge-list graph");
    analyze->add_option("--in", an.in, "edge-list input path")->required();
    analyze->add_option("--metrics", an.metrics, "clustering, centrality, or curve")
        ->capture_default_str();
    analyze->add_option("--measure", an.measure,
                        "degree|betweenness|closeness|katz|pagerank|expected_force")
        ->capture_default_str();
    analyze->add_option("--kappa", an.kappa, "katz attenuation")->capture_default_str();
    analyze->add_option("--damping", an.damping, "pagerank damping")->capture_default_str();
    analyze->add_option("--top", an.top, "include the top-k ranked nodes")->capture_default_str();
    analyze->add_option("--source", an.source, "curve source node (-1 = averaged)")
        ->capture_default_str();
    analyze->add_option("--trials", an.trials, "curve source samples (0 = all nodes)")
        ->capture_default_str();
    analyze->add_option("--seed", an.seed, "PRNG seed")->capture_default_str();
    analyze->add_option("--format", an.format, "json or csv (curve only)")->capture_default_str();
    analyze->add_option("--out", an.out, "output path (default stdout)");

    IsolateArgs iso;
    CLI::App* isolate = app.add_subcommand("isolate", "run a targeted-isolation scenario");
    isolate->add_option("--in", iso.in, "edge-list input path")->required();
    isolate->add_option("--measure", iso.measure, "centrality measure")->capture_default_str();
    isolate->add_option("--scenario", iso.scenario, "fraction or threshold")
        ->capture_default_str();
    isolate->add_option("--value", iso.value, "isolated fraction, or peak threshold")
        ->capture_default_str();
    isolate->add_option("--trials", iso.trials, "curve source samples (0 = all nodes)")
        ->capture_default_str();
    isolate->add_option("--seed", iso.seed, "PRNG seed")->capture_default_str();
    isolate->add_option("--kappa", iso.kappa, "katz attenuation")->capture_default_str();
    isolate->add_option("--damping", iso.damping, "pagerank damping")->capture_default_str();
    isolate->add_flag("--recompute", iso.recompute, "recompute centralities after each isolation");
    isolate->add_option("--out", iso.out, "report JSON path (default stdout)");

    ExperimentArgs exp;
    CLI::App* experiment = app.add_subcommand("experiment", "run a Monte-Carlo experiment");
    experiment->add_option("--config", exp.config, "experiment config JSON")->required();
    experiment->add_option("--out", exp.out, "report output path (default stdout)");
    experiment->add_option("--format", exp.format, "json or csv")->capture_default_str();
    experiment->add_option("--workers", exp.workers, "worker threads (0 = FLATCURVE_WORKERS/auto)")
        ->capture_default_str();
    experiment->add_option("--seed", exp.seed, "override master_seed (-1 = use config)")
        ->capture_default_str();

    FitGammaArgs fg;
    CLI::App* fit = app.add_subcommand("fit-gamma", "fit gamma parameters to a curve CSV");
    fit->add_option("--in", fg.in, "curve CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        const std::string hint = suggest_flag(app, argc, argv);
        if (!hint.empty())
            std::cerr << hint << '\n';
        return 1;
    }

    try {
        if (generate->parsed())
            return cmd_generate(gen);
        if (analyze->parsed())
            return cmd_analyze(an);
        if (isolate->parsed())
            return cmd_isolate(iso);
        if (experiment->parsed())
            return cmd_experiment(exp);
        if (fit->parsed())
            return cmd_fit_gamma(fg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

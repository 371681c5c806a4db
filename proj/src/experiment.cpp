#include "flatcurve/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "flatcurve/clustering.hpp"
#include "flatcurve/edge_list_io.hpp"
#include "flatcurve/generators.hpp"
#include "flatcurve/isolation.hpp"
#include "flatcurve/rng.hpp"
#include "flatcurve/util.hpp"

namespace flatcurve {

using nlohmann::json;

std::string to_string(ModelKind m) {
    switch (m) {
        case ModelKind::ba: return "ba";
        case ModelKind::hk: return "hk";
        case ModelKind::file: return "file";
    }
    throw std::logic_error("unknown model");
}

std::string to_string(ScenarioKind s) {
    switch (s) {
        case ScenarioKind::none: return "none";
        case ScenarioKind::fraction: return "fraction";
        case ScenarioKind::threshold: return "threshold";
    }
    throw std::logic_error("unknown scenario");
}

namespace {

ModelKind model_from_string(const std::string& s) {
    if (s == "ba") return ModelKind::ba;
    if (s == "hk") return ModelKind::hk;
    if (s == "file") return ModelKind::file;
    throw std::invalid_argument("unknown model '" + s + "'");
}

ScenarioKind scenario_from_string(const std::string& s) {
    if (s == "none") return ScenarioKind::none;
    if (s == "fraction") return ScenarioKind::fraction;
    if (s == "threshold") return ScenarioKind::threshold;
    throw std::invalid_argument("unknown scenario '" + s + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
    if (mc_trials == 0)
        throw std::invalid_argument("config: mc_trials must be positive");
    if (model == ModelKind::file) {
        if (input_path.empty())
            throw std::invalid_argument("config: file model needs input_path");
    } else {
        if (n <= 0 || m < 1)
            throw std::invalid_argument("config: n and m must be positive");
        if (n <= m)
            throw std::invalid_argument("config: n must exceed m");
        if (model == ModelKind::hk && (m0_pa < 1 || m0_pa >= m))
            throw std::invalid_argument("config: hk needs 1 <= m0_pa < m");
    }
    if (scenario != ScenarioKind::none) {
        if (value <= 0.0 || value >= 1.0)
            throw std::invalid_argument("config: scenario value must be in (0,1)");
        if (measures.empty())
            throw std::invalid_argument("config: scenario needs at least one measure");
    }
}

namespace {

Graph build_trial_graph(const ExperimentConfig& cfg, std::uint64_t seed) {
    switch (cfg.model) {
        case ModelKind::ba:
            return generate_ba(cfg.n, cfg.m, seed);
        case ModelKind::hk:
            return generate_hk(cfg.n, cfg.m, cfg.m0_pa, seed);
        case ModelKind::file:
            return load_graph(cfg.input_path);
    }
    throw std::logic_error("unknown model");
}

std::optional<GammaParams> try_fit(const DistanceDistribution& dist) {
    try {
        return fit_gamma(dist);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

std::size_t effective_source_trials(const ExperimentConfig& cfg, const Graph& g) {
    return cfg.source_trials == 0 ? g.active_count()
                                  : std::min(cfg.source_trials, g.active_count());
}

ScenarioOutcome outcome_from(const IsolationPlan& plan, const FlatteningReport& rep,
                             bool reached) {
    ScenarioOutcome out;
    out.measure = plan.measure;
    out.curve_before = rep.curve_before.counts;
    out.curve_after = rep.curve_after.counts;
    out.gamma_before = rep.gamma_before;
    out.gamma_after = rep.gamma_after;
    out.peak_drop = rep.peak_drop;
    out.mean_distance_change = rep.mean_distance_change;
    out.isolated_count = plan.targets.size();
    out.skipped_count = plan.skipped.size();
    out.threshold_reached = reached;
    return out;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t index) {
    TrialRecord rec;
    rec.trial = index;
    rec.seed = derive_seed(cfg.master_seed, index);
    try {
        const Graph g = build_trial_graph(cfg, rec.seed);

        const ClusteringReport cl = clustering_report(g);
        rec.gcc1 = cl.gcc1;
        rec.gcc2 = cl.gcc2;
        rec.diameter = g.diameter();

        // Distinct sub-streams per purpose keep the baseline curve, and each
        // measure's scenario, independent of one another.
        Rng curve_rng(derive_seed(rec.seed, 1));
        const std::size_t trials = effective_source_trials(cfg, g);
        const DistanceDistribution baseline =
            cfg.source_trials == 0 ? averaged_curve_exhaustive(g)
                                   : averaged_curve(g, trials, curve_rng);
        rec.curve = baseline.counts;
        rec.gamma = try_fit(baseline);

        if (cfg.scenario == ScenarioKind::none)
            return rec;

        for (std::size_t mi = 0; mi < cfg.measures.size(); ++mi) {
            const Measure measure = cfg.measures[mi];
            Rng rng(derive_seed(rec.seed, 100 + mi));
            if (cfg.scenario == ScenarioKind::fraction) {
                const Scenario1Result res =
                    scenario1(g, measure, cfg.value, trials, rng, cfg.kappa, cfg.damping);
                rec.outcomes.push_back(outcome_from(res.plan, res.report, true));
            } else {
                const Scenario2Result res = scenario2(g, measure, cfg.value, trials, rng,
                                                      cfg.recompute, cfg.kappa, cfg.damping);
                rec.outcomes.push_back(outcome_from(res.plan, res.report, res.threshold_reached));
            }
        }
    } catch (const std::exception& e) {
        rec.status = std::string("error: ") + e.what();
    }
    return rec;
}

std::size_t default_worker_count() {
    if (const char* env = std::getenv("FLATCURVE_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, std::size_t workers) {
    cfg.validate();
    if (workers == 0)
        workers = default_worker_count();
    workers = std::min(workers, cfg.mc_trials);

    ExperimentReport rep;
    rep.config = cfg;
    rep.records.resize(cfg.mc_trials);

    if (workers <= 1) {
        for (std::size_t t = 0; t < cfg.mc_trials; ++t)
            rep.records[t] = run_trial(cfg, t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= cfg.mc_trials)
                        return;
                    rep.records[t] = run_trial(cfg, t);
                }
            });
        }
        for (auto& th : pool)
            th.join();
    }

    for (const TrialRecord& r : rep.records)
        if (r.status != "ok")
            ++rep.failed_trials;
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["model"] = to_string(cfg.model);
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["m0_pa"] = cfg.m0_pa;
    j["input_path"] = cfg.input_path;
    json measures = json::array();
    for (Measure m : cfg.measures)
        measures.push_back(to_string(m));
    j["measures"] = measures;
    j["scenario"] = to_string(cfg.scenario);
    j["value"] = cfg.value;
    j["mc_trials"] = cfg.mc_trials;
    j["source_trials"] = cfg.source_trials;
    j["master_seed"] = cfg.master_seed;
    j["kappa"] = cfg.kappa;
    j["damping"] = cfg.damping;
    j["recompute"] = cfg.recompute;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    cfg.model = model_from_string(j.at("model").get<std::string>());
    cfg.n = j.value("n", 0);
    cfg.m = j.value("m", 0);
    cfg.m0_pa = j.value("m0_pa", 0);
    cfg.input_path = j.value("input_path", std::string{});
    if (j.contains("measures"))
        for (const auto& name : j.at("measures"))
            cfg.measures.push_back(measure_from_string(name.get<std::string>()));
    cfg.scenario = scenario_from_string(j.value("scenario", std::string{"none"}));
    cfg.value = j.value("value", 0.0);
    cfg.mc_trials = j.value("mc_trials", std::size_t{1});
    cfg.source_trials = j.value("source_trials", std::size_t{0});
    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    cfg.kappa = j.value("kappa", kDefaultKappa);
    cfg.damping = j.value("damping", kDefaultDamping);
    cfg.recompute = j.value("recompute", false);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config '" + path + "'");
    json j;
    in >> j;
    return config_from_json(j);
}

namespace {

json gamma_to_json(const std::optional<GammaParams>& p) {
    if (!p)
        return nullptr;
    return json{{"k", p->k}, {"theta", p->theta}};
}

json stats_of(const std::vector<double>& xs) {
    return json{{"mean", mean_of(xs)}, {"stddev", stddev_of(xs)}};
}

// Element-wise mean of ragged curves (shorter curves padded with 0).
json mean_curve(const std::vector<const std::vector<double>*>& curves) {
    std::size_t width = 0;
    for (const auto* c : curves)
        width = std::max(width, c->size());
    std::vector<double> mean(width, 0.0);
    if (curves.empty())
        return json(mean);
    for (const auto* c : curves)
        for (std::size_t d = 0; d < c->size(); ++d)
            mean[d] += (*c)[d];
    for (double& x : mean)
        x /= static_cast<double>(curves.size());
    return json(mean);
}

json record_to_json(const TrialRecord& r) {
    json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["status"] = r.status;
    if (r.status != "ok")
        return j;
    j["gcc1"] = r.gcc1;
    j["gcc2"] = r.gcc2;
    j["diameter"] = r.diameter;
    j["curve"] = r.curve;
    j["gamma"] = gamma_to_json(r.gamma);
    json outcomes = json::array();
    for (const ScenarioOutcome& o : r.outcomes) {
        json jo;
        jo["measure"] = to_string(o.measure);
        jo["curve_before"] = o.curve_before;
        jo["curve_after"] = o.curve_after;
        jo["gamma_before"] = gamma_to_json(o.gamma_before);
        jo["gamma_after"] = gamma_to_json(o.gamma_after);
        jo["peak_drop"] = o.peak_drop;
        jo["mean_distance_change"] = o.mean_distance_change;
        jo["isolated_count"] = o.isolated_count;
        jo["skipped_count"] = o.skipped_count;
        jo["threshold_reached"] = o.threshold_reached;
        outcomes.push_back(jo);
    }
    j["outcomes"] = outcomes;
    return j;
}

json aggregates_to_json(const ExperimentReport& rep) {
    std::vector<const TrialRecord*> ok;
    for (const TrialRecord& r : rep.records)
        if (r.status == "ok")
            ok.push_back(&r);

    json agg;
    agg["ok_trials"] = ok.size();
    agg["failed_trials"] = rep.failed_trials;
    if (ok.empty())
        return agg;

    const auto column = [&](auto&& get) {
        std::vector<double> xs;
        xs.reserve(ok.size());
        for (const TrialRecord* r : ok)
            xs.push_back(get(*r));
        return xs;
    };
    agg["gcc1"] = stats_of(column([](const TrialRecord& r) { return r.gcc1; }));
    agg["gcc2"] = stats_of(column([](const TrialRecord& r) { return r.gcc2; }));
    agg["diameter"] =
        stats_of(column([](const TrialRecord& r) { return static_cast<double>(r.diameter); }));
    {
        std::vector<double> ks, thetas;
        std::vector<const std::vector<double>*> curves;
        for (const TrialRecord* r : ok) {
            curves.push_back(&r->curve);
            if (r->gamma) {
                ks.push_back(r->gamma->k);
                thetas.push_back(r->gamma->theta);
            }
        }
        agg["k"] = stats_of(ks);
        agg["theta"] = stats_of(thetas);
        agg["curve_mean"] = mean_curve(curves);
    }

    json per_measure = json::object();
    for (std::size_t mi = 0; mi < rep.config.measures.size(); ++mi) {
        std::vector<const ScenarioOutcome*> outs;
        for (const TrialRecord* r : ok)
            if (mi < r->outcomes.size())
                outs.push_back(&r->outcomes[mi]);
        if (outs.empty())
            continue;
        const auto ocolumn = [&](auto&& get) {
            std::vector<double> xs;
            xs.reserve(outs.size());
            for (const ScenarioOutcome* o : outs)
                xs.push_back(get(*o));
            return xs;
        };
        json jm;
        jm["peak_drop"] = stats_of(ocolumn([](const ScenarioOutcome& o) { return o.peak_drop; }));
        jm["mean_distance_change"] = stats_of(
            ocolumn([](const ScenarioOutcome& o) { return o.mean_distance_change; }));
        jm["isolated_count"] = stats_of(ocolumn(
            [](const ScenarioOutcome& o) { return static_cast<double>(o.isolated_count); }));
        std::vector<double> kb, tb, ka, ta;
        std::vector<const std::vector<double>*> before, after;
        std::size_t unreached = 0;
        for (const ScenarioOutcome* o : outs) {
            before.push_back(&o->curve_before);
            after.push_back(&o->curve_after);
            if (o->gamma_before) {
                kb.push_back(o->gamma_before->k);
                tb.push_back(o->gamma_before->theta);
            }
            if (o->gamma_after) {
                ka.push_back(o->gamma_after->k);
                ta.push_back(o->gamma_after->theta);
            }
            if (!o->threshold_reached)
                ++unreached;
        }
        jm["k_before"] = stats_of(kb);
        jm["theta_before"] = stats_of(tb);
        jm["k_after"] = stats_of(ka);
        jm["theta_after"] = stats_of(ta);
        jm["curve_before_mean"] = mean_curve(before);
        jm["curve_after_mean"] = mean_curve(after);
        jm["threshold_unreached"] = unreached;
        per_measure[to_string(rep.config.measures[mi])] = jm;
    }
    agg["per_measure"] = per_measure;
    return agg;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& rep) {
    json j;
    j["config"] = config_to_json(rep.config);
    j["generated_at"] = timestamp_utc();
    json records = json::array();
    for (const TrialRecord& r : rep.records)
        records.push_back(record_to_json(r));
    j["records"] = records;
    j["aggregates"] = aggregates_to_json(rep);
    return j;
}

namespace {

std::string csv_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

void write_report_csv(const ExperimentReport& rep, std::ostream& out) {
    out << "trial,seed,gcc1,gcc2,diameter,k_before,theta_before,k_after,theta_after,"
           "peak_drop,isolated_count,measure\n";
    for (const TrialRecord& r : rep.records) {
        if (r.status != "ok") {
            // Keep one row per trial; a failed trial has no metric cells.
            out << r.trial << ',' << r.seed << ",,,,,,,,,,\n";
            continue;
        }
        if (r.outcomes.empty()) {
            out << r.trial << ',' << r.seed << ',' << format_double(r.gcc1) << ','
                << format_double(r.gcc2) << ',' << r.diameter << ','
                << csv_cell(r.gamma ? std::optional<double>(r.gamma->k) : std::nullopt) << ','
                << csv_cell(r.gamma ? std::optional<double>(r.gamma->theta) : std::nullopt)
                << ",,,,,\n";
            continue;
        }
        for (const ScenarioOutcome& o : r.outcomes) {
            out << r.trial << ',' << r.seed << ',' << format_double(r.gcc1) << ','
                << format_double(r.gcc2) << ',' << r.diameter << ','
                << csv_cell(o.gamma_before ? std::optional<double>(o.gamma_before->k)
                                           : std::nullopt)
                << ','
                << csv_cell(o.gamma_before ? std::optional<double>(o.gamma_before->theta)
                                           : std::nullopt)
                << ','
                << csv_cell(o.gamma_after ? std::optional<double>(o.gamma_after->k) : std::nullopt)
                << ','
                << csv_cell(o.gamma_after ? std::optional<double>(o.gamma_after->theta)
                                          : std::nullopt)
                << ',' << format_double(o.peak_drop) << ',' << o.isolated_count << ','
                << to_string(o.measure) << '\n';
        }
    }
}

}  // namespace

void write_report(const ExperimentReport& rep, const std::string& path, ReportFormat format) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write report '" + path + "'");
    if (format == ReportFormat::json)
        out << report_to_json(rep).dump(2) << '\n';
    else
        write_report_csv(rep, out);
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace flatcurve

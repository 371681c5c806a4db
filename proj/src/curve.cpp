#include "flatcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "flatcurve/util.hpp"

namespace flatcurve {

std::vector<double> DistanceDistribution::fractions() const {
    std::vector<double> out(counts.size());
    const double denom = n_active > 0 ? static_cast<double>(n_active) : 1.0;
    for (std::size_t d = 0; d < counts.size(); ++d)
        out[d] = counts[d] / denom;
    return out;
}

DistanceDistribution distance_distribution(const Graph& g, NodeId source) {
    const DistanceVector d = g.bfs_distances(source);
    DistanceDistribution out;
    out.n_active = g.active_count();
    out.source_info = "source " + std::to_string(source);
    int unreachable = 0;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!g.is_active(v))
            continue;
        const int dv = d.dist[static_cast<std::size_t>(v)];
        if (dv == kUnreachable) {
            ++unreachable;
            continue;
        }
        if (out.counts.size() <= static_cast<std::size_t>(dv))
            out.counts.resize(static_cast<std::size_t>(dv) + 1, 0.0);
        out.counts[static_cast<std::size_t>(dv)] += 1.0;
    }
    out.unreachable = unreachable;
    out.n_reachable = static_cast<double>(g.active_count() - unreachable);
    return out;
}

DistanceDistribution averaged_curve(const Graph& g, std::span<const NodeId> sources) {
    if (sources.empty())
        throw std::invalid_argument("averaged_curve: no sources");
    DistanceDistribution acc;
    acc.n_active = g.active_count();
    for (NodeId s : sources) {
        const DistanceDistribution one = distance_distribution(g, s);
        if (acc.counts.size() < one.counts.size())
            acc.counts.resize(one.counts.size(), 0.0);
        for (std::size_t d = 0; d < one.counts.size(); ++d)
            acc.counts[d] += one.counts[d];
        acc.n_reachable += one.n_reachable;
        acc.unreachable += one.unreachable;
    }
    const double t = static_cast<double>(sources.size());
    for (double& c : acc.counts)
        c /= t;
    acc.n_reachable /= t;
    acc.unreachable /= t;
    acc.source_info = "averaged over " + std::to_string(sources.size()) + " sources";
    return acc;
}

DistanceDistribution averaged_curve(const Graph& g, std::size_t trials, Rng& rng) {
    if (trials == 0)
        throw std::invalid_argument("averaged_curve: trials must be >= 1");
    if (trials > g.active_count())
        throw std::invalid_argument("averaged_curve: trials exceeds active node count");
    const std::vector<NodeId> sources = sample_without_replacement(rng, g.active_nodes(), trials);
    return averaged_curve(g, sources);
}

DistanceDistribution averaged_curve_exhaustive(const Graph& g) {
    const std::vector<NodeId> sources = g.active_nodes();
    return averaged_curve(g, sources);
}

CurvePeak curve_peak(const DistanceDistribution& dist) {
    if (dist.counts.empty())
        throw std::invalid_argument("curve_peak: empty distribution");
    CurvePeak best{0, dist.counts[0]};
    for (std::size_t d = 1; d < dist.counts.size(); ++d) {
        if (dist.counts[d] > best.value) {
            best.distance = static_cast<int>(d);
            best.value = dist.counts[d];
        }
    }
    return best;
}

double mean_distance(const DistanceDistribution& dist) {
    double mass = 0.0;
    double weighted = 0.0;
    for (std::size_t d = 1; d < dist.counts.size(); ++d) {
        mass += dist.counts[d];
        weighted += static_cast<double>(d) * dist.counts[d];
    }
    return mass > 0.0 ? weighted / mass : 0.0;
}

namespace {

void check_params(const GammaParams& p) {
    if (!(p.k > 0.0) || !std::isfinite(p.k) || !(p.theta > 0.0) || !std::isfinite(p.theta))
        throw std::invalid_argument("gamma params must be positive and finite");
}

}  // namespace

double gamma_pdf(double x, const GammaParams& p) {
    check_params(p);
    if (x < 0.0)
        throw std::invalid_argument("gamma_pdf: x must be >= 0");
    if (x == 0.0) {
        if (p.k > 1.0)
            return 0.0;
        if (p.k == 1.0)
            return 1.0 / p.theta;
        throw std::domain_error("pdf pole: gamma pdf diverges at x=0 for k<1");
    }
    const double log_pdf = (p.k - 1.0) * std::log(x) - x / p.theta - std::lgamma(p.k) -
                           p.k * std::log(p.theta);
    return std::exp(log_pdf);
}

GammaParams fit_gamma_moments(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size())
        throw std::invalid_argument("fit_gamma_moments: size mismatch");
    double w_total = 0.0;
    double w_sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] < 0.0)
            throw std::invalid_argument("fit_gamma_moments: negative weight");
        w_total += weights[i];
        w_sum += weights[i] * values[i];
    }
    if (w_total <= 0.0)
        throw std::runtime_error("degenerate sample: no mass");
    const double mean = w_sum / w_total;
    double ss = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        ss += weights[i] * (values[i] - mean) * (values[i] - mean);
    const double var = ss / w_total;
    if (var <= 0.0)
        throw std::runtime_error("degenerate sample: zero variance");
    if (mean <= 0.0)
        throw std::runtime_error("degenerate sample: non-positive mean");
    return GammaParams{mean * mean / var, var / mean};
}

GammaParams fit_gamma(const DistanceDistribution& dist) {
    std::vector<double> values;
    std::vector<double> weights;
    std::size_t distinct_positive = 0;
    for (std::size_t d = 1; d < dist.counts.size(); ++d) {
        if (dist.counts[d] <= 0.0)
            continue;
        values.push_back(static_cast<double>(d));
        weights.push_back(dist.counts[d]);
        ++distinct_positive;
    }
    if (distinct_positive < 2)
        throw std::runtime_error("degenerate sample: need at least two distinct positive distances");
    return fit_gamma_moments(values, weights);
}

void write_curve_csv(const DistanceDistribution& dist, std::ostream& out) {
    out << "distance,count,fraction\n";
    const std::vector<double> frac = dist.fractions();
    for (std::size_t d = 0; d < dist.counts.size(); ++d)
        out << d << ',' << format_double(dist.counts[d]) << ',' << format_double(frac[d]) << '\n';
}

void write_curve_csv(const DistanceDistribution& dist, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write curve csv '" + path + "'");
    write_curve_csv(dist, out);
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

DistanceDistribution read_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open curve csv '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ": empty curve csv");
    DistanceDistribution dist;
    dist.source_info = "file " + path;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        long long d = -1;
        double count = 0.0;
        if (!(fields >> d >> count) || d < 0)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad curve row");
        if (dist.counts.size() <= static_cast<std::size_t>(d))
            dist.counts.resize(static_cast<std::size_t>(d) + 1, 0.0);
        dist.counts[static_cast<std::size_t>(d)] = count;
        dist.n_reachable += count;
    }
    return dist;
}

}  // namespace flatcurve

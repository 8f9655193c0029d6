#include "plawbg/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plawbg/errors.hpp"
#include "plawbg/rng.hpp"

namespace plawbg {

double estimate_alpha(const DegreeDistribution& dist) {
    const auto s = summarize(dist);
    if (s.d_max <= 1) {
        throw EstimatorError("degenerate distribution: d_max must exceed 1");
    }
    if (s.n_d1 == 0) {
        throw EstimatorError(
            "estimator precondition failed: the exponent estimate requires "
            "at least one vertex with degree=1");
    }
    return std::log(static_cast<double>(s.n_d1)) / std::log(static_cast<double>(s.d_max));
}

double objective(std::span<const std::uint64_t> model_bins,
                 std::span<const std::uint64_t> model_counts,
                 std::uint64_t n_obs, std::uint64_t m_obs) {
    double n_model = 0.0, m_model = 0.0;
    for (std::size_t i = 0; i < model_bins.size(); ++i) {
        n_model += static_cast<double>(model_counts[i]);
        m_model += static_cast<double>(model_counts[i]) * static_cast<double>(model_bins[i]);
    }
    const double dn = static_cast<double>(n_obs) - n_model;
    const double dm = static_cast<double>(m_obs) - m_model;
    return std::hypot(dn, dm);
}

std::vector<std::uint64_t> geometric_bins(std::uint32_t n_bins, std::uint64_t d_max_prime) {
    const double log_top = std::log(static_cast<double>(d_max_prime));
    std::vector<std::uint64_t> bins;
    bins.reserve(n_bins);
    for (std::uint32_t j = 0; j < n_bins; ++j) {
        const double x = std::exp(log_top * j / (n_bins - 1));
        bins.push_back(static_cast<std::uint64_t>(std::max<long long>(1, std::llround(x))));
    }
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
    return bins;
}

namespace {

// Shared discretized search space: N_d in [2, max_bins], d_max' in
// {round(d_max_obs * 2^k), k in [-2, 2]} clamped >= 2, scale over 64
// log-spaced values spanning [1, 4 * n(d_1)].
struct Grid {
    std::vector<std::uint32_t> nd_values;
    std::vector<std::uint64_t> dm_values;
    std::vector<double> scale_values;
};

Grid make_grid(const DistributionSummary& s, const FitConfig& cfg) {
    Grid g;
    for (std::uint32_t nd = 2; nd <= cfg.max_bins; ++nd) g.nd_values.push_back(nd);
    for (int k = -2; k <= 2; ++k) {
        const double v = static_cast<double>(s.d_max) * std::pow(2.0, k);
        g.dm_values.push_back(std::max<std::uint64_t>(2, std::llround(v)));
    }
    const double log_top = std::log(4.0 * static_cast<double>(s.n_d1));
    for (int j = 0; j < 64; ++j) {
        g.scale_values.push_back(std::exp(log_top * j / 63.0));
    }
    return g;
}

struct Candidate {
    std::vector<std::uint64_t> bins;
    std::vector<std::uint64_t> counts;
    std::uint64_t model_n = 0;
    std::uint64_t model_m = 0;
    double obj = std::numeric_limits<double>::infinity();
};

Candidate evaluate(const std::vector<std::uint64_t>& bins, const std::vector<double>& powers,
                   double scale, std::uint64_t n_obs, std::uint64_t m_obs) {
    Candidate c;
    c.bins = bins;
    c.counts.resize(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const auto cnt = std::max<long long>(1, std::llround(scale * powers[i]));
        c.counts[i] = static_cast<std::uint64_t>(cnt);
        c.model_n += c.counts[i];
        c.model_m += c.counts[i] * bins[i];
    }
    const double dn = static_cast<double>(n_obs) - static_cast<double>(c.model_n);
    const double dm = static_cast<double>(m_obs) - static_cast<double>(c.model_m);
    c.obj = std::hypot(dn, dm);
    return c;
}

std::vector<double> bin_powers(const std::vector<std::uint64_t>& bins, double alpha) {
    std::vector<double> powers(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        powers[i] = std::pow(static_cast<double>(bins[i]), -alpha);
    }
    return powers;
}

FitResult finish(const Candidate& best, double alpha, double scale, std::uint64_t evals) {
    FitResult r;
    r.model.alpha = alpha;
    r.model.scale_c = scale;
    r.model.bins = best.bins;
    r.model.counts = best.counts;
    r.model.model_n = best.model_n;
    r.model.model_m = best.model_m;
    r.achieved_objective = best.obj;
    r.evaluations = evals;
    return r;
}

FitResult fit_exhaustive(const Grid& g, double alpha, const DistributionSummary& s,
                         const FitConfig& cfg) {
    Candidate best;
    double best_scale = 0.0;
    std::uint64_t evals = 0;
    for (std::uint32_t nd : g.nd_values) {
        for (std::uint64_t dm : g.dm_values) {
            const auto bins = geometric_bins(nd, dm);
            if (bins.size() < 2) continue;
            const auto powers = bin_powers(bins, alpha);
            for (double scale : g.scale_values) {
                if (evals >= cfg.iteration_budget) {
                    return finish(best, alpha, best_scale, evals);
                }
                auto c = evaluate(bins, powers, scale, s.n_vertices, s.degree_mass);
                ++evals;
                if (c.obj < best.obj) {
                    best = std::move(c);
                    best_scale = scale;
                    if (best.obj <= cfg.tolerance) {
                        return finish(best, alpha, best_scale, evals);
                    }
                }
            }
        }
    }
    return finish(best, alpha, best_scale, evals);
}

FitResult fit_annealing(const Grid& g, double alpha, const DistributionSummary& s,
                        const FitConfig& cfg) {
    Rng rng(cfg.seed);

    // Start near a plausible scale (largest grid value <= n(d_1)).
    std::size_t i_nd = g.nd_values.size() - 1;
    std::size_t i_dm = 2;  // k = 0
    std::size_t i_sc = 0;
    for (std::size_t j = 0; j < g.scale_values.size(); ++j) {
        if (g.scale_values[j] <= static_cast<double>(s.n_d1)) i_sc = j;
    }

    auto eval_state = [&](std::size_t a, std::size_t b, std::size_t c) {
        const auto bins = geometric_bins(g.nd_values[a], g.dm_values[b]);
        return evaluate(bins, bin_powers(bins, alpha), g.scale_values[c],
                        s.n_vertices, s.degree_mass);
    };

    Candidate current = eval_state(i_nd, i_dm, i_sc);
    Candidate best = current;
    double best_scale = g.scale_values[i_sc];
    std::uint64_t evals = 1;

    const double t0 = current.obj;
    double temperature = t0;
    for (std::uint64_t k = 0; k < cfg.iteration_budget && best.obj > cfg.tolerance; ++k) {
        std::size_t a = i_nd, b = i_dm, c = i_sc;
        const std::uint64_t coord = rng.next_below(3);
        const bool up = rng.next_below(2) == 1;
        auto step = [up](std::size_t idx, std::size_t size) {
            if (up) return (idx + 1 < size) ? idx + 1 : idx;
            return (idx > 0) ? idx - 1 : idx;
        };
        if (coord == 0) a = step(a, g.nd_values.size());
        else if (coord == 1) b = step(b, g.dm_values.size());
        else c = step(c, g.scale_values.size());
        if (a == i_nd && b == i_dm && c == i_sc) continue;

        Candidate proposal = eval_state(a, b, c);
        ++evals;
        const double delta = proposal.obj - current.obj;
        const bool accept =
            delta <= 0.0 ||
            (temperature > 0.0 && rng.next_unit() < std::exp(-delta / temperature));
        if (accept) {
            current = proposal;
            i_nd = a;
            i_dm = b;
            i_sc = c;
            if (current.obj < best.obj) {
                best = current;
                best_scale = g.scale_values[i_sc];
            }
        }
        temperature = t0 * std::pow(0.995, static_cast<double>(k + 1));
    }
    return finish(best, alpha, best_scale, evals);
}

}  // namespace

FitResult fit_perfect_power_law(const DegreeDistribution& dist, const FitConfig& cfg) {
    if (cfg.max_bins < 2) throw ParameterError("max_bins must be >= 2");
    if (cfg.iteration_budget < 1) throw ParameterError("iteration_budget must be >= 1");

    const double alpha = estimate_alpha(dist);
    if (alpha <= 0.0) {
        throw EstimatorError(
            "inadmissible exponent estimate: alpha must be positive (needs n(d_1) > 1)");
    }
    const auto s = summarize(dist);
    const Grid g = make_grid(s, cfg);
    return cfg.optimizer == OptimizerKind::exhaustive ? fit_exhaustive(g, alpha, s, cfg)
                                                      : fit_annealing(g, alpha, s, cfg);
}

}  // namespace plawbg

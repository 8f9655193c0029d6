#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plawbg/degree.hpp"

namespace plawbg {

/// Idealized power-law background distribution: counts follow
/// n(d) = max(1, round(scale_c * d^-alpha)) on strictly ascending bins.
struct PowerLawModel {
    double alpha = 0.0;
    double scale_c = 0.0;
    std::vector<std::uint64_t> bins;
    std::vector<std::uint64_t> counts;
    std::uint64_t model_n = 0;  // sum of counts
    std::uint64_t model_m = 0;  // sum of counts * bins

    std::uint64_t d_max() const { return bins.empty() ? 0 : bins.back(); }
};

enum class OptimizerKind { exhaustive, annealing };

struct FitConfig {
    OptimizerKind optimizer = OptimizerKind::exhaustive;
    std::uint32_t max_bins = 128;
    std::uint64_t seed = 0;
    std::uint64_t iteration_budget = 1'000'000;
    double tolerance = 0.0;
};

/// First-order exponent estimate log(n(d_1)) / log(d_max), natural logs.
/// Throws EstimatorError when d_max <= 1 or no degree-1 bin exists.
double estimate_alpha(const DegreeDistribution& dist);

/// Joint residual against the observed totals:
/// sqrt(|N_obs - sum(n_i)|^2 + |M_obs - sum(n_i * d_i)|^2).
double objective(std::span<const std::uint64_t> model_bins,
                 std::span<const std::uint64_t> model_counts,
                 std::uint64_t n_obs, std::uint64_t m_obs);

/// N_d geometrically spaced integer degrees from 1 to d_max_prime,
/// duplicates after rounding merged. Always starts at 1.
std::vector<std::uint64_t> geometric_bins(std::uint32_t n_bins, std::uint64_t d_max_prime);

struct FitResult {
    PowerLawModel model;
    double achieved_objective = 0.0;
    std::uint64_t evaluations = 0;
};

/// Searches (N_d, d_max', scale_c) with alpha held at the estimate_alpha
/// value. Deterministic: exhaustive scans candidates in lexicographic
/// (N_d, d_max', scale_c) order, annealing walks the same grid with a
/// seeded PRNG. Ties keep the lexicographically smallest candidate.
FitResult fit_perfect_power_law(const DegreeDistribution& dist, const FitConfig& cfg);

}  // namespace plawbg

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plawbg/degree.hpp"
#include "plawbg/model.hpp"

namespace plawbg {

/// Observed counts reassigned onto model bins. Bin intervals are half-open
/// [d_i, d_{i+1}), the last interval closed above at +infinity, so the
/// total count is always preserved.
struct RebinnedDistribution {
    std::vector<std::uint64_t> bins;    // shared with the model
    std::vector<std::uint64_t> counts;  // zeros retained
    std::uint64_t source_n = 0;
};

/// Throws ParameterError when an observed degree lies below the first
/// model bin (coverage error naming the degree).
RebinnedDistribution rebin(const DegreeDistribution& observed,
                           std::span<const std::uint64_t> model_bins);

enum class Verdict { consistent, inconsistent };

const char* to_string(Verdict v);

struct BinComparison {
    std::uint64_t degree;
    std::uint64_t rebinned;
    std::uint64_t model;
    double log10_ratio;  // defined only when both counts > 0
    bool defined;
};

struct FitReport {
    std::vector<BinComparison> per_bin;
    double divergence = 0.0;  // max |log10 ratio| over defined bins
    bool any_overlap = false; // false => divergence 0 with this warning flag
    Verdict verdict = Verdict::consistent;
    std::vector<std::uint64_t> flagged_degrees;  // bins beyond flag_factor
};

FitReport compare(const RebinnedDistribution& rebinned, const PowerLawModel& model,
                  double ratio_threshold, double flag_factor = 2.0);

/// Vertices whose degree falls in a bin with rebinned > factor * model,
/// or whose degree exceeds the model's d_max. Requires factor > 1.
std::vector<std::uint32_t> filter_high_degree(std::span<const std::uint64_t> degrees,
                                              const PowerLawModel& model,
                                              const RebinnedDistribution& rebinned,
                                              double factor);

}  // namespace plawbg

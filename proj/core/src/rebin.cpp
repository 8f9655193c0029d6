#include "plawbg/rebin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plawbg/errors.hpp"

namespace plawbg {

namespace {

// Index of the half-open interval [bins[i], bins[i+1]) containing d; the
// last interval is closed above at +infinity.
std::size_t bin_index(std::span<const std::uint64_t> bins, std::uint64_t d) {
    auto it = std::upper_bound(bins.begin(), bins.end(), d);
    return static_cast<std::size_t>(it - bins.begin()) - 1;
}

}  // namespace

RebinnedDistribution rebin(const DegreeDistribution& observed,
                           std::span<const std::uint64_t> model_bins) {
    if (model_bins.empty()) throw ParameterError("rebin requires at least one model bin");
    RebinnedDistribution r;
    r.bins.assign(model_bins.begin(), model_bins.end());
    r.counts.assign(model_bins.size(), 0);
    for (std::size_t i = 0; i < observed.bins.size(); ++i) {
        const std::uint64_t d = observed.bins[i];
        if (d < model_bins.front()) {
            throw ParameterError("observed degree " + std::to_string(d) +
                                 " lies below the first model bin " +
                                 std::to_string(model_bins.front()));
        }
        r.counts[bin_index(model_bins, d)] += observed.counts[i];
        r.source_n += observed.counts[i];
    }
    return r;
}

const char* to_string(Verdict v) {
    return v == Verdict::consistent ? "consistent" : "inconsistent";
}

FitReport compare(const RebinnedDistribution& rebinned, const PowerLawModel& model,
                  double ratio_threshold, double flag_factor) {
    if (rebinned.bins != model.bins) {
        throw ParameterError("compare requires the rebinned and model bin sets to match");
    }
    FitReport rep;
    rep.per_bin.reserve(model.bins.size());
    for (std::size_t i = 0; i < model.bins.size(); ++i) {
        BinComparison bc{};
        bc.degree = model.bins[i];
        bc.rebinned = rebinned.counts[i];
        bc.model = model.counts[i];
        bc.defined = bc.rebinned > 0 && bc.model > 0;
        if (bc.defined) {
            bc.log10_ratio = std::log10(static_cast<double>(bc.rebinned) /
                                        static_cast<double>(bc.model));
            rep.any_overlap = true;
            rep.divergence = std::max(rep.divergence, std::abs(bc.log10_ratio));
        }
        if (static_cast<double>(bc.rebinned) >
            flag_factor * static_cast<double>(bc.model)) {
            rep.flagged_degrees.push_back(bc.degree);
        }
        rep.per_bin.push_back(bc);
    }
    rep.verdict = (rep.any_overlap && rep.divergence > ratio_threshold)
                      ? Verdict::inconsistent
                      : Verdict::consistent;
    return rep;
}

std::vector<std::uint32_t> filter_high_degree(std::span<const std::uint64_t> degrees,
                                              const PowerLawModel& model,
                                              const RebinnedDistribution& rebinned,
                                              double factor) {
    if (!(factor > 1.0)) throw ParameterError("filter factor must exceed 1");
    if (rebinned.bins != model.bins) {
        throw ParameterError("filter requires the rebinned and model bin sets to match");
    }
    std::vector<bool> bin_flagged(model.bins.size(), false);
    for (std::size_t i = 0; i < model.bins.size(); ++i) {
        bin_flagged[i] = static_cast<double>(rebinned.counts[i]) >
                         factor * static_cast<double>(model.counts[i]);
    }
    const std::uint64_t d_max = model.d_max();
    std::vector<std::uint32_t> flagged;
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        const std::uint64_t d = degrees[v];
        if (d == 0) continue;
        bool flag = d > d_max;
        if (!flag && d >= model.bins.front()) {
            flag = bin_flagged[bin_index(model.bins, d)];
        }
        if (flag) flagged.push_back(static_cast<std::uint32_t>(v));
    }
    return flagged;
}

}  // namespace plawbg

#include "plawbg/degree.hpp"

#include <map>

#include "plawbg/errors.hpp"

namespace plawbg {

const char* to_string(Direction d) {
    return d == Direction::in ? "in" : "out";
}

std::vector<std::uint64_t> degree_vector(const AdjacencyMatrix& a, Direction direction) {
    std::vector<std::uint64_t> degrees(a.n_vertices(), 0);
    for (const auto& [key, mult] : a.entries()) {
        const std::uint32_t v = (direction == Direction::out) ? key.first : key.second;
        degrees[v] += mult;
    }
    return degrees;
}

DegreeDistribution degree_distribution(std::span<const std::uint64_t> degrees,
                                       Direction direction) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t d : degrees) {
        if (d > 0) ++hist[d];
    }
    if (hist.empty()) {
        throw EstimatorError("empty degree distribution: no vertex has nonzero degree");
    }
    DegreeDistribution dist;
    dist.direction = direction;
    dist.bins.reserve(hist.size());
    dist.counts.reserve(hist.size());
    for (const auto& [d, c] : hist) {
        dist.bins.push_back(d);
        dist.counts.push_back(c);
    }
    return dist;
}

DistributionSummary summarize(const DegreeDistribution& dist) {
    DistributionSummary s{};
    for (std::size_t i = 0; i < dist.bins.size(); ++i) {
        s.n_vertices += dist.counts[i];
        s.degree_mass += dist.counts[i] * dist.bins[i];
        if (dist.bins[i] == 1) s.n_d1 = dist.counts[i];
    }
    s.d_max = dist.bins.empty() ? 0 : dist.bins.back();
    s.n_bins = dist.bins.size();
    return s;
}

}  // namespace plawbg

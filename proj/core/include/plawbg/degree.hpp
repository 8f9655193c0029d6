#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plawbg/adjacency.hpp"

namespace plawbg {

enum class Direction { in, out };

const char* to_string(Direction d);

/// Per-vertex degree: out-degree of v is the row sum of A, in-degree the
/// column sum. Vertices absent from all entries have degree 0.
std::vector<std::uint64_t> degree_vector(const AdjacencyMatrix& a, Direction direction);

/// Exact-binned degree distribution: one bin per distinct nonzero degree,
/// bins strictly ascending, counts >= 1. Zero-degree vertices are excluded.
struct DegreeDistribution {
    std::vector<std::uint64_t> bins;
    std::vector<std::uint64_t> counts;
    Direction direction = Direction::out;
};

/// Throws EstimatorError if no vertex has nonzero degree.
DegreeDistribution degree_distribution(std::span<const std::uint64_t> degrees,
                                       Direction direction);

struct DistributionSummary {
    std::uint64_t n_vertices;   // N  = sum of counts
    std::uint64_t degree_mass;  // M  = sum of counts * bins
    std::uint64_t d_max;        // largest degree present
    std::uint64_t n_d1;         // count at degree 1, 0 if absent
    std::uint64_t n_bins;       // N_d
};

DistributionSummary summarize(const DegreeDistribution& dist);

}  // namespace plawbg

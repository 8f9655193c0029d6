#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plawbg/adjacency.hpp"
#include "plawbg/degree.hpp"
#include "plawbg/model.hpp"
#include "plawbg/rebin.hpp"

namespace plawbg {

struct PipelineOptions {
    Direction direction = Direction::out;
    FitConfig fit;
    double ratio_threshold = 0.5;
    double filter_factor = 2.0;
};

/// Full estimate -> fit -> rebin -> compare run over one adjacency matrix.
struct PipelineResult {
    std::vector<std::uint64_t> degrees;  // per-vertex, chosen direction
    DegreeDistribution observed;
    DistributionSummary summary;
    FitResult fit;
    RebinnedDistribution rebinned;
    FitReport report;
    std::vector<std::uint32_t> flagged_vertices;
};

PipelineResult run_pipeline(const AdjacencyMatrix& a, const PipelineOptions& opts);

/// report.json body; field names are part of the CLI contract (see README).
std::string render_report_json(const PipelineResult& r, const PipelineOptions& opts);

/// bins.csv body: header `degree,observed_count,rebinned_count,model_count`,
/// one row per degree in the union of observed degrees and model bins.
std::string render_bins_csv(const PipelineResult& r);

/// flagged.txt body: vertex ids sorted lexicographically, one per line.
std::string render_flagged(const PipelineResult& r,
                           const std::vector<std::string>& vertex_ids);

}  // namespace plawbg

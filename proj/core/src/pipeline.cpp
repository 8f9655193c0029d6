#include "plawbg/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace plawbg {

PipelineResult run_pipeline(const AdjacencyMatrix& a, const PipelineOptions& opts) {
    PipelineResult r;
    r.degrees = degree_vector(a, opts.direction);
    r.observed = degree_distribution(r.degrees, opts.direction);
    r.summary = summarize(r.observed);
    r.fit = fit_perfect_power_law(r.observed, opts.fit);
    r.rebinned = rebin(r.observed, r.fit.model.bins);
    r.report = compare(r.rebinned, r.fit.model, opts.ratio_threshold, opts.filter_factor);
    r.flagged_vertices =
        filter_high_degree(r.degrees, r.fit.model, r.rebinned, opts.filter_factor);
    return r;
}

std::string render_report_json(const PipelineResult& r, const PipelineOptions& opts) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["direction"] = to_string(opts.direction);
    doc["n_vertices"] = r.summary.n_vertices;
    doc["degree_mass"] = r.summary.degree_mass;
    doc["d_max"] = r.summary.d_max;
    doc["alpha"] = r.fit.model.alpha;

    json model;
    model["scale_c"] = r.fit.model.scale_c;
    model["n_bins"] = r.fit.model.bins.size();
    model["bins"] = r.fit.model.bins;
    model["counts"] = r.fit.model.counts;
    model["model_n"] = r.fit.model.model_n;
    model["model_m"] = r.fit.model.model_m;
    doc["model"] = std::move(model);

    json fit;
    fit["optimizer"] = opts.fit.optimizer == OptimizerKind::exhaustive ? "exhaustive"
                                                                       : "annealing";
    fit["seed"] = opts.fit.seed;
    fit["achieved_objective"] = r.fit.achieved_objective;
    fit["evaluations"] = r.fit.evaluations;
    doc["fit"] = std::move(fit);

    json per_bin = json::array();
    for (const auto& bc : r.report.per_bin) {
        json row;
        row["degree"] = bc.degree;
        row["rebinned_count"] = bc.rebinned;
        row["model_count"] = bc.model;
        if (bc.defined) {
            row["log10_ratio"] = bc.log10_ratio;
        } else {
            row["log10_ratio"] = nullptr;
        }
        per_bin.push_back(std::move(row));
    }
    doc["per_bin"] = std::move(per_bin);
    doc["divergence"] = r.report.divergence;
    doc["any_overlap"] = r.report.any_overlap;
    doc["ratio_threshold"] = opts.ratio_threshold;
    doc["verdict"] = to_string(r.report.verdict);
    doc["filter_factor"] = opts.filter_factor;
    doc["flagged_degrees"] = r.report.flagged_degrees;
    doc["flagged_vertex_count"] = r.flagged_vertices.size();
    return doc.dump(2) + "\n";
}

std::string render_bins_csv(const PipelineResult& r) {
    // Row per degree in the union of observed degrees and model bins, so the
    // observed column sums back to n_vertices and degree-weighted mass.
    struct Row {
        std::uint64_t observed = 0;
        std::uint64_t rebinned = 0;
        std::uint64_t model = 0;
    };
    std::map<std::uint64_t, Row> rows;
    for (std::size_t i = 0; i < r.observed.bins.size(); ++i) {
        rows[r.observed.bins[i]].observed = r.observed.counts[i];
    }
    for (std::size_t i = 0; i < r.fit.model.bins.size(); ++i) {
        auto& row = rows[r.fit.model.bins[i]];
        row.rebinned = r.rebinned.counts[i];
        row.model = r.fit.model.counts[i];
    }
    std::ostringstream out;
    out << "degree,observed_count,rebinned_count,model_count\n";
    for (const auto& [degree, row] : rows) {
        out << degree << ',' << row.observed << ',' << row.rebinned << ',' << row.model
            << '\n';
    }
    return out.str();
}

std::string render_flagged(const PipelineResult& r,
                           const std::vector<std::string>& vertex_ids) {
    std::vector<std::string> names;
    names.reserve(r.flagged_vertices.size());
    for (std::uint32_t v : r.flagged_vertices) {
        names.push_back(v < vertex_ids.size() ? vertex_ids[v] : std::to_string(v));
    }
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) {
        out += n;
        out += '\n';
    }
    return out;
}

}  // namespace plawbg

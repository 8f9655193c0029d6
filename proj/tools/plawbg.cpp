#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plawbg/errors.hpp"
#include "plawbg/io.hpp"
#include "plawbg/pipeline.hpp"
#include "plawbg/svg.hpp"
#include "plawbg/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitParam = 2;

struct CommonOpts {
    std::string input;
    std::string format = "edgelist";
    std::string direction = "out";
    std::string optimizer = "exhaustive";
    std::uint64_t seed = 0;
    std::uint32_t max_bins = 128;
    std::uint64_t budget = 1'000'000;
    double ratio_threshold = 0.5;
    double factor = 2.0;
    std::string out_dir = ".";
    std::vector<std::string> emit = {"json", "csv"};
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_emit) {
    cmd->add_option("--input", o.input, "input file")->required();
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"edgelist", "triples"}));
    cmd->add_option("--direction", o.direction, "degree direction")
        ->check(CLI::IsMember({"in", "out"}));
    cmd->add_option("--optimizer", o.optimizer, "fit optimizer")
        ->check(CLI::IsMember({"exhaustive", "annealing"}));
    cmd->add_option("--seed", o.seed, "optimizer seed");
    cmd->add_option("--max-bins", o.max_bins, "upper bound on model bin count");
    cmd->add_option("--budget", o.budget, "candidate evaluation budget");
    cmd->add_option("--ratio-threshold", o.ratio_threshold,
                    "max |log10(rebinned/model)| still called consistent");
    cmd->add_option("--factor", o.factor, "high-degree filter factor");
    cmd->add_option("--out-dir", o.out_dir, "output directory");
    if (with_emit) {
        cmd->add_option("--emit", o.emit, "artifacts to write")
            ->delimiter(',')
            ->check(CLI::IsMember({"json", "csv", "svg"}));
    }
}

struct LoadedInput {
    plawbg::AdjacencyMatrix adjacency{0, {}};
    std::vector<std::string> vertex_ids;
};

LoadedInput load_input(const CommonOpts& o) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw plawbg::IoError("cannot open " + o.input);
    if (o.format == "edgelist") {
        auto interned = plawbg::adjacency_from_edge_list(plawbg::parse_edge_list(in));
        return {std::move(interned.adjacency), std::move(interned.vertex_ids)};
    }
    auto parsed = plawbg::parse_triples(in);
    return {plawbg::incidence_to_adjacency(parsed.matrix), std::move(parsed.vertex_ids)};
}

plawbg::PipelineOptions pipeline_options(const CommonOpts& o) {
    plawbg::PipelineOptions p;
    p.direction = o.direction == "in" ? plawbg::Direction::in : plawbg::Direction::out;
    p.fit.optimizer = o.optimizer == "annealing" ? plawbg::OptimizerKind::annealing
                                                 : plawbg::OptimizerKind::exhaustive;
    p.fit.seed = o.seed;
    p.fit.max_bins = o.max_bins;
    p.fit.iteration_budget = o.budget;
    p.ratio_threshold = o.ratio_threshold;
    p.filter_factor = o.factor;
    return p;
}

fs::path prepare_out_dir(const CommonOpts& o) {
    fs::path dir(o.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw plawbg::IoError("cannot create output directory " + dir.string());
    return dir;
}

// Degenerate inputs (no degree-1 vertices, d_max = 1) cannot be fit, but the
// observed summary is still worth reporting. Writes a reduced report.json and
// rethrows so the exit code stays 2.
void write_summary_only_report(const CommonOpts& o, const plawbg::AdjacencyMatrix& a,
                               const std::string& error) {
    const auto opts = pipeline_options(o);
    const auto degrees = plawbg::degree_vector(a, opts.direction);
    const auto observed = plawbg::degree_distribution(degrees, opts.direction);
    const auto summary = plawbg::summarize(observed);
    std::ostringstream body;
    body << "{\n"
         << "  \"direction\": \"" << o.direction << "\",\n"
         << "  \"n_vertices\": " << summary.n_vertices << ",\n"
         << "  \"degree_mass\": " << summary.degree_mass << ",\n"
         << "  \"d_max\": " << summary.d_max << ",\n"
         << "  \"error\": \"" << error << "\"\n"
         << "}\n";
    plawbg::write_file_atomic(prepare_out_dir(o) / "report.json", body.str());
}

int run_fit(const CommonOpts& o) {
    const auto input = load_input(o);
    const auto opts = pipeline_options(o);
    plawbg::PipelineResult result;
    try {
        result = plawbg::run_pipeline(input.adjacency, opts);
    } catch (const plawbg::EstimatorError& e) {
        write_summary_only_report(o, input.adjacency, e.what());
        throw;
    }
    const auto dir = prepare_out_dir(o);

    const std::set<std::string> emit(o.emit.begin(), o.emit.end());
    if (emit.count("json")) {
        plawbg::write_file_atomic(dir / "report.json",
                                  plawbg::render_report_json(result, opts));
    }
    if (emit.count("csv")) {
        plawbg::write_file_atomic(dir / "bins.csv", plawbg::render_bins_csv(result));
    }
    if (emit.count("svg")) {
        plawbg::write_file_atomic(dir / "fit.svg", plawbg::render_fit_svg(result));
    }
    std::cout << "verdict: " << plawbg::to_string(result.report.verdict)
              << " (divergence " << result.report.divergence << ")\n";
    return kExitOk;
}

int run_filter(const CommonOpts& o) {
    const auto input = load_input(o);
    const auto result = plawbg::run_pipeline(input.adjacency, pipeline_options(o));
    const auto dir = prepare_out_dir(o);
    plawbg::write_file_atomic(dir / "flagged.txt",
                              plawbg::render_flagged(result, input.vertex_ids));
    std::cout << result.flagged_vertices.size() << " vertices flagged\n";
    return kExitOk;
}

int run_rebin(const CommonOpts& o) {
    const auto input = load_input(o);
    const auto result = plawbg::run_pipeline(input.adjacency, pipeline_options(o));
    const auto dir = prepare_out_dir(o);
    plawbg::write_file_atomic(dir / "bins.csv", plawbg::render_bins_csv(result));
    std::cout << result.rebinned.bins.size() << " model bins\n";
    return kExitOk;
}

struct SynthOpts {
    std::string kind = "power_law";
    double exponent = 2.0;
    double mu = 0.0;
    double sigma = 1.0;
    std::uint64_t n = 1000;
    std::uint64_t x_min = 1;
    std::uint64_t seed = 0;
    std::string output = "synth_edges.tsv";
};

int run_synth(const SynthOpts& o) {
    plawbg::GeneratorSpec spec;
    spec.kind = o.kind == "log_normal" ? plawbg::GeneratorKind::log_normal
                                       : plawbg::GeneratorKind::power_law;
    spec.exponent = o.exponent;
    spec.mu = o.mu;
    spec.sigma = o.sigma;
    spec.n_samples = o.n;
    spec.x_min = o.x_min;
    spec.seed = o.seed;

    const auto incidence = plawbg::sample_graph(spec);
    const auto adjacency = plawbg::incidence_to_adjacency(incidence);
    std::ostringstream body;
    for (const auto& [key, mult] : adjacency.entries()) {
        for (std::uint64_t i = 0; i < mult; ++i) {
            body << key.first << '\t' << key.second << '\n';
        }
    }
    plawbg::write_file_atomic(fs::path(o.output), body.str());
    std::cout << "wrote " << o.output << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-law background fitting for graph degree distributions"};
    app.require_subcommand(1);

    CommonOpts fit_opts, filter_opts, rebin_opts;
    SynthOpts synth_opts;

    auto* fit = app.add_subcommand("fit", "fit a background model and report fit quality");
    add_common_flags(fit, fit_opts, true);
    auto* filter = app.add_subcommand("filter", "list vertices above the background");
    add_common_flags(filter, filter_opts, false);
    auto* rebin = app.add_subcommand("rebin", "rebin observed counts onto model bins");
    add_common_flags(rebin, rebin_opts, false);

    auto* synth = app.add_subcommand("synth", "generate a synthetic edge list");
    synth->add_option("--kind", synth_opts.kind, "degree model")
        ->check(CLI::IsMember({"power_law", "log_normal"}));
    synth->add_option("--exponent", synth_opts.exponent, "power-law exponent (> 1)");
    synth->add_option("--mu", synth_opts.mu, "log-normal mu");
    synth->add_option("--sigma", synth_opts.sigma, "log-normal sigma");
    synth->add_option("--n", synth_opts.n, "number of vertices");
    synth->add_option("--x-min", synth_opts.x_min, "minimum degree");
    synth->add_option("--seed", synth_opts.seed, "generator seed");
    synth->add_option("--output", synth_opts.output, "edge list path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParam;
    }

    try {
        if (fit->parsed()) return run_fit(fit_opts);
        if (filter->parsed()) return run_filter(filter_opts);
        if (rebin->parsed()) return run_rebin(rebin_opts);
        return run_synth(synth_opts);
    } catch (const plawbg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const plawbg::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const plawbg::EstimatorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    } catch (const plawbg::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    } catch (const plawbg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}

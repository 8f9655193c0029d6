#include <numeric>
#include <sstream>

#include "doctest.h"
#include "plawbg/pipeline.hpp"
#include "plawbg/svg.hpp"
#include "plawbg/synth.hpp"

using namespace plawbg;

namespace {

PipelineResult star_result(PipelineOptions opts = {}) {
    // Hub 0 with 50 out-edges, each leaf pointing back at the hub.
    AdjacencyMatrix::EntryMap entries;
    for (std::uint32_t leaf = 1; leaf <= 50; ++leaf) {
        entries[{0, leaf}] = 1;
        entries[{leaf, 0}] = 1;
    }
    return run_pipeline(AdjacencyMatrix(51, std::move(entries)), opts);
}

}  // namespace

TEST_CASE("pipeline on the two-way star") {
    const auto r = star_result();
    CHECK(r.summary.n_vertices == 51);
    CHECK(r.summary.degree_mass == 100);
    CHECK(r.summary.d_max == 50);
    CHECK(r.flagged_vertices == std::vector<std::uint32_t>{0});
    CHECK(std::accumulate(r.rebinned.counts.begin(), r.rebinned.counts.end(), 0ull) ==
          r.summary.n_vertices);
}

TEST_CASE("report json carries the summary and verdict") {
    const auto r = star_result();
    const auto json = render_report_json(r, PipelineOptions{});
    CHECK(json.find("\"n_vertices\": 51") != std::string::npos);
    CHECK(json.find("\"degree_mass\": 100") != std::string::npos);
    CHECK(json.find("\"d_max\": 50") != std::string::npos);
    CHECK(json.find("\"verdict\"") != std::string::npos);
    CHECK(json.find("\"alpha\"") != std::string::npos);
    CHECK(json.find("\"achieved_objective\"") != std::string::npos);
    CHECK(json.find("\"flagged_degrees\"") != std::string::npos);
}

TEST_CASE("bins csv columns sum back to N and M") {
    GeneratorSpec spec;
    spec.exponent = 1.9;
    spec.n_samples = 3000;
    spec.seed = 14;
    const auto a = incidence_to_adjacency(sample_graph(spec));
    const auto r = run_pipeline(a, PipelineOptions{});
    const auto csv = render_bins_csv(r);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "degree,observed_count,rebinned_count,model_count");
    std::uint64_t n = 0, m = 0, reb = 0;
    std::uint64_t prev_degree = 0;
    bool first = true;
    while (std::getline(in, line)) {
        std::uint64_t degree, obs, rb, mdl;
        REQUIRE(std::sscanf(line.c_str(), "%lu,%lu,%lu,%lu", &degree, &obs, &rb, &mdl) == 4);
        if (!first) REQUIRE(degree > prev_degree);
        first = false;
        prev_degree = degree;
        n += obs;
        m += obs * degree;
        reb += rb;
    }
    CHECK(n == r.summary.n_vertices);
    CHECK(m == r.summary.degree_mass);
    CHECK(reb == r.summary.n_vertices);
}

TEST_CASE("flagged rendering sorts ids lexicographically") {
    auto r = star_result();
    r.flagged_vertices = {2, 0, 1};
    const auto body = render_flagged(r, {"zeta", "alpha", "mid"});
    CHECK(body == "alpha\nmid\nzeta\n");
    // Without an id table, indices render as decimal strings.
    const auto raw = render_flagged(r, {});
    CHECK(raw == "0\n1\n2\n");
}

TEST_CASE("svg output contains all three series") {
    const auto r = star_result();
    const auto svg = render_fit_svg(r);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("observed") != std::string::npos);
    CHECK(svg.find("model") != std::string::npos);
    CHECK(svg.find("rebinned") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("in-direction pipeline runs on the star") {
    PipelineOptions opts;
    opts.direction = Direction::in;
    const auto r = star_result(opts);
    // In-degrees mirror the out-degrees on this graph.
    CHECK(r.summary.n_vertices == 51);
    CHECK(r.summary.degree_mass == 100);
    CHECK(r.flagged_vertices == std::vector<std::uint32_t>{0});
}

#include <cmath>
#include <limits>

#include "doctest.h"
#include "plawbg/degree.hpp"
#include "plawbg/errors.hpp"
#include "plawbg/model.hpp"
#include "plawbg/rng.hpp"
#include "plawbg/synth.hpp"

using namespace plawbg;

namespace {

DegreeDistribution make_dist(std::vector<std::uint64_t> bins,
                             std::vector<std::uint64_t> counts) {
    DegreeDistribution d;
    d.bins = std::move(bins);
    d.counts = std::move(counts);
    return d;
}

// Perfect power-law distribution with n(1) = c on geometric bins, so the
// Eq.-1 estimate reproduces the generating exponent exactly.
DegreeDistribution perfect_dist(double c, std::uint64_t d_max, std::uint32_t n_bins) {
    const auto bins = geometric_bins(n_bins, d_max);
    const double alpha = std::log(c) / std::log(static_cast<double>(bins.back()));
    std::vector<std::uint64_t> counts;
    for (auto b : bins) {
        counts.push_back(static_cast<std::uint64_t>(std::max<long long>(
            1, std::llround(c * std::pow(static_cast<double>(b), -alpha)))));
    }
    return make_dist(bins, std::move(counts));
}

DegreeDistribution sampled_dist(std::uint64_t seed, std::uint64_t n = 300,
                                double exponent = 2.0) {
    GeneratorSpec spec;
    spec.exponent = exponent;
    spec.n_samples = n;
    spec.seed = seed;
    return degree_distribution(sample_degrees(spec), Direction::out);
}

// Independent full enumeration over the same candidate grid, written as a
// straight transcription of the search-space definition.
struct OracleBest {
    double obj = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> bins;
    std::vector<std::uint64_t> counts;
};

OracleBest enumerate_all(const DegreeDistribution& dist, std::uint32_t max_bins) {
    const auto s = summarize(dist);
    const double alpha =
        std::log(static_cast<double>(s.n_d1)) / std::log(static_cast<double>(s.d_max));
    OracleBest best;
    for (std::uint32_t nd = 2; nd <= max_bins; ++nd) {
        for (int k = -2; k <= 2; ++k) {
            const auto dm = std::max<std::uint64_t>(
                2, static_cast<std::uint64_t>(
                       std::llround(static_cast<double>(s.d_max) * std::pow(2.0, k))));
            const auto bins = geometric_bins(nd, dm);
            if (bins.size() < 2) continue;
            for (int j = 0; j < 64; ++j) {
                const double scale =
                    std::exp(std::log(4.0 * static_cast<double>(s.n_d1)) * j / 63.0);
                std::vector<std::uint64_t> counts;
                double n_sum = 0, m_sum = 0;
                for (auto b : bins) {
                    const auto cnt = std::max<long long>(
                        1, std::llround(scale * std::pow(static_cast<double>(b), -alpha)));
                    counts.push_back(static_cast<std::uint64_t>(cnt));
                    n_sum += static_cast<double>(cnt);
                    m_sum += static_cast<double>(cnt) * static_cast<double>(b);
                }
                const double obj =
                    std::sqrt(std::pow(static_cast<double>(s.n_vertices) - n_sum, 2) +
                              std::pow(static_cast<double>(s.degree_mass) - m_sum, 2));
                if (obj < best.obj) {
                    best.obj = obj;
                    best.bins = bins;
                    best.counts = counts;
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("alpha estimate on analytic cases") {
    CHECK(estimate_alpha(make_dist({1, 100}, {100, 1})) == doctest::Approx(1.0));
    CHECK(estimate_alpha(make_dist({1, 50}, {1, 1})) == doctest::Approx(0.0));
}

TEST_CASE("alpha estimate is exactly 1 when n(1) = d_max = 10^k") {
    for (int k = 1; k <= 4; ++k) {
        const auto p = static_cast<std::uint64_t>(std::pow(10.0, k));
        const auto a = estimate_alpha(make_dist({1, p}, {p, 1}));
        CHECK(std::abs(a - 1.0) <= 1e-12);
    }
}

TEST_CASE("alpha estimate preconditions") {
    CHECK_THROWS_AS(estimate_alpha(make_dist({1}, {5})), EstimatorError);
    CHECK_THROWS_AS(estimate_alpha(make_dist({2, 9}, {4, 1})), EstimatorError);
}

TEST_CASE("objective arithmetic") {
    const std::vector<std::uint64_t> bins{1, 2};
    const std::vector<std::uint64_t> counts{3, 2};
    // N = 5, M = 7
    CHECK(objective(bins, counts, 5, 7) == doctest::Approx(0.0));
    // Sums off by +3 in N and -4 in M.
    CHECK(objective(bins, counts, 2, 11) == doctest::Approx(5.0));
}

TEST_CASE("objective equals a direct recomputation") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint64_t> bins, counts;
        std::uint64_t b = 0;
        for (int i = 0; i < 5; ++i) {
            b += 1 + rng.next_below(4);
            bins.push_back(b);
            counts.push_back(1 + rng.next_below(30));
        }
        const auto n_obs = rng.next_below(200);
        const auto m_obs = rng.next_below(900);
        long double n_sum = 0, m_sum = 0;
        for (std::size_t i = 0; i < bins.size(); ++i) {
            n_sum += counts[i];
            m_sum += counts[i] * bins[i];
        }
        const double want = static_cast<double>(
            std::sqrt((n_obs - n_sum) * (n_obs - n_sum) + (m_obs - m_sum) * (m_obs - m_sum)));
        CHECK(objective(bins, counts, n_obs, m_obs) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("geometric bins") {
    CHECK(geometric_bins(2, 10) == std::vector<std::uint64_t>{1, 10});
    CHECK(geometric_bins(4, 8) == std::vector<std::uint64_t>{1, 2, 4, 8});
    // Rounding collapses nearby values; duplicates are merged.
    const auto b = geometric_bins(10, 5);
    CHECK(b.front() == 1);
    CHECK(b.back() == 5);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
}

TEST_CASE("fit fixed point on the documented example") {
    const auto d = make_dist({1, 10}, {10, 1});
    const auto r = fit_perfect_power_law(d, FitConfig{});
    CHECK(r.achieved_objective == 0.0);
    CHECK(r.model.model_n == 11);
    CHECK(r.model.model_m == 20);
}

TEST_CASE("fit fixed points across scales and bin counts") {
    for (double c : {2.0, 10.0, 16.0, 32.0, 128.0, 4096.0}) {
        for (std::uint64_t dm : {5ull, 10ull, 30ull, 100ull}) {
            for (std::uint32_t nd : {2u, 3u, 5u, 8u}) {
                const auto d = perfect_dist(c, dm, nd);
                const auto s = summarize(d);
                const auto r = fit_perfect_power_law(d, FitConfig{});
                REQUIRE(r.achieved_objective == 0.0);
                REQUIRE(r.model.model_n == s.n_vertices);
                REQUIRE(r.model.model_m == s.degree_mass);
            }
        }
    }
}

TEST_CASE("exhaustive fit equals the full-enumeration oracle") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto d = sampled_dist(seed);
        FitConfig cfg;
        cfg.max_bins = 6;
        const auto r = fit_perfect_power_law(d, cfg);
        const auto want = enumerate_all(d, 6);
        REQUIRE(r.achieved_objective == want.obj);
        REQUIRE(r.model.bins == want.bins);
        REQUIRE(r.model.counts == want.counts);
    }
}

TEST_CASE("fit is deterministic") {
    const auto d = sampled_dist(3);
    for (auto opt : {OptimizerKind::exhaustive, OptimizerKind::annealing}) {
        FitConfig cfg;
        cfg.optimizer = opt;
        cfg.seed = 9;
        cfg.iteration_budget = 20000;
        const auto a = fit_perfect_power_law(d, cfg);
        const auto b = fit_perfect_power_law(d, cfg);
        CHECK(a.achieved_objective == b.achieved_objective);
        CHECK(a.model.bins == b.model.bins);
        CHECK(a.model.counts == b.model.counts);
        CHECK(a.model.scale_c == b.model.scale_c);
    }
}

TEST_CASE("annealing never beats exhaustive on the shared grid") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto d = sampled_dist(seed);
        FitConfig ex;
        ex.max_bins = 32;
        const auto best = fit_perfect_power_law(d, ex);
        FitConfig an = ex;
        an.optimizer = OptimizerKind::annealing;
        an.seed = seed * 13;
        an.iteration_budget = 20000;
        const auto walk = fit_perfect_power_law(d, an);
        CHECK(walk.achieved_objective >= best.achieved_objective);
    }
}

TEST_CASE("enlarging the search never hurts the exhaustive fit") {
    const auto d = sampled_dist(4, 2000, 1.8);
    FitConfig cfg;
    double prev = std::numeric_limits<double>::infinity();
    for (std::uint32_t mb : {8u, 16u, 32u, 64u, 128u}) {
        cfg.max_bins = mb;
        const auto r = fit_perfect_power_law(d, cfg);
        CHECK(r.achieved_objective <= prev);
        prev = r.achieved_objective;
    }
    cfg.max_bins = 128;
    double prev_budget = std::numeric_limits<double>::infinity();
    for (std::uint64_t budget : {500ull, 5000ull, 50000ull, 1000000ull}) {
        cfg.iteration_budget = budget;
        const auto r = fit_perfect_power_law(d, cfg);
        CHECK(r.achieved_objective <= prev_budget);
        CHECK(r.evaluations <= budget);
        prev_budget = r.achieved_objective;
    }
}

TEST_CASE("returned models are admissible") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto d = sampled_dist(seed);
        const auto r = fit_perfect_power_law(d, FitConfig{});
        CHECK(r.model.alpha > 0.0);
        CHECK(r.model.d_max() > 1);
        CHECK(r.model.bins.size() > 1);
        for (std::size_t i = 0; i < r.model.bins.size(); ++i) {
            CHECK(r.model.counts[i] >= 1);
        }
    }
}

TEST_CASE("degenerate inputs are rejected") {
    // alpha would be 0: single degree-1 vertex.
    CHECK_THROWS_AS(fit_perfect_power_law(make_dist({1, 50}, {1, 1}), FitConfig{}),
                    EstimatorError);
    FitConfig bad;
    bad.max_bins = 1;
    CHECK_THROWS_AS(fit_perfect_power_law(make_dist({1, 10}, {10, 1}), bad),
                    ParameterError);
}

TEST_CASE("regression: relative objective on 10k samples at exponent 1.8") {
    const auto d = sampled_dist(3, 10000, 1.8);
    const auto s = summarize(d);
    const auto r = fit_perfect_power_law(d, FitConfig{});
    const double norm = std::hypot(static_cast<double>(s.n_vertices),
                                   static_cast<double>(s.degree_mass));
    CHECK(r.achieved_objective <= 0.05 * norm);
}

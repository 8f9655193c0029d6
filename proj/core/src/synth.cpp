#include "plawbg/synth.hpp"

#include <algorithm>
#include <cmath>

#include "plawbg/errors.hpp"
#include "plawbg/rng.hpp"

namespace plawbg {

namespace {

double partition_sum(double exponent, std::uint64_t x_min, std::uint64_t cap) {
    double z = 0.0;
    for (std::uint64_t d = x_min; d <= cap; ++d) {
        z += std::pow(static_cast<double>(d), -exponent);
    }
    return z;
}

void validate(const GeneratorSpec& spec) {
    if (spec.n_samples < 1) throw ParameterError("n_samples must be >= 1");
    if (spec.x_min < 1) throw ParameterError("x_min must be >= 1");
    if (spec.kind == GeneratorKind::power_law && !(spec.exponent > 1.0)) {
        throw ParameterError("power-law exponent must exceed 1");
    }
    if (spec.kind == GeneratorKind::log_normal && !(spec.sigma > 0.0)) {
        throw ParameterError("log-normal sigma must be positive");
    }
}

}  // namespace

std::uint64_t power_law_support_cap(double exponent, std::uint64_t n_samples,
                                    std::uint64_t x_min) {
    // Fixed point of n * D^-a / Z(D) = 1: the expected count at the cap is
    // about one sample, so the observed maximum tracks the cap.
    const double n = static_cast<double>(n_samples);
    std::uint64_t cap = std::max<std::uint64_t>(
        x_min + 1,
        static_cast<std::uint64_t>(std::llround(
            std::pow(n, 1.0 / exponent) * static_cast<double>(x_min))));
    for (int iter = 0; iter < 60; ++iter) {
        const double z = partition_sum(exponent, x_min, cap);
        const std::uint64_t next = std::max<std::uint64_t>(
            x_min + 1,
            static_cast<std::uint64_t>(std::llround(std::pow(n / z, 1.0 / exponent))));
        if (next == cap) break;
        cap = next;
    }
    return cap;
}

std::vector<std::uint64_t> sample_degrees(const GeneratorSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    std::vector<std::uint64_t> out;
    out.reserve(spec.n_samples);

    if (spec.kind == GeneratorKind::log_normal) {
        for (std::uint64_t i = 0; i < spec.n_samples; ++i) {
            const double x = std::exp(spec.mu + spec.sigma * rng.next_normal());
            const auto d = static_cast<std::uint64_t>(std::max<long long>(1, std::llround(x)));
            out.push_back(std::max(d, spec.x_min));
        }
        return out;
    }

    const std::uint64_t cap = power_law_support_cap(spec.exponent, spec.n_samples, spec.x_min);
    std::vector<double> cdf;
    cdf.reserve(cap - spec.x_min + 1);
    double acc = 0.0;
    for (std::uint64_t d = spec.x_min; d <= cap; ++d) {
        acc += std::pow(static_cast<double>(d), -spec.exponent);
        cdf.push_back(acc);
    }
    for (double& v : cdf) v /= acc;

    for (std::uint64_t i = 0; i < spec.n_samples; ++i) {
        const double u = rng.next_unit();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cdf.begin(),
                                     static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        out.push_back(spec.x_min + idx);
    }
    return out;
}

IncidenceMatrix sample_graph(const GeneratorSpec& spec) {
    const auto targets = sample_degrees(spec);
    const auto n_vertices = static_cast<std::uint32_t>(targets.size());

    std::uint64_t n_edges64 = 0;
    for (std::uint64_t t : targets) n_edges64 += t;
    if (n_edges64 > 0xffffffffULL) throw ParameterError("requested graph is too large");
    const auto n_edges = static_cast<std::uint32_t>(n_edges64);

    // Destinations come from a separate stream so changing the degree model
    // does not reshuffle the wiring.
    Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<IncidenceEntry> entries;
    entries.reserve(2 * static_cast<std::size_t>(n_edges));
    std::uint32_t edge = 0;
    for (std::uint32_t v = 0; v < n_vertices; ++v) {
        for (std::uint64_t t = 0; t < targets[v]; ++t) {
            const auto dst = static_cast<std::uint32_t>(rng.next_below(n_vertices));
            entries.push_back({edge, v, -1});
            entries.push_back({edge, dst, +1});
            ++edge;
        }
    }
    return IncidenceMatrix(n_edges, n_vertices, std::move(entries));
}

}  // namespace plawbg

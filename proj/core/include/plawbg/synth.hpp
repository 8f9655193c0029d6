#pragma once

#include <cstdint>
#include <vector>

#include "plawbg/incidence.hpp"

namespace plawbg {

enum class GeneratorKind { power_law, log_normal };

/// Seeded synthetic degree generator. The PRNG is std::mt19937_64 with
/// uniform doubles derived as (x >> 11) * 2^-53, so output is bit-identical
/// for a given seed on any platform.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::power_law;
    double exponent = 2.0;  // power_law, requires > 1
    double mu = 0.0;        // log_normal
    double sigma = 1.0;     // log_normal
    std::uint64_t n_samples = 1;
    std::uint64_t x_min = 1;
    std::uint64_t seed = 0;
};

/// power_law: inverse-CDF draw from the discrete distribution
/// p(d) proportional to d^-exponent on [x_min, cap], where cap is chosen so
/// that the expected count at cap is about one sample. log_normal:
/// round(exp(normal(mu, sigma))) floored at x_min.
std::vector<std::uint64_t> sample_degrees(const GeneratorSpec& spec);

/// Support cap used by the power_law sampler for a given spec (exposed for
/// inspection and tests).
std::uint64_t power_law_support_cap(double exponent, std::uint64_t n_samples,
                                    std::uint64_t x_min);

/// Random graph: one vertex per sample, out-degree targets drawn from
/// sample_degrees, each edge's destination uniform over all vertices.
IncidenceMatrix sample_graph(const GeneratorSpec& spec);

}  // namespace plawbg

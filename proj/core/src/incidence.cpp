#include "plawbg/incidence.hpp"

#include <algorithm>
#include <string>

#include "plawbg/errors.hpp"

namespace plawbg {

namespace {

std::string describe(const IncidenceEntry& e) {
    return "(edge=" + std::to_string(e.edge) + ", vertex=" + std::to_string(e.vertex) +
           ", sign=" + std::to_string(static_cast<int>(e.sign)) + ")";
}

}  // namespace

IncidenceMatrix::IncidenceMatrix(std::uint32_t n_edges, std::uint32_t n_vertices,
                                 std::vector<IncidenceEntry> entries)
    : n_edges_(n_edges), n_vertices_(n_vertices), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.sign != -1 && e.sign != 1) {
            throw StructuralError("entry magnitude must be -1 or +1: " + describe(e));
        }
        if (e.edge >= n_edges_) {
            throw StructuralError("edge index out of range: " + describe(e));
        }
        if (e.vertex >= n_vertices_) {
            throw StructuralError("vertex index out of range: " + describe(e));
        }
    }

    // Sorted copy for duplicate and per-row checks.
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.edge, a.vertex, a.sign) < std::tie(b.edge, b.vertex, b.sign);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw StructuralError("duplicate entry: " + describe(sorted[i]));
        }
    }

    std::vector<std::uint8_t> neg_seen(n_edges_, 0), pos_seen(n_edges_, 0);
    for (const auto& e : entries_) {
        auto& seen = (e.sign < 0) ? neg_seen : pos_seen;
        if (seen[e.edge]) {
            throw StructuralError("edge row has more than one " +
                                  std::string(e.sign < 0 ? "-1" : "+1") +
                                  " entry: " + describe(e));
        }
        seen[e.edge] = 1;
    }
}

}  // namespace plawbg

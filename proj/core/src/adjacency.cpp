#include "plawbg/adjacency.hpp"

#include <optional>
#include <unordered_map>

#include "plawbg/errors.hpp"

namespace plawbg {

AdjacencyMatrix::AdjacencyMatrix(std::uint32_t n_vertices, EntryMap entries)
    : n_vertices_(n_vertices), entries_(std::move(entries)) {
    for (const auto& [key, mult] : entries_) {
        if (key.first >= n_vertices_ || key.second >= n_vertices_) {
            throw StructuralError("adjacency entry out of range: (" +
                                  std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
        }
        if (mult == 0) {
            throw StructuralError("zero multiplicity stored at (" +
                                  std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
        }
    }
}

std::uint64_t AdjacencyMatrix::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [key, mult] : entries_) total += mult;
    return total;
}

AdjacencyMatrix incidence_to_adjacency(const IncidenceMatrix& e) {
    // Per-edge source (-1) and destination (+1); either may be missing.
    std::vector<std::optional<std::uint32_t>> src(e.n_edges()), dst(e.n_edges());
    for (const auto& entry : e.entries()) {
        if (entry.sign < 0) {
            src[entry.edge] = entry.vertex;
        } else {
            dst[entry.edge] = entry.vertex;
        }
    }
    AdjacencyMatrix::EntryMap entries;
    for (std::uint32_t i = 0; i < e.n_edges(); ++i) {
        if (src[i] && dst[i]) {
            ++entries[{*src[i], *dst[i]}];
        }
    }
    return AdjacencyMatrix(e.n_vertices(), std::move(entries));
}

InternedAdjacency adjacency_from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::string> ids;
    auto intern = [&](const std::string& id) {
        auto [it, inserted] = index.try_emplace(id, static_cast<std::uint32_t>(ids.size()));
        if (inserted) ids.push_back(id);
        return it->second;
    };
    AdjacencyMatrix::EntryMap entries;
    for (const auto& [s, d] : pairs) {
        const std::uint32_t u = intern(s);
        const std::uint32_t v = intern(d);
        ++entries[{u, v}];
    }
    return {AdjacencyMatrix(static_cast<std::uint32_t>(ids.size()), std::move(entries)),
            std::move(ids)};
}

}  // namespace plawbg

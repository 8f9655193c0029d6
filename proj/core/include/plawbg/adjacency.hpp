#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plawbg/incidence.hpp"

namespace plawbg {

/// Sparse vertex x vertex matrix of directed edge multiplicities. Zero
/// entries are absent; stored multiplicities are always >= 1.
class AdjacencyMatrix {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;  // (source, destination)
    using EntryMap = std::map<Key, std::uint64_t>;

    explicit AdjacencyMatrix(std::uint32_t n_vertices, EntryMap entries = {});

    std::uint32_t n_vertices() const { return n_vertices_; }
    const EntryMap& entries() const { return entries_; }

    /// Sum of all multiplicities (= number of complete directed edges).
    std::uint64_t total_multiplicity() const;

private:
    std::uint32_t n_vertices_;
    EntryMap entries_;
};

/// A[u][v] = number of edges whose -1 entry is at u and +1 entry is at v.
/// Edges missing either sign contribute nothing.
AdjacencyMatrix incidence_to_adjacency(const IncidenceMatrix& e);

/// Edge-list ingestion: vertex ids interned in first-appearance order,
/// repeated pairs accumulate multiplicity.
struct InternedAdjacency {
    AdjacencyMatrix adjacency;
    std::vector<std::string> vertex_ids;  // index -> id
};

InternedAdjacency adjacency_from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace plawbg

#pragma once

#include <cstdint>
#include <vector>

namespace plawbg {

/// One signed entry of an incidence matrix. sign = -1 marks the vertex the
/// edge leaves, +1 the vertex it enters.
struct IncidenceEntry {
    std::uint32_t edge;
    std::uint32_t vertex;
    std::int8_t sign;

    friend bool operator==(const IncidenceEntry&, const IncidenceEntry&) = default;
};

/// Sparse signed edge x vertex matrix. Immutable after construction; the
/// constructor validates every invariant and throws StructuralError naming
/// the offending triple otherwise.
///
/// Invariants:
///  - every edge index < n_edges, every vertex index < n_vertices
///  - signs are exactly -1 or +1
///  - each edge row holds at most one -1 and at most one +1 entry
///    (self-loops appear as the same vertex holding both signs)
///  - no duplicate (edge, vertex, sign) triples
class IncidenceMatrix {
public:
    IncidenceMatrix(std::uint32_t n_edges, std::uint32_t n_vertices,
                    std::vector<IncidenceEntry> entries);

    std::uint32_t n_edges() const { return n_edges_; }
    std::uint32_t n_vertices() const { return n_vertices_; }
    const std::vector<IncidenceEntry>& entries() const { return entries_; }

private:
    std::uint32_t n_edges_;
    std::uint32_t n_vertices_;
    std::vector<IncidenceEntry> entries_;
};

}  // namespace plawbg

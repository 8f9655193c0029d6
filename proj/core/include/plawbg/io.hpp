#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "plawbg/incidence.hpp"

namespace plawbg {

/// Edge list: UTF-8, one `source<TAB>destination` pair per line, lines
/// starting with '#' skipped. Throws ParseError with the line number.
std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in);

/// Triples: `edge_index<TAB>vertex_id<TAB>sign`, sign in {-1, 1}. Vertex
/// ids are interned in first-appearance order; returns the matrix plus the
/// id table.
struct ParsedTriples {
    IncidenceMatrix matrix;
    std::vector<std::string> vertex_ids;
};

ParsedTriples parse_triples(std::istream& in);

/// Write-to-temp, rename-on-success; no partial file is left behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace plawbg

#include "plawbg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "plawbg/errors.hpp"

namespace plawbg {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

long long parse_int(const std::string& s, std::size_t line_no, const char* what) {
    long long value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("invalid " + std::string(what) + " '" + s + "'", line_no);
    }
    return value;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (skippable(line)) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError("expected 'source<TAB>destination'", line_no);
        }
        pairs.emplace_back(fields[0], fields[1]);
    }
    return pairs;
}

ParsedTriples parse_triples(std::istream& in) {
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::string> ids;
    std::vector<IncidenceEntry> entries;
    std::uint32_t max_edge = 0;
    bool any = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (skippable(line)) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 3 || fields[1].empty()) {
            throw ParseError("expected 'edge_index<TAB>vertex_id<TAB>sign'", line_no);
        }
        const long long edge = parse_int(fields[0], line_no, "edge index");
        if (edge < 0 || edge > 0xffffffffLL) {
            throw ParseError("edge index out of range '" + fields[0] + "'", line_no);
        }
        const long long sign = parse_int(fields[2], line_no, "sign");
        if (sign != -1 && sign != 1) {
            throw ParseError("sign must be -1 or 1, got '" + fields[2] + "'", line_no);
        }
        auto [it, inserted] =
            index.try_emplace(fields[1], static_cast<std::uint32_t>(ids.size()));
        if (inserted) ids.push_back(fields[1]);
        const auto e = static_cast<std::uint32_t>(edge);
        entries.push_back({e, it->second, static_cast<std::int8_t>(sign)});
        max_edge = std::max(max_edge, e);
        any = true;
    }
    const std::uint32_t n_edges = any ? max_edge + 1 : 0;
    return {IncidenceMatrix(n_edges, static_cast<std::uint32_t>(ids.size()),
                            std::move(entries)),
            std::move(ids)};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed for " + path.string());
    return buf.str();
}

}  // namespace plawbg

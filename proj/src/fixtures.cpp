#include "trinom/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef TRINOM_DATA_DIR
#define TRINOM_DATA_DIR "data/tables"
#endif

namespace trinom {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \r");
    return s.substr(b, e - b + 1);
}

std::optional<std::string> header_value(const std::string& line, const std::string& key) {
    const std::string prefix = "# " + key + ":";
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    return trim(line.substr(prefix.size()));
}

}  // namespace

std::optional<std::size_t> TableFixture::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
}

const std::string& TableFixture::cell(std::size_t row, const std::string& column) const {
    const auto j = column_index(column);
    if (!j) throw FixtureError(table_id + ": no column " + column);
    return rows.at(row).at(*j);
}

std::filesystem::path default_fixture_dir() { return TRINOM_DATA_DIR; }

TableFixture parse_fixture(const std::string& text, const std::filesystem::path& source) {
    TableFixture out;
    out.source = source;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (auto v = header_value(line, "table")) out.table_id = *v;
            if (auto v = header_value(line, "provenance")) out.provenance = *v;
            continue;
        }
        auto cells = split_tabs(line);
        for (auto& c : cells) c = trim(c);
        if (out.columns.empty()) {
            out.columns = cells;
            continue;
        }
        if (cells.size() != out.columns.size()) {
            throw FixtureError(source.string() + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(out.columns.size()) + " cells, found " + std::to_string(cells.size()));
        }
        out.rows.push_back(std::move(cells));
    }
    if (out.table_id.empty()) throw FixtureError(source.string() + ": missing '# table:' header");
    if (out.columns.empty()) throw FixtureError(source.string() + ": missing header row");
    return out;
}

TableFixture load_fixture(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw FixtureError("cannot open fixture " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), file);
}

const std::vector<std::string>& known_table_ids() {
    static const std::vector<std::string> ids = {
        "tbl:Five",    "tbl:FourFive",  "tbl:Four",     "tbl:Three",      "tbl:Two",       "tbl:One",
        "tbl:OneReal", "tbl:TwoReal",   "tbl:ThreeReal", "tbl:FourReal", "tbl:FiveReal", "tbl:Symmetric",
    };
    return ids;
}

std::vector<TableFixture> load_all_fixtures(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw FixtureError("fixture directory not found: " + dir.string());
    std::vector<TableFixture> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".tsv") out.push_back(load_fixture(entry.path()));
    const auto& ids = known_table_ids();
    auto rank = [&](const TableFixture& t) {
        const auto it = std::find(ids.begin(), ids.end(), t.table_id);
        return std::make_pair(it - ids.begin(), t.table_id);
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
    return out;
}

TableFixture load_fixture_by_id(const std::string& table_id, const std::filesystem::path& dir) {
    for (auto& t : load_all_fixtures(dir))
        if (t.table_id == table_id) return t;
    throw FixtureError("unknown table id " + table_id);
}

}  // namespace trinom

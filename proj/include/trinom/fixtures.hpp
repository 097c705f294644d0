#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinom {

// Unknown table id or malformed fixture file.
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One printed table. Cells are kept verbatim; "-" is an empty printed cell.
struct TableFixture {
    std::string table_id;    // "tbl:Two"
    std::string provenance;  // from the "# provenance:" header line
    std::filesystem::path source;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> column_index(const std::string& name) const;
    bool has_column(const std::string& name) const { return column_index(name).has_value(); }
    // FixtureError if the column is missing.
    const std::string& cell(std::size_t row, const std::string& column) const;
};

inline bool is_empty_cell(const std::string& s) { return s == "-"; }

std::filesystem::path default_fixture_dir();

// Tab separated, "#" comment lines, first remaining line is the header.
TableFixture parse_fixture(const std::string& text, const std::filesystem::path& source = {});
TableFixture load_fixture(const std::filesystem::path& file);

// Every *.tsv under dir, in the canonical table order.
std::vector<TableFixture> load_all_fixtures(const std::filesystem::path& dir = default_fixture_dir());
TableFixture load_fixture_by_id(const std::string& table_id, const std::filesystem::path& dir = default_fixture_dir());

// tbl:Five, tbl:FourFive, tbl:Four, tbl:Three, tbl:Two, tbl:One, tbl:OneReal,
// tbl:TwoReal, tbl:ThreeReal, tbl:FourReal, tbl:FiveReal, tbl:Symmetric
const std::vector<std::string>& known_table_ids();

}  // namespace trinom

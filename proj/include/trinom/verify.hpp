#pragma once

#include "trinom/fixtures.hpp"
#include "trinom/order.hpp"
#include "trinom/quad_forms.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace trinom {

enum class CellStatus { Pass, Fail, Skipped };
std::string to_string(CellStatus s);

struct CellResult {
    std::string table_id;
    std::size_t row = 0;    // 0-based data row
    std::string row_label;  // "b=7 r=1", "p=5 sigma=1 r=2 q=2"
    std::string column;
    CellStatus status = CellStatus::Skipped;
    std::string expected;
    std::string computed;
    std::string note;
};

struct VerifyOptions {
    // Restrict to these fixture columns; empty means every column.
    std::set<std::string> columns;
    unsigned jobs = 1;
    std::int64_t class_group_guard = kClassGroupGuard;
};

struct TableReport {
    std::string table_id;
    std::size_t rows = 0;
    std::vector<CellResult> cells;  // row order, then column order

    std::size_t count(CellStatus s) const;
    bool ok() const { return count(CellStatus::Fail) == 0; }
};

// Recomputes every computable cell of a fixture. Rows are distributed over
// options.jobs threads and merged in row order.
TableReport verify_table(const TableFixture& table, const VerifyOptions& options = {});

// Coordinates of a printed expression in t, e.g. "1-3t", "287-2t^2",
// "(1-9t)^-1". The inverse is taken in Q(theta). DomainError on bad syntax.
OrderElement parse_theta_expression(const TrinomialParams& params, const std::string& text);

// True iff u is one of +-p, +-p^-1.
bool same_unit_up_to_sign_and_inverse(const IntElement& u, const OrderElement& p);

// Value of a printed product such as "-2^4*5^5*7*73".
Integer evaluate_factorization(const std::string& text);

// Tags of a printed multiplet: "(alpha_2^4,beta^5)" -> {alpha_2, beta}.
std::set<std::string> multiplet_types(const std::string& text);

}  // namespace trinom

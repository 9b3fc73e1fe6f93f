#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ginvlab/rol.hpp"

namespace ginvlab {

/// {"rows": m, "cols": n, "data": [["1/2", "3i"], ...]}
nlohmann::ordered_json matrix_to_json(const Matrix& a);
/// Throws ParseError naming the offending row/column.
Matrix matrix_from_json(const nlohmann::ordered_json& j);
Matrix load_matrix(const std::string& path);

nlohmann::ordered_json report_to_json(const CaseReport& r, bool with_witnesses = true);

/// Entry point of the ginvlab tool. Exit codes: 0 success, 1 bad input,
/// 2 a table verdict contradicted by exact evidence.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ginvlab

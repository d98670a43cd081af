#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rht/fpalgebra.hpp"
#include "rht/kahler.hpp"

namespace rht::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kUsage = 2 };

struct AlgebraSpec {
  Presentation presentation;
  std::optional<std::string> kahler_class;
};

/// Schema: {"generators": [{"name", "degree"}], "relations": [str],
/// "formal_dimension"?: int, "kahler_class"?: str}. Errors name the field.
AlgebraSpec parse_algebra_json(const nlohmann::json& doc);
AlgebraSpec parse_algebra_file(const std::string& path);

/// Schema: {"n": 2 | 3, "hodge": [h00, h01, ..., hnn]} (row-major h[p][q]).
HodgeDiamond parse_diamond_json(const nlohmann::json& doc);
HodgeDiamond parse_diamond_file(const std::string& path);

/// Runs `rht <args...>` writing results to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rht::cli

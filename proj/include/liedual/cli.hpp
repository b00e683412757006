#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace liedual::cli {

struct RunResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
};

// Runs one command line (without the program name). Exit code 0 for computed
// verdicts (negative mathematical answers included), 2 for usage errors,
// 1 for internal failures.
RunResult dispatch(const std::vector<std::string>& args);

// Renders the report for terminal output.
std::string render_table(const nlohmann::ordered_json& report);

}  // namespace liedual::cli

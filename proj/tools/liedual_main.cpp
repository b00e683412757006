#include <iostream>
#include <string>
#include <vector>

#include "liedual/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json_mode = false;
    for (const auto& a : args)
        if (a == "--json") json_mode = true;
    auto result = liedual::cli::dispatch(args);
    if (json_mode || result.exit_code != 0)
        std::cout << result.report.dump(2) << "\n";
    else
        std::cout << liedual::cli::render_table(result.report);
    return result.exit_code;
}

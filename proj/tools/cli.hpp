#ifndef FZETA_TOOLS_CLI_HPP
#define FZETA_TOOLS_CLI_HPP

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fzeta::cli {

enum ExitCode : int {
    ok = 0,
    check_failed = 1,
    input_error = 2,
};

// Parses `args` (without the program name), runs one subcommand, prints JSON to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    nlohmann::ordered_json detail;
};

// Library-level self-check behind `report-all`; jobs run on up to `parallel` threads.
std::vector<CriterionOutcome> report_all(double tol, int parallel);

} // namespace fzeta::cli

#endif

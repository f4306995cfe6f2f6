#pragma once

#include "dws/suites.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace dws::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

nlohmann::json config_json(const suites::SuiteConfig& cfg);
nlohmann::json report_json(const suites::SuiteReport& rep);

// Runs the dws command line. args excludes the program name. JSON goes to
// out (or --out FILE), the human summary to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dws::cli

#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rsf::cli {

struct CommandResult {
    std::string status = "ok";  // ok | validation-error | unsupported
    nlohmann::json payload;
    std::vector<std::pair<std::string, std::string>> provenance_log;  // (value, source)
    std::string text;            // human rendering, only for enumerate
};

nlohmann::json envelope(const CommandResult& r);

// Parses args (without the program name) and runs the command. Writes the
// payload, the envelope under --json, or the grid for enumerate. Returns 0
// exactly when the status is ok; usage errors return 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsf::cli

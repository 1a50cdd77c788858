#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transroots {

// Runs the command-line front end. args excludes the program name. Returns
// 0 on success, 2 on usage errors, 1 on domain or numerical errors (message
// on err).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Splits CSV text into rows of fields. The CLI never emits quoted or
// escaped fields, so a plain split is a faithful reader for its own output.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace transroots

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fringelab {

// Full command-line driver, callable in-process for tests. args excludes
// the program name. Returns 0 on success, 2 on validation/usage errors,
// 3 on numerical failures (e.g. no measurable fringes in the input).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fringelab

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dstrat::cli {

// args excludes the program name. Returns 0 on success, 2 on usage errors
// (message on err), 1 on domain errors such as a zero polynomial.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dstrat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keypoly::cli {

/// Runs one keypoly command. `args` excludes the program name; "-" as a file
/// argument reads from `in`. Returns 0 on success, 2 on invalid input and 3
/// when the result cannot be computed (or is unknown under --strict).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace keypoly::cli

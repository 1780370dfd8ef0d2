#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgl::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one command line (without the program name). Exit codes: 0 ok, 1 usage, 2 parse error, 3 precondition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& data);

}  // namespace mgl::cli

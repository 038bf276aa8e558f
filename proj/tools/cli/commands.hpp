#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobkit::cli {

/// Runs one command line (without the program name) and returns the exit
/// status: 0 when every verdict is positive, 1 for a negative verdict or
/// mathematically invalid input, 2 for I/O, parse and usage errors or an
/// exceeded enumeration cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobkit::cli

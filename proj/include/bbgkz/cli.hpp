#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bbgkz::cli {

/// Runs one command. Exit status: 0 on success, 1 on domain errors, 2 on
/// I/O, parse or usage errors. Results and error objects are written as
/// JSON to out (or to --output when given).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Writes the example fans, parameters and evaluation points into dir.
void seed_examples(const std::string &dir);

} // namespace bbgkz::cli

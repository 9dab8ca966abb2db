#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxl2::tool {

/** Structured output schema version, bumped on incompatible changes. */
constexpr int kSchemaVersion = 1;

/**
 * Runs one command line (without the program name). Reports go to `out`;
 * errors are printed to `out` as a JSON error object. Returns the exit
 * status: 0 ok, 1 usage error, 2 computation error, 3 failed checks.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxl2::tool

/**
 * @file commands.hpp
 * @brief Command-line front end. Exit codes: 0 success, 1 not realizable or a
 *        failed golden check, 2 usage or input error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fqrep/numtheory.hpp"

namespace fqrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotRealizable = 1;
inline constexpr int kExitUsage = 2;

/// Coefficient vector from "3,2", "[3,2]", "-1" or a polynomial such as
/// "3+2ζ" / "3+2x" / "x^2-4x+1" (constant term first in the result).
std::vector<i64> parse_coefficients(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Names accepted by `demo`.
const std::vector<std::string>& demo_names();

}  // namespace fqrep::cli

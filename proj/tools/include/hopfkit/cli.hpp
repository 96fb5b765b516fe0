/**
 * @file cli.hpp
 * @brief Entry point of the hopfkit command-line tool.
 *
 * Exit codes: 0 success, 1 invalid input (datum, parameters, degree cap),
 * 2 a failed audit or identity check, 64 usage error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitAudit = 2;
inline constexpr int kExitUsage = 64;

/// Arguments exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfkit::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nlft/types.hpp"

namespace nlft::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2, kPropertyViolation = 3 };

/// "2.5", "pi", "2pi", "2*pi", "pi/2", "3pi/4".
double parse_real(const std::string& token);

/// Comma-separated list of parse_real tokens.
std::vector<double> parse_real_list(const std::string& text);

/// "lo:hi:count", inclusive of both ends; a bare number is a one-point grid.
std::vector<double> parse_grid(const std::string& text);

/// File-name token for a T literal: "2pi" -> "2pi", "3.5" -> "3.5", "pi/2" -> "pi_2".
std::string file_token(const std::string& literal);

/// Runs one verb. Arguments exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlft::cli

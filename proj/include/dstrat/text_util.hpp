#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace dstrat {

std::vector<std::string> split(std::string_view text, char sep);

// "3", "-1.5", "2i", "-i", "1+2i", "1.5e-3-4i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);
double parse_double(std::string_view text);
int parse_int(std::string_view text);

// Shortest round-trip decimal.
std::string format_double(double v);
// "1", "-2i", "1+2i"
std::string format_complex(std::complex<double> z);

}  // namespace dstrat

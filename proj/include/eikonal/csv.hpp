#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace eikonal {

/// Shortest decimal text that reads back to the same double.
/// Non-finite values print as "inf", "-inf" and "nan".
std::string format_double(double x);

/// Inverse of format_double. Throws SchemaError on junk.
double parse_double(std::string_view text);

/// "re,im" with both parts in shortest round-trip form.
std::string format_complex(std::complex<double> z);

/// Parses "re,im" or a plain real number.
std::complex<double> parse_complex(std::string_view text);

/// Splits one CSV line on commas, trimming surrounding blanks.
/// Quoting is not supported; no field written by this library needs it.
std::vector<std::string> split_csv_line(std::string_view line);

/// Joins fields with ", ".
std::string join_csv_line(const std::vector<std::string>& fields);

}  // namespace eikonal

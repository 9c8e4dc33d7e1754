#pragma once

#include <string>
#include <vector>

namespace symwalk {

// Floats are serialized with 17 significant digits so that round-trips are
// bit-faithful; infinities print as "inf"/"-inf".
std::string format_double(double value);

// RFC-style CSV quoting: fields containing commas, quotes, or newlines are
// wrapped in double quotes with inner quotes doubled.
std::string csv_field(const std::string& raw);
std::string csv_row(const std::vector<std::string>& fields);

// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace symwalk

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gcenter::io {

// RFC-4180 field quoting: quotes fields containing comma, quote or
// newline, doubling embedded quotes.
std::string csv_field(const std::string& raw);

std::string csv_row(const std::vector<std::string>& fields);

// Fixed, locale-independent float formatting (shortest round-trip form)
// so repeated runs emit byte-identical files.
std::string format_double(double v);

// Writes via a temporary file in the same directory plus atomic rename;
// a failed run never leaves a partial output behind.
void atomic_write(const std::filesystem::path& path,
                  const std::string& content);

}  // namespace gcenter::io

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace wigstat::cli {

/// 17 significant digits, enough to parse back to the same double.
std::string format_real(double x);

/// Writes `#`-prefixed header lines, the column names and the row-major
/// `data` (columns.size() values per row).  Throws Error(kIo) on failure.
void write_csv(const std::filesystem::path& path, std::span<const std::string> header,
               std::span<const std::string> columns, std::span<const double> data);

/// Entry point of the command-line driver.  Returns 0 on success, 2 on a
/// usage or configuration error and 1 on a numerical or I/O failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wigstat::cli

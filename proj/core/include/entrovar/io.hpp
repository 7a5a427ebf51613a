#ifndef ENTROVAR_IO_HPP
#define ENTROVAR_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "entrovar/types.hpp"

namespace entrovar {

/// Parses a numeric vector from text. Accepted formats: one value per line,
/// single-column CSV with an optional non-numeric header line, or a JSON
/// array of numbers. Throws ParseError with a 1-based line number.
std::vector<double> parse_numeric_vector(const std::string& content);

/// Reads a whole file; throws IoError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

ProbabilityDistribution load_distribution(const std::filesystem::path& path,
                                          bool normalize = false);
CountHistogram load_histogram(const std::filesystem::path& path);

/// One value per line, shortest round-trippable decimal form (%.17g).
void write_values(std::ostream& out, std::span<const double> values);
void save_distribution(const std::filesystem::path& path,
                       const ProbabilityDistribution& dist);

/// Formats a double so that parsing it back recovers the same bits.
std::string format_double(double v);

} // namespace entrovar

#endif

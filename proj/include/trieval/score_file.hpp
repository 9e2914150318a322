#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "trieval/confusion.hpp"

namespace trieval {

/// Score file format: mandatory header line "score,label", then one
/// "<score>,<label>" record per line with a finite decimal score and a label
/// of 0 or 1. LF and CRLF line endings are both accepted.
Dataset parse_score_file(std::istream& in);

/// Reads and parses path; IoError if the file cannot be opened.
Dataset load_score_file(const std::string& path);

/// Writes the header and one record per instance. Scores are printed with 17
/// significant digits so a parse round-trip is bit-exact.
void write_score_file(std::ostream& out, const Dataset& data);

/// FNV-1a 64-bit content hash, used to fingerprint input files in reports.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace trieval

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "copos/matrix.hpp"
#include "copos/rational.hpp"

namespace copos {

// Matrix files: the first value is n, followed by either n rows of n
// integers (checked for symmetry) or the n(n+1)/2 upper-triangular entries
// row by row. '#' starts a comment; blank lines are ignored.
SymmetricIntMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const SymmetricIntMatrix& m);

// Vector files: one rational per line, written "p/q" or "p".
RationalVector parse_vector(std::string_view text);
std::string serialize_vector(std::span<const Rational> v);

/// Parses a single "p/q" or "p" token. Throws ParseError.
Rational parse_rational(std::string_view token);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace copos

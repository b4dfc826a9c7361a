#pragma once

// Text formats.
//
// Family file:
//   d=<n>
//   <n-character 0/1 string per member; character k is element k's bit>
// Blank lines are skipped, duplicate members are an error. Lines whose first
// non-blank character is '#' are comments, which lets a witness dump double
// as a family file.
//
// Weights: `<r1>,<r2>,...,<rd>`, each r either `a/b` or a decimal literal.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ucube/cube.hpp"

namespace ucube {

SetFamily parse_family(std::istream& in);
SetFamily parse_family(std::string_view text);
SetFamily read_family_file(const std::filesystem::path& path);
/// Concatenated family files; each `d=` header starts a new family.
std::vector<SetFamily> parse_family_list(std::istream& in);

void write_family(std::ostream& out, const SetFamily& family);
std::string format_family(const SetFamily& family);

/// Member as a 0/1 string, leftmost character = element 1.
std::string format_point(Mask x, int d);
/// Member as `{1,3}` (one-based elements), `{}` for the empty set.
std::string format_set(Mask x);

WeightVector parse_weights(std::string_view text);
/// Treats `arg` as a path when such a file exists, otherwise as a literal.
WeightVector read_weights(std::string_view arg);
std::string format_weights(const WeightVector& w);

}  // namespace ucube

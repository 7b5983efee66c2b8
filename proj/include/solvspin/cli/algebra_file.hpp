#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvspin/liealg/lie_algebra.hpp"

namespace solvspin::cli {

/// Malformed input. The message carries the source and line number.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlgebraFile {
  liealg::MetricLieAlgebra<exact::Rational> algebra;
  std::optional<std::vector<std::size_t>> abelian;  ///< 0-based frame indices
};

/// Format, 1-based indices, '#' starts a comment:
///   dim n
///   signs +1 -1 ...
///   i j k p/q        c[i][j][k] = p/q, only i < j
///   abelian: a,b,...
AlgebraFile parse_algebra(const std::string& text, const std::string& source = "<input>");
AlgebraFile parse_algebra_file(const std::string& path);

/// Canonical text: header, signs, nonzero brackets sorted by (i, j, k), abelian line.
std::string serialize_algebra(const AlgebraFile& file);

std::string read_file(const std::string& path);

}  // namespace solvspin::cli

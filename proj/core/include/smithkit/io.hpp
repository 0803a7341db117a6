#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

/// Univariate literal "[c0, c1, ...]" (constant term first); a bare
/// rational is accepted as a constant.
QPoly parse_qpoly(std::string_view text);
std::string format_qpoly(const QPoly& p);

/// Matrix text: first line "m n", then m rows of whitespace-separated
/// entries. '#' starts a comment. Bracketed entries may contain spaces.
Matrix<BigInt> parse_int_matrix(std::string_view text);
Matrix<QPoly> parse_qpoly_matrix(std::string_view text);

std::string format_matrix(const Matrix<BigInt>& a);
std::string format_matrix(const Matrix<QPoly>& a);

std::string read_file(const std::string& path);

}  // namespace smithkit

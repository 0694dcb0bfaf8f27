#pragma once

// Small dense exact linear algebra (Gaussian elimination over Q). Sizes here
// never exceed a handful of rows.

#include <optional>
#include <vector>

#include "detmult/exactnum.hpp"

namespace detmult {

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix a);
int rank(Matrix a);
/// Solution of the square system a x = b, or nullopt if a is singular.
std::optional<Point> solve_unique(Matrix a, Point b);

}  // namespace detmult

#pragma once

#include <cstddef>
#include <vector>

#include "degplus/rational.hpp"

namespace degplus {

/// Row-major dense rational matrix. Small sizes only; everything is exact.
using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
std::size_t rank(Matrix m);

}  // namespace degplus

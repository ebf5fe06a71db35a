#pragma once

#include <optional>
#include <vector>

#include "slc/scalar.hpp"

namespace slc {

using Matrix = std::vector<std::vector<Scalar>>;

/// Exact rank by Gaussian elimination over the Gaussian rationals.
std::size_t rank(Matrix m);

/// One solution x of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

}  // namespace slc

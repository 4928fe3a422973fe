#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d2kit/bigint.hpp"
#include "d2kit/integer_matrix.hpp"

namespace d2kit {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::size_t rank = 0;
};

/// Pivots on the smallest nonzero absolute value (ties: lowest row, then
/// lowest column), so the output is a deterministic function of the input.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// The nonzero diagonal of D, without computing U or V.
std::vector<BigInt> invariant_factors(const IntegerMatrix& a);

struct IntegerSolution {
  std::vector<BigInt> particular;
  /// Basis of the integer kernel of A.
  std::vector<std::vector<BigInt>> kernel_basis;
};

/// All integer solutions of A x = b, or nullopt if there are none. The
/// particular solution sets every free coordinate to zero.
std::optional<IntegerSolution> solve_integer_system(const IntegerMatrix& a, const std::vector<BigInt>& b);

}  // namespace d2kit

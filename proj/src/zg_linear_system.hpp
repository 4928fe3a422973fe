#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "d2kit/group_ring_matrix.hpp"
#include "d2kit/smith.hpp"

namespace d2kit::detail {

/// Linear equations over ZG whose unknowns are group-ring matrices,
/// flattened to integer coordinates (one per matrix entry and group element)
/// and solved with Smith normal form.
class ZGLinearSystem {
 public:
  /// outer∘X∘inner, scaled by sign. A missing outer/inner is the identity.
  struct Term {
    std::size_t unknown = 0;
    const GroupRingMatrix* outer = nullptr;
    const GroupRingMatrix* inner = nullptr;
    int sign = 1;
  };

  explicit ZGLinearSystem(GroupHandle group);

  std::size_t add_unknown(std::size_t rows, std::size_t cols);

  /// sum of terms == rhs.
  void add_equation(const std::vector<Term>& terms, const GroupRingMatrix& rhs);

  /// For every column j: sum_a weights[a] * augmentation(X(a, j)) == rhs[j].
  void add_augmentation_equation(std::size_t unknown, const std::vector<BigInt>& weights,
                                 const std::vector<BigInt>& rhs);

  std::size_t variable_count() const noexcept { return variables_; }
  std::size_t equation_count() const noexcept { return rows_.size(); }

  std::optional<IntegerSolution> solve() const;

  /// Like solve(), but the particular solution is start + (the solution of
  /// the shifted system with free variables zero), so a start that already
  /// solves the system is returned unchanged.
  std::optional<IntegerSolution> solve_near(const std::vector<BigInt>& start) const;

  /// Flattens one matrix per unknown into integer coordinates.
  std::vector<BigInt> pack(const std::vector<GroupRingMatrix>& values) const;

  /// Splits an integer vector back into the unknown matrices.
  std::vector<GroupRingMatrix> unpack(const std::vector<BigInt>& x) const;

 private:
  struct Shape {
    std::size_t rows;
    std::size_t cols;
    std::size_t offset;
  };

  std::size_t variable(std::size_t unknown, std::size_t a, std::size_t b, ElementIndex g) const;

  GroupHandle group_;
  std::size_t order_;
  std::vector<Shape> unknowns_;
  std::size_t variables_ = 0;
  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<BigInt> rhs_;
};

}  // namespace d2kit::detail

#pragma once

#include <cstddef>
#include <vector>

#include "d2kit/group_ring.hpp"
#include "d2kit/integer_matrix.hpp"

namespace d2kit {

/// Matrix of a homomorphism between free left ZG-modules.
///
/// Column j holds the image of the j-th basis vector: f(e_j) = sum_i m(i,j) e_i.
/// Because scalars act on the left, f(a e_j) = sum_i (a * m(i,j)) e_i, and the
/// matrix of a composite reverses entry products (see compose()).
/// All entries share one flavor and one group.
class GroupRingMatrix {
 public:
  /// 0x0 symbolic.
  GroupRingMatrix() = default;
  /// Zero matrix of the given flavor.
  GroupRingMatrix(std::size_t rows, std::size_t cols, GroupHandle group);

  static GroupRingMatrix identity(std::size_t n, GroupHandle group);
  static GroupRingMatrix from_rows(GroupHandle group, std::vector<std::vector<GroupRingElement>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const GroupHandle& group() const noexcept { return group_; }
  bool is_symbolic() const noexcept { return group_ == nullptr; }

  const GroupRingElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, GroupRingElement value);

  bool is_zero() const;

  GroupRingMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const GroupRingMatrix& m);

  GroupRingMatrix& operator+=(const GroupRingMatrix& rhs);
  GroupRingMatrix& operator-=(const GroupRingMatrix& rhs);
  GroupRingMatrix operator-() const;
  friend GroupRingMatrix operator+(GroupRingMatrix a, const GroupRingMatrix& b) { return a += b; }
  friend GroupRingMatrix operator-(GroupRingMatrix a, const GroupRingMatrix& b) { return a -= b; }
  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  GroupHandle group_;
  std::vector<GroupRingElement> entries_;
};

/// Matrix of outer∘inner: (outer∘inner)(k,j) = sum_i inner(i,j) * outer(k,i).
/// Throws DimensionMismatch or FlavorMismatch.
GroupRingMatrix compose(const GroupRingMatrix& outer, const GroupRingMatrix& inner);

/// Block diag(a, b).
GroupRingMatrix direct_sum(const GroupRingMatrix& a, const GroupRingMatrix& b);

/// Appends `extra` zero columns.
GroupRingMatrix pad_columns(const GroupRingMatrix& m, std::size_t extra);

/// Integer matrix of the underlying Z-linear map in the basis
/// {g e_j}: each entry becomes its right regular representation, so
/// expand(compose(A, B)) == expand(A) * expand(B).
IntegerMatrix expand_matrix(const GroupRingMatrix& m, const FiniteGroupTable& t);

}  // namespace d2kit

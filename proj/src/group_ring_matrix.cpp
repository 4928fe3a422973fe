#include "d2kit/group_ring_matrix.hpp"

#include <algorithm>
#include <string>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

bool same_ring(const GroupHandle& a, const GroupHandle& b) {
  if (!a || !b) return !a && !b;
  return a == b || a->same_group(*b);
}

void require_same_ring(const GroupRingMatrix& a, const GroupRingMatrix& b, const char* op) {
  if (!same_ring(a.group(), b.group())) throw FlavorMismatch(std::string(op) + ": operands over different rings");
}

std::string shape(const GroupRingMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

GroupRingMatrix::GroupRingMatrix(std::size_t rows, std::size_t cols, GroupHandle group)
    : rows_(rows), cols_(cols), group_(std::move(group)), entries_(rows * cols, GroupRingElement::zero(group_)) {}

GroupRingMatrix GroupRingMatrix::identity(std::size_t n, GroupHandle group) {
  GroupRingMatrix m(n, n, group);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = GroupRingElement::one(group);
  return m;
}

GroupRingMatrix GroupRingMatrix::from_rows(GroupHandle group, std::vector<std::vector<GroupRingElement>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  GroupRingMatrix m(r, c, std::move(group));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged group-ring matrix");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

void GroupRingMatrix::set(std::size_t r, std::size_t c, GroupRingElement value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("group-ring matrix index out of range");
  if (!same_ring(value.group(), group_)) throw FlavorMismatch("entry flavor differs from matrix flavor");
  entries_[r * cols_ + c] = std::move(value);
}

bool GroupRingMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const GroupRingElement& e) { return e.is_zero(); });
}

GroupRingMatrix GroupRingMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                       std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("block outside matrix " + shape(*this));
  GroupRingMatrix out(rows, cols, group_);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.entries_[i * cols + j] = (*this)(row0 + i, col0 + j);
  return out;
}

void GroupRingMatrix::set_block(std::size_t row0, std::size_t col0, const GroupRingMatrix& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_) {
    throw DimensionMismatch("block " + shape(m) + " does not fit in " + shape(*this));
  }
  require_same_ring(*this, m, "set_block");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) entries_[(row0 + i) * cols_ + col0 + j] = m(i, j);
}

GroupRingMatrix& GroupRingMatrix::operator+=(const GroupRingMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("sum of " + shape(*this) + " and " + shape(rhs));
  require_same_ring(*this, rhs, "sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

GroupRingMatrix& GroupRingMatrix::operator-=(const GroupRingMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("difference of " + shape(*this) + " and " + shape(rhs));
  }
  require_same_ring(*this, rhs, "difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

GroupRingMatrix GroupRingMatrix::operator-() const {
  GroupRingMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_ring(a.group_, b.group_) && a.entries_ == b.entries_;
}

GroupRingMatrix compose(const GroupRingMatrix& outer, const GroupRingMatrix& inner) {
  if (outer.cols() != inner.rows()) {
    throw DimensionMismatch("cannot compose " + shape(outer) + " after " + shape(inner));
  }
  require_same_ring(outer, inner, "compose");
  GroupRingMatrix out(outer.rows(), inner.cols(), outer.group());
  for (std::size_t k = 0; k < outer.rows(); ++k) {
    for (std::size_t j = 0; j < inner.cols(); ++j) {
      GroupRingElement acc = GroupRingElement::zero(outer.group());
      for (std::size_t i = 0; i < outer.cols(); ++i) {
        const GroupRingElement& a = inner(i, j);
        const GroupRingElement& b = outer(k, i);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      out.set(k, j, std::move(acc));
    }
  }
  return out;
}

GroupRingMatrix direct_sum(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  require_same_ring(a, b, "direct_sum");
  GroupRingMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.group());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

GroupRingMatrix pad_columns(const GroupRingMatrix& m, std::size_t extra) {
  GroupRingMatrix out(m.rows(), m.cols() + extra, m.group());
  out.set_block(0, 0, m);
  return out;
}

IntegerMatrix expand_matrix(const GroupRingMatrix& m, const FiniteGroupTable& t) {
  if (m.is_symbolic()) throw SymbolicNotSupported("expand_matrix needs a tabular matrix");
  if (m.group().get() != &t && !m.group()->same_group(t)) throw FlavorMismatch("matrix is over a different group");
  const std::size_t n = t.order();
  IntegerMatrix out(m.rows() * n, m.cols() * n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      // Column h of the (i,j) block is the coordinate vector of g_h * m(i,j).
      for (std::size_t h = 0; h < n; ++h) {
        for (const auto& [g, c] : m(i, j).tabular_terms()) {
          out(i * n + t.multiply(static_cast<ElementIndex>(h), g), j * n + h) += c;
        }
      }
    }
  }
  return out;
}

}  // namespace d2kit

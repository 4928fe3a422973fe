#include "d2kit/chain_complex.hpp"

#include <string>

#include "d2kit/errors.hpp"

namespace d2kit {

std::string Violation::describe() const {
  std::string out = check + " failed in degree " + std::to_string(degree) + " at entry (" + std::to_string(row) +
                    "," + std::to_string(col) + ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

void VerificationReport::append(const VerificationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

ChainComplex::ChainComplex(GroupHandle group, std::vector<std::size_t> ranks, std::vector<GroupRingMatrix> boundaries,
                           std::optional<std::vector<BigInt>> augmentation)
    : group_(std::move(group)),
      ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)),
      augmentation_(std::move(augmentation)) {
  if (ranks_.empty()) throw DimensionMismatch("a chain complex needs at least degree 0");
  if (boundaries_.size() + 1 != ranks_.size()) {
    throw DimensionMismatch("expected " + std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                            std::to_string(boundaries_.size()));
  }
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    const GroupRingMatrix& d = boundaries_[i - 1];
    if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i]) {
      throw DimensionMismatch("boundary " + std::to_string(i) + " is " + std::to_string(d.rows()) + "x" +
                              std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[i - 1]) + "x" +
                              std::to_string(ranks_[i]));
    }
    const bool same = (!d.group() && !group_) ||
                      (d.group() && group_ && (d.group() == group_ || d.group()->same_group(*group_)));
    if (!same) throw FlavorMismatch("boundary " + std::to_string(i) + " is over a different ring");
  }
  if (augmentation_ && augmentation_->size() != ranks_[0]) {
    throw DimensionMismatch("augmentation length differs from rank of degree 0");
  }
}

ChainComplex ChainComplex::zero(GroupHandle group, std::size_t top) {
  std::vector<GroupRingMatrix> boundaries;
  for (std::size_t i = 0; i < top; ++i) boundaries.emplace_back(0, 0, group);
  return ChainComplex(group, std::vector<std::size_t>(top + 1, 0), std::move(boundaries));
}

GroupRingMatrix ChainComplex::boundary(std::size_t degree) const {
  if (degree >= 1 && degree < ranks_.size()) return boundaries_[degree - 1];
  const std::size_t rows = degree == 0 ? 0 : rank(degree - 1);
  return GroupRingMatrix(rows, rank(degree), group_);
}

ChainComplex ChainComplex::padded_to(std::size_t top) const {
  if (top < top_degree()) throw DimensionMismatch("cannot pad a complex to a lower degree");
  std::vector<std::size_t> ranks = ranks_;
  std::vector<GroupRingMatrix> boundaries = boundaries_;
  while (ranks.size() < top + 1) {
    boundaries.emplace_back(ranks.back(), 0, group_);
    ranks.push_back(0);
  }
  return ChainComplex(group_, std::move(ranks), std::move(boundaries), augmentation_);
}

ChainComplex ChainComplex::with_augmentation(std::optional<std::vector<BigInt>> augmentation) const {
  return ChainComplex(group_, ranks_, boundaries_, std::move(augmentation));
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  const bool same_group =
      (!a.group_ && !b.group_) || (a.group_ && b.group_ && (a.group_ == b.group_ || a.group_->same_group(*b.group_)));
  return same_group && a.ranks_ == b.ranks_ && a.boundaries_ == b.boundaries_ && a.augmentation_ == b.augmentation_;
}

std::vector<BigInt> standard_augmentation(std::size_t rank0) { return std::vector<BigInt>(rank0, BigInt(1)); }

std::vector<BigInt> augment_columns(const std::vector<BigInt>& values, const GroupRingMatrix& m) {
  if (values.size() != m.rows()) throw DimensionMismatch("augmentation length differs from matrix rows");
  std::vector<BigInt> out(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t a = 0; a < m.rows(); ++a) out[j] += augmentation(m(a, j)) * values[a];
  return out;
}

VerificationReport verify_complex(const ChainComplex& c) {
  VerificationReport report;
  for (std::size_t i = 2; i <= c.top_degree(); ++i) {
    const GroupRingMatrix composite = compose(c.boundary(i - 1), c.boundary(i));
    for (std::size_t r = 0; r < composite.rows(); ++r) {
      for (std::size_t col = 0; col < composite.cols(); ++col) {
        if (!composite(r, col).is_zero()) {
          report.violations.push_back({"boundary composite d" + std::to_string(i - 1) + "∘d" + std::to_string(i) + " = 0",
                                       i, r, col, "nonzero entry"});
        }
      }
    }
  }
  if (c.augmentation() && c.top_degree() >= 1) {
    const auto values = augment_columns(*c.augmentation(), c.boundary(1));
    for (std::size_t col = 0; col < values.size(); ++col) {
      if (values[col] != 0) {
        report.violations.push_back(
            {"augmentation∘d1 = 0", 1, 0, col, "column augments to " + to_decimal(values[col])});
      }
    }
  }
  return report;
}

}  // namespace d2kit

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d2kit/bigint.hpp"
#include "d2kit/group_ring_matrix.hpp"

namespace d2kit {

/// One violated equation, located by degree and matrix entry.
struct Violation {
  std::string check;
  std::size_t degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;

  std::string describe() const;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  const Violation* first_failure() const noexcept { return violations.empty() ? nullptr : &violations.front(); }
  void append(const VerificationReport& other);
};

/// Free ZG-modules of ranks r_0..r_k with boundaries d_i : C_i -> C_i-1.
///
/// boundary(i) is r_{i-1} x r_i. The augmentation, when present, gives the
/// integer value of each C_0 basis vector; it extends to C_0 -> Z by
/// a e_j -> augmentation(a) * value_j. Construction checks shapes only;
/// use verify_complex() for d∘d = 0.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(GroupHandle group, std::vector<std::size_t> ranks, std::vector<GroupRingMatrix> boundaries,
               std::optional<std::vector<BigInt>> augmentation = std::nullopt);

  /// All-zero modules in degrees 0..top.
  static ChainComplex zero(GroupHandle group, std::size_t top);

  const GroupHandle& group() const noexcept { return group_; }
  bool is_symbolic() const noexcept { return group_ == nullptr; }
  std::size_t top_degree() const noexcept { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  std::size_t rank(std::size_t degree) const { return degree < ranks_.size() ? ranks_[degree] : 0; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  /// d_i for 1 <= i <= top. Out-of-range degrees yield a zero matrix of the right shape.
  GroupRingMatrix boundary(std::size_t degree) const;
  const std::vector<GroupRingMatrix>& boundaries() const noexcept { return boundaries_; }
  const std::optional<std::vector<BigInt>>& augmentation() const noexcept { return augmentation_; }

  /// Same modules with extra zero-rank degrees on top.
  ChainComplex padded_to(std::size_t top) const;
  ChainComplex with_augmentation(std::optional<std::vector<BigInt>> augmentation) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  GroupHandle group_;
  std::vector<std::size_t> ranks_{0};
  std::vector<GroupRingMatrix> boundaries_;
  std::optional<std::vector<BigInt>> augmentation_;
};

/// All-ones augmentation on r_0 basis vectors.
std::vector<BigInt> standard_augmentation(std::size_t rank0);

/// Augmentation value of each column of a C_0-valued matrix: sum_a aug(m(a,j)) * values[a].
std::vector<BigInt> augment_columns(const std::vector<BigInt>& values, const GroupRingMatrix& m);

/// Checks d_{i-1}∘d_i = 0 for every i and augmentation∘d_1 = 0 when an
/// augmentation is stored. Each nonzero entry is one violation.
VerificationReport verify_complex(const ChainComplex& c);

}  // namespace d2kit

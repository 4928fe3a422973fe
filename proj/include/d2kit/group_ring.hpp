#pragma once

#include <cstddef>
#include <map>
#include <variant>

#include "d2kit/bigint.hpp"
#include "d2kit/group_table.hpp"
#include "d2kit/integer_matrix.hpp"
#include "d2kit/word.hpp"

namespace d2kit {

/// Integer linear combination of group elements.
///
/// Symbolic elements live in the integral group ring of the free group and
/// are keyed by reduced words. Tabular elements live in ZG for a finite G
/// and are keyed by element index. A null group handle means symbolic.
/// Zero coefficients are never stored.
class GroupRingElement {
 public:
  using SymbolicTerms = std::map<GroupWord, BigInt>;
  using TabularTerms = std::map<ElementIndex, BigInt>;

  /// Symbolic zero.
  GroupRingElement() = default;

  static GroupRingElement zero(GroupHandle group);
  static GroupRingElement integer(GroupHandle group, const BigInt& n);
  static GroupRingElement one(GroupHandle group) { return integer(std::move(group), 1); }
  static GroupRingElement symbolic(SymbolicTerms terms);
  static GroupRingElement word(const GroupWord& w, const BigInt& coefficient = 1);
  static GroupRingElement tabular(GroupHandle group, TabularTerms terms);
  static GroupRingElement element(GroupHandle group, ElementIndex g, const BigInt& coefficient = 1);

  bool is_symbolic() const noexcept { return group_ == nullptr; }
  bool is_zero() const;
  const GroupHandle& group() const noexcept { return group_; }
  std::size_t term_count() const;

  const SymbolicTerms& symbolic_terms() const;
  const TabularTerms& tabular_terms() const;

  /// True when both operands have the same flavor and, if tabular, the same group.
  bool compatible_with(const GroupRingElement& other) const;

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const BigInt& k, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  GroupRingElement(GroupHandle group, std::variant<SymbolicTerms, TabularTerms> terms);
  void require_compatible(const GroupRingElement& other) const;

  GroupHandle group_;
  std::variant<SymbolicTerms, TabularTerms> terms_;
};

inline GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
inline GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

/// Coefficient sum; a ring homomorphism ZG -> Z.
BigInt augmentation(const GroupRingElement& a);

/// Matrix of x -> a*x in the basis g_0, ..., g_{n-1}. A ring homomorphism.
IntegerMatrix regular_representation(const GroupRingElement& a, const FiniteGroupTable& t);

/// Matrix of x -> x*a in the same basis. Reverses products:
/// R(a*b) = R(b) * R(a). This is the coordinate form of a left-module map.
IntegerMatrix right_regular_representation(const GroupRingElement& a, const FiniteGroupTable& t);

}  // namespace d2kit

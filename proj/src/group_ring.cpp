#include "d2kit/group_ring.hpp"

#include <utility>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

template <typename Map>
void add_terms(Map& into, const Map& from, int sign) {
  for (const auto& [key, coefficient] : from) {
    auto [it, inserted] = into.try_emplace(key, 0);
    if (sign > 0) {
      it->second += coefficient;
    } else {
      it->second -= coefficient;
    }
    if (it->second == 0) into.erase(it);
  }
}

template <typename Map>
void drop_zeros(Map& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

GroupRingElement::GroupRingElement(GroupHandle group, std::variant<SymbolicTerms, TabularTerms> terms)
    : group_(std::move(group)), terms_(std::move(terms)) {}

GroupRingElement GroupRingElement::zero(GroupHandle group) {
  if (!group) return GroupRingElement();
  return GroupRingElement(std::move(group), TabularTerms{});
}

GroupRingElement GroupRingElement::integer(GroupHandle group, const BigInt& n) {
  if (!group) return word(GroupWord(), n);
  return element(std::move(group), 0, n);
}

GroupRingElement GroupRingElement::symbolic(SymbolicTerms terms) {
  drop_zeros(terms);
  return GroupRingElement(nullptr, std::move(terms));
}

GroupRingElement GroupRingElement::word(const GroupWord& w, const BigInt& coefficient) {
  SymbolicTerms terms;
  if (coefficient != 0) terms.emplace(w, coefficient);
  return GroupRingElement(nullptr, std::move(terms));
}

GroupRingElement GroupRingElement::tabular(GroupHandle group, TabularTerms terms) {
  if (!group) throw FlavorMismatch("tabular element needs a group table");
  drop_zeros(terms);
  for (const auto& [g, c] : terms) {
    if (g >= group->order()) throw std::out_of_range("group element index out of range");
  }
  return GroupRingElement(std::move(group), std::move(terms));
}

GroupRingElement GroupRingElement::element(GroupHandle group, ElementIndex g, const BigInt& coefficient) {
  TabularTerms terms;
  terms.emplace(g, coefficient);
  return tabular(std::move(group), std::move(terms));
}

bool GroupRingElement::is_zero() const { return term_count() == 0; }

std::size_t GroupRingElement::term_count() const {
  return std::visit([](const auto& t) { return t.size(); }, terms_);
}

const GroupRingElement::SymbolicTerms& GroupRingElement::symbolic_terms() const {
  if (!is_symbolic()) throw FlavorMismatch("element is tabular, not symbolic");
  return std::get<SymbolicTerms>(terms_);
}

const GroupRingElement::TabularTerms& GroupRingElement::tabular_terms() const {
  if (is_symbolic()) throw FlavorMismatch("element is symbolic, not tabular");
  return std::get<TabularTerms>(terms_);
}

bool GroupRingElement::compatible_with(const GroupRingElement& other) const {
  if (is_symbolic() || other.is_symbolic()) return is_symbolic() && other.is_symbolic();
  return group_ == other.group_ || group_->same_group(*other.group_);
}

void GroupRingElement::require_compatible(const GroupRingElement& other) const {
  if (!compatible_with(other)) {
    throw FlavorMismatch(is_symbolic() != other.is_symbolic() ? "mixing symbolic and tabular elements"
                                                              : "elements over different groups");
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  require_compatible(rhs);
  std::visit(
      [&](auto& mine) {
        using Map = std::decay_t<decltype(mine)>;
        add_terms(mine, std::get<Map>(rhs.terms_), +1);
      },
      terms_);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  require_compatible(rhs);
  std::visit(
      [&](auto& mine) {
        using Map = std::decay_t<decltype(mine)>;
        add_terms(mine, std::get<Map>(rhs.terms_), -1);
      },
      terms_);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  std::visit(
      [](auto& terms) {
        for (auto& kv : terms) kv.second = -kv.second;
      },
      out.terms_);
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_compatible(b);
  if (a.is_symbolic()) {
    GroupRingElement::SymbolicTerms out;
    for (const auto& [u, cu] : a.symbolic_terms()) {
      for (const auto& [v, cv] : b.symbolic_terms()) {
        auto [it, inserted] = out.try_emplace(u * v, 0);
        it->second += cu * cv;
      }
    }
    return GroupRingElement::symbolic(std::move(out));
  }
  const FiniteGroupTable& t = *a.group_;
  GroupRingElement::TabularTerms out;
  for (const auto& [g, cg] : a.tabular_terms()) {
    for (const auto& [h, ch] : b.tabular_terms()) {
      auto [it, inserted] = out.try_emplace(t.multiply(g, h), 0);
      it->second += cg * ch;
    }
  }
  return GroupRingElement::tabular(a.group_, std::move(out));
}

GroupRingElement operator*(const BigInt& k, const GroupRingElement& a) {
  GroupRingElement out = a;
  std::visit(
      [&](auto& terms) {
        for (auto& kv : terms) kv.second *= k;
        drop_zeros(terms);
      },
      out.terms_);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.compatible_with(b) && a.terms_ == b.terms_;
}

BigInt augmentation(const GroupRingElement& a) {
  BigInt sum = 0;
  if (a.is_symbolic()) {
    for (const auto& kv : a.symbolic_terms()) sum += kv.second;
  } else {
    for (const auto& kv : a.tabular_terms()) sum += kv.second;
  }
  return sum;
}

namespace {

void require_over(const GroupRingElement& a, const FiniteGroupTable& t) {
  if (a.is_symbolic()) throw SymbolicNotSupported("regular representation needs a tabular element");
  if (a.group().get() != &t && !a.group()->same_group(t)) throw FlavorMismatch("element is over a different group");
}

}  // namespace

IntegerMatrix regular_representation(const GroupRingElement& a, const FiniteGroupTable& t) {
  require_over(a, t);
  const std::size_t n = t.order();
  IntegerMatrix m(n, n);
  for (std::size_t h = 0; h < n; ++h) {
    for (const auto& [g, c] : a.tabular_terms()) m(t.multiply(g, static_cast<ElementIndex>(h)), h) += c;
  }
  return m;
}

IntegerMatrix right_regular_representation(const GroupRingElement& a, const FiniteGroupTable& t) {
  require_over(a, t);
  const std::size_t n = t.order();
  IntegerMatrix m(n, n);
  for (std::size_t h = 0; h < n; ++h) {
    for (const auto& [g, c] : a.tabular_terms()) m(t.multiply(static_cast<ElementIndex>(h), g), h) += c;
  }
  return m;
}

}  // namespace d2kit

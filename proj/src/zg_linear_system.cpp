#include "zg_linear_system.hpp"

#include "d2kit/errors.hpp"

namespace d2kit::detail {

ZGLinearSystem::ZGLinearSystem(GroupHandle group) : group_(std::move(group)) {
  if (!group_) throw SymbolicNotSupported("linear systems over ZG need a finite group table");
  order_ = group_->order();
}

std::size_t ZGLinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  unknowns_.push_back({rows, cols, variables_});
  variables_ += rows * cols * order_;
  return unknowns_.size() - 1;
}

std::size_t ZGLinearSystem::variable(std::size_t unknown, std::size_t a, std::size_t b, ElementIndex g) const {
  const Shape& s = unknowns_[unknown];
  return s.offset + (a * s.cols + b) * order_ + g;
}

void ZGLinearSystem::add_equation(const std::vector<Term>& terms, const GroupRingMatrix& rhs) {
  const std::size_t p = rhs.rows();
  const std::size_t q = rhs.cols();
  const std::size_t base = rows_.size();
  rows_.resize(base + p * q * order_);
  rhs_.resize(base + p * q * order_, 0);
  auto row = [&](std::size_t k, std::size_t j, ElementIndex h) { return base + (k * q + j) * order_ + h; };

  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t j = 0; j < q; ++j)
      for (const auto& [h, c] : rhs(k, j).tabular_terms()) rhs_[row(k, j, h)] = c;

  const FiniteGroupTable& t = *group_;
  const GroupRingElement one = GroupRingElement::one(group_);
  for (const Term& term : terms) {
    const Shape& s = unknowns_.at(term.unknown);
    const std::size_t out_rows = term.outer ? term.outer->rows() : s.rows;
    const std::size_t out_cols = term.inner ? term.inner->cols() : s.cols;
    if ((term.outer && term.outer->cols() != s.rows) || (term.inner && term.inner->rows() != s.cols) ||
        out_rows != p || out_cols != q) {
      throw DimensionMismatch("linear system term does not match its equation");
    }
    for (std::size_t a = 0; a < s.rows; ++a) {
      for (std::size_t b = 0; b < s.cols; ++b) {
        for (std::size_t k = 0; k < p; ++k) {
          if (!term.outer && k != a) continue;
          const GroupRingElement& left = term.outer ? (*term.outer)(k, a) : one;
          if (left.is_zero()) continue;
          for (std::size_t j = 0; j < q; ++j) {
            if (!term.inner && j != b) continue;
            const GroupRingElement& right = term.inner ? (*term.inner)(b, j) : one;
            if (right.is_zero()) continue;
            // Coefficient of h in right * g * left.
            for (const auto& [h1, c1] : right.tabular_terms()) {
              for (const auto& [h2, c2] : left.tabular_terms()) {
                const BigInt c = term.sign * c1 * c2;
                for (ElementIndex g = 0; g < order_; ++g) {
                  const ElementIndex h = t.multiply(t.multiply(h1, g), h2);
                  auto& slot = rows_[row(k, j, h)][variable(term.unknown, a, b, g)];
                  slot += c;
                }
              }
            }
          }
        }
      }
    }
  }
}

void ZGLinearSystem::add_augmentation_equation(std::size_t unknown, const std::vector<BigInt>& weights,
                                               const std::vector<BigInt>& rhs) {
  const Shape& s = unknowns_.at(unknown);
  if (weights.size() != s.rows || rhs.size() != s.cols) throw DimensionMismatch("augmentation equation shape");
  for (std::size_t j = 0; j < s.cols; ++j) {
    std::map<std::size_t, BigInt> equation;
    for (std::size_t a = 0; a < s.rows; ++a) {
      if (weights[a] == 0) continue;
      for (ElementIndex g = 0; g < order_; ++g) equation[variable(unknown, a, j, g)] += weights[a];
    }
    rows_.push_back(std::move(equation));
    rhs_.push_back(rhs[j]);
  }
}

std::optional<IntegerSolution> ZGLinearSystem::solve() const { return solve_near(std::vector<BigInt>(variables_)); }

std::optional<IntegerSolution> ZGLinearSystem::solve_near(const std::vector<BigInt>& start) const {
  if (start.size() != variables_) throw DimensionMismatch("start vector length");
  // Drop all-zero equations; an all-zero equation with nonzero rhs is unsolvable.
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    bool any = false;
    for (const auto& [v, c] : rows_[r]) any = any || c != 0;
    if (any) {
      live.push_back(r);
    } else if (rhs_[r] != 0) {
      return std::nullopt;
    }
  }
  IntegerMatrix a(live.size(), variables_);
  std::vector<BigInt> b(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    b[i] = rhs_[live[i]];
    for (const auto& [v, c] : rows_[live[i]]) {
      a(i, v) = c;
      b[i] -= c * start[v];
    }
  }
  auto solution = solve_integer_system(a, b);
  if (solution) {
    for (std::size_t v = 0; v < variables_; ++v) solution->particular[v] += start[v];
  }
  return solution;
}

std::vector<BigInt> ZGLinearSystem::pack(const std::vector<GroupRingMatrix>& values) const {
  if (values.size() != unknowns_.size()) throw DimensionMismatch("one value per unknown required");
  std::vector<BigInt> x(variables_);
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    const Shape& s = unknowns_[u];
    if (values[u].rows() != s.rows || values[u].cols() != s.cols) throw DimensionMismatch("unknown shape");
    for (std::size_t a = 0; a < s.rows; ++a) {
      for (std::size_t b = 0; b < s.cols; ++b) {
        const GroupRingElement& e = values[u](a, b);
        if (e.is_zero()) continue;
        if (e.is_symbolic() || !e.compatible_with(GroupRingElement::zero(group_))) {
          throw FlavorMismatch("value is not over the system's group");
        }
        for (const auto& [g, c] : e.tabular_terms()) x[variable(u, a, b, g)] = c;
      }
    }
  }
  return x;
}

std::vector<GroupRingMatrix> ZGLinearSystem::unpack(const std::vector<BigInt>& x) const {
  if (x.size() != variables_) throw DimensionMismatch("solution vector length");
  std::vector<GroupRingMatrix> out;
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    const Shape& s = unknowns_[u];
    GroupRingMatrix m(s.rows, s.cols, group_);
    for (std::size_t a = 0; a < s.rows; ++a) {
      for (std::size_t b = 0; b < s.cols; ++b) {
        GroupRingElement::TabularTerms terms;
        for (ElementIndex g = 0; g < order_; ++g) {
          const BigInt& c = x[variable(u, a, b, g)];
          if (c != 0) terms.emplace(g, c);
        }
        m.set(a, b, GroupRingElement::tabular(group_, std::move(terms)));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace d2kit::detail

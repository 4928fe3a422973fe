#include "d2kit/smith.hpp"

#include <algorithm>
#include <utility>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

// In-place Smith reduction of `a`. Row operations are mirrored on `u` and
// `rhs`, column operations on `v`, each when non-null.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v, std::vector<BigInt>* rhs)
      : a_(a), u_(u), v_(v), rhs_(rhs), m_(a.rows()), n_(a.cols()) {}

  std::size_t run() {
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      auto pivot = smallest_in_submatrix(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      while (!settle_pivot(t)) {
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    return t;
  }

 private:
  using Position = std::pair<std::size_t, std::size_t>;

  std::optional<Position> smallest_in_submatrix(std::size_t t) const {
    std::optional<Position> best;
    BigInt best_abs;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        const BigInt& x = a_(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!best || ax < best_abs) {
          best = Position{i, j};
          best_abs = std::move(ax);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  // One round of clearing row and column t. Returns true once the pivot
  // divides everything in the trailing submatrix and its row and column are clear.
  bool settle_pivot(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (a_(i, t) == 0) continue;
      const BigInt q = a_(i, t) / a_(t, t);
      if (q != 0) add_row_multiple(i, t, -q);
      if (a_(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (a_(t, j) == 0) continue;
      const BigInt q = a_(t, j) / a_(t, t);
      if (q != 0) add_col_multiple(j, t, -q);
      if (a_(t, j) != 0) clean = false;
    }
    if (!clean) {
      move_smallest_of_cross(t);
      return false;
    }
    for (std::size_t i = t + 1; i < m_; ++i) {
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_(i, j) % a_(t, t) != 0) {
          add_row_multiple(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }

  // Brings the smallest nonzero entry of row t / column t to (t,t).
  void move_smallest_of_cross(std::size_t t) {
    Position best{t, t};
    BigInt best_abs = abs(a_(t, t));
    auto consider = [&](std::size_t i, std::size_t j) {
      const BigInt& x = a_(i, j);
      if (x == 0) return;
      BigInt ax = abs(x);
      if (best_abs == 0 || ax < best_abs || (ax == best_abs && Position{i, j} < best)) {
        best = {i, j};
        best_abs = std::move(ax);
      }
    };
    for (std::size_t i = t + 1; i < m_; ++i) consider(i, t);
    for (std::size_t j = t + 1; j < n_; ++j) consider(t, j);
    swap_rows(t, best.first);
    swap_cols(t, best.second);
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(a_(i, c), a_(k, c));
    if (u_) {
      for (std::size_t c = 0; c < u_->cols(); ++c) std::swap((*u_)(i, c), (*u_)(k, c));
    }
    if (rhs_) std::swap((*rhs_)[i], (*rhs_)[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(a_(r, j), a_(r, k));
    if (v_) {
      for (std::size_t r = 0; r < v_->rows(); ++r) std::swap((*v_)(r, j), (*v_)(r, k));
    }
  }

  // row_target += f * row_source
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (a_(source, c) != 0) a_(target, c) += f * a_(source, c);
    }
    if (u_) {
      for (std::size_t c = 0; c < u_->cols(); ++c) {
        if ((*u_)(source, c) != 0) (*u_)(target, c) += f * (*u_)(source, c);
      }
    }
    if (rhs_ && (*rhs_)[source] != 0) (*rhs_)[target] += f * (*rhs_)[source];
  }

  // col_target += f * col_source
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    for (std::size_t r = 0; r < m_; ++r) {
      if (a_(r, source) != 0) a_(r, target) += f * a_(r, source);
    }
    if (v_) {
      for (std::size_t r = 0; r < v_->rows(); ++r) {
        if ((*v_)(r, source) != 0) (*v_)(r, target) += f * (*v_)(r, source);
      }
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < n_; ++c) a_(i, c) = -a_(i, c);
    if (u_) {
      for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(i, c) = -(*u_)(i, c);
    }
    if (rhs_) (*rhs_)[i] = -(*rhs_)[i];
  }

  IntegerMatrix& a_;
  IntegerMatrix* u_;
  IntegerMatrix* v_;
  std::vector<BigInt>* rhs_;
  std::size_t m_;
  std::size_t n_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition s{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols()), 0};
  s.rank = SmithReducer(s.D, &s.U, &s.V, nullptr).run();
  return s;
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& a) {
  IntegerMatrix d = a;
  const std::size_t r = SmithReducer(d, nullptr, nullptr, nullptr).run();
  std::vector<BigInt> out;
  out.reserve(r);
  for (std::size_t k = 0; k < r; ++k) out.push_back(d(k, k));
  return out;
}

std::optional<IntegerSolution> solve_integer_system(const IntegerMatrix& a, const std::vector<BigInt>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  IntegerMatrix d = a;
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  std::vector<BigInt> c = b;
  const std::size_t r = SmithReducer(d, nullptr, &v, &c).run();

  std::vector<BigInt> y(a.cols(), 0);
  for (std::size_t k = 0; k < r; ++k) {
    if (c[k] % d(k, k) != 0) return std::nullopt;
    y[k] = c[k] / d(k, k);
  }
  for (std::size_t k = r; k < c.size(); ++k) {
    if (c[k] != 0) return std::nullopt;
  }

  IntegerSolution solution;
  solution.particular.assign(a.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (y[k] != 0) solution.particular[i] += v(i, k) * y[k];
  for (std::size_t k = r; k < a.cols(); ++k) {
    std::vector<BigInt> column(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) column[i] = v(i, k);
    solution.kernel_basis.push_back(std::move(column));
  }
  return solution;
}

}  // namespace d2kit

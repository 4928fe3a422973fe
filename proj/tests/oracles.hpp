#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's algorithms: groups are generated by brute-force
// closure of concrete permutations or quaternions, ranks come from rational
// elimination, and invariant factors from gcds of minors.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "d2kit/fox.hpp"
#include "d2kit/group_table.hpp"
#include "d2kit/integer_matrix.hpp"
#include "d2kit/presentation.hpp"

namespace oracle {

using d2kit::BigInt;
using Rational = boost::multiprecision::cpp_rational;

// ---- presentations used throughout ----

struct CorpusEntry {
  std::string name;
  std::string text;
};

inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= 6; ++n) out.push_back({"Z/" + std::to_string(n), "<x | x^" + std::to_string(n) + ">"});
  out.push_back({"S3", "<x, y | x^2, y^3, x*y*x*y>"});
  out.push_back({"Q8", "<x, y | x^2*y^-2, y^-1*x*y*x>"});
  return out;
}

inline d2kit::GroupHandle table_of(const std::string& text, std::size_t max_cosets = d2kit::kDefaultMaxCosets) {
  return std::make_shared<const d2kit::FiniteGroupTable>(
      d2kit::todd_coxeter(d2kit::parse_presentation(text), max_cosets));
}

inline d2kit::ChainComplex cayley_of(const std::string& text) {
  const auto p = d2kit::parse_presentation(text);
  return d2kit::cayley_complex(p, std::make_shared<const d2kit::FiniteGroupTable>(d2kit::todd_coxeter(p)));
}

// ---- brute-force concrete groups ----

// A group given by explicit generator elements and a multiplication; the
// element set is the closure of the generators.
template <class T>
struct ConcreteGroup {
  std::function<T(const T&, const T&)> multiply;
  T identity;
  std::vector<T> generators;

  std::vector<T> elements() const {
    std::vector<T> out{identity};
    std::map<T, bool> seen{{identity, true}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const T& g : generators) {
        T next = multiply(out[i], g);
        if (!seen.count(next)) {
          seen[next] = true;
          out.push_back(next);
        }
      }
    }
    return out;
  }

  T inverse(const T& a) const {
    for (const T& b : elements()) {
      if (multiply(a, b) == identity) return b;
    }
    return identity;
  }

  T evaluate(const d2kit::GroupWord& w) const {
    T acc = identity;
    for (const auto& letter : w.letters()) {
      const T& g = generators.at(letter.generator);
      acc = multiply(acc, letter.exponent > 0 ? g : inverse(g));
    }
    return acc;
  }
};

using Permutation = std::vector<int>;

// (a*b)(i) = a(b(i)) on points 0..n-1.
inline Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline ConcreteGroup<Permutation> cyclic_permutations(int n) {
  Permutation id(static_cast<std::size_t>(n)), shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    id[static_cast<std::size_t>(i)] = i;
    shift[static_cast<std::size_t>(i)] = (i + 1) % n;
  }
  return {compose_permutations, id, {shift}};
}

// x = (0 1), y = (0 1 2).
inline ConcreteGroup<Permutation> symmetric3() {
  return {compose_permutations, {0, 1, 2}, {{1, 0, 2}, {1, 2, 0}}};
}

using Quaternion = std::array<int, 4>;  // a + b i + c j + d k

inline Quaternion multiply_quaternions(const Quaternion& p, const Quaternion& q) {
  const auto [a1, b1, c1, d1] = p;
  const auto [a2, b2, c2, d2] = q;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

// x = i, y = j.
inline ConcreteGroup<Quaternion> quaternion_units() {
  return {multiply_quaternions, {1, 0, 0, 0}, {{0, 1, 0, 0}, {0, 0, 1, 0}}};
}

// True when g -> oracle.evaluate(word(g)) is a bijective homomorphism from
// the table onto the concrete group.
template <class T>
bool table_matches(const d2kit::FiniteGroupTable& t, const ConcreteGroup<T>& g) {
  const std::vector<T> elements = g.elements();
  if (elements.size() != t.order()) return false;
  std::vector<T> image;
  std::map<T, int> hits;
  for (d2kit::ElementIndex a = 0; a < t.order(); ++a) {
    image.push_back(g.evaluate(t.word(a)));
    if (hits[image.back()]++ > 0) return false;
  }
  for (std::size_t i = 0; i < t.presentation().generator_count(); ++i) {
    if (image[t.generator_image(i)] != g.generators[i]) return false;
  }
  for (d2kit::ElementIndex a = 0; a < t.order(); ++a) {
    for (d2kit::ElementIndex b = 0; b < t.order(); ++b) {
      if (image[t.multiply(a, b)] != g.multiply(image[a], image[b])) return false;
    }
  }
  return true;
}

// ---- exact linear algebra ----

inline std::vector<std::vector<Rational>> to_rational(const d2kit::IntegerMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = Rational(a(r, c));
  }
  return m;
}

// Gaussian elimination over Q; returns the rank and, for square input, the
// determinant through `det`.
inline std::size_t rational_rank(const d2kit::IntegerMatrix& a, Rational* det = nullptr) {
  auto m = to_rational(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != rank) {
      std::swap(m[p], m[rank]);
      d = -d;
    }
    d *= m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  if (det) *det = rank == rows && rows == cols ? d : Rational(0);
  return rank;
}

inline Rational rational_determinant(const d2kit::IntegerMatrix& a) {
  Rational d;
  rational_rank(a, &d);
  return d;
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Determinant by cofactor expansion; only for the small minors below.
inline BigInt cofactor_determinant(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][c] * cofactor_determinant(minor);
    total += c % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Nonzero invariant factors as d_k / d_{k-1}, d_k the gcd of all k x k minors.
inline std::vector<BigInt> invariant_factors_by_minors(const d2kit::IntegerMatrix& a) {
  std::vector<BigInt> factors;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, row_sets);
    subsets(a.cols(), k, 0, cur, col_sets);
    BigInt d = 0;
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        std::vector<std::vector<BigInt>> m;
        for (std::size_t r : rs) {
          std::vector<BigInt> row;
          for (std::size_t c : cs) row.push_back(a(r, c));
          m.push_back(std::move(row));
        }
        d = gcd(d, cofactor_determinant(m));
      }
    }
    if (d == 0) break;
    factors.push_back(d / previous);
    previous = d;
  }
  return factors;
}

// Free rank of H_i from rational ranks of the expanded boundaries.
inline std::size_t betti_number(const d2kit::ChainComplex& c, std::size_t degree) {
  const auto& t = *c.group();
  const std::size_t n = c.rank(degree) * t.order();
  const std::size_t in = degree == 0 ? 0 : rational_rank(d2kit::expand_matrix(c.boundary(degree), t));
  const std::size_t out =
      degree + 1 > c.top_degree() ? 0 : rational_rank(d2kit::expand_matrix(c.boundary(degree + 1), t));
  return n - in - out;
}

// ---- random data ----

inline d2kit::IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  d2kit::IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

// A uniformly chosen reduced word: each letter avoids cancelling the last.
inline d2kit::GroupWord random_reduced_word(std::mt19937_64& rng, std::size_t generators, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<d2kit::Letter> letters;
  const std::size_t n = length(rng);
  while (letters.size() < n) {
    d2kit::Letter l{static_cast<std::uint32_t>(gen(rng)), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return d2kit::GroupWord::from_letters(letters);
}

}  // namespace oracle

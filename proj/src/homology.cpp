#include "d2kit/homology.hpp"

#include <numeric>
#include <stdexcept>

#include "d2kit/errors.hpp"
#include "d2kit/smith.hpp"

namespace d2kit {

std::string to_string(const HomologyGroup& h) {
  if (h.is_zero()) return "0";
  std::string out;
  if (h.free_rank > 0) out = h.free_rank == 1 ? "Z" : "Z^" + std::to_string(h.free_rank);
  for (const BigInt& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + to_decimal(t);
  }
  return out;
}

namespace {

const FiniteGroupTable& require_table(const ChainComplex& c) {
  if (c.is_symbolic()) throw SymbolicNotSupported("homology needs a finite group table");
  return *c.group();
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, std::size_t degree) {
  const FiniteGroupTable& t = require_table(c);
  if (degree > c.top_degree()) throw std::out_of_range("homology degree above the top of the complex");

  const std::size_t n = c.rank(degree) * t.order();
  const std::size_t incoming_rank =
      degree == 0 ? 0 : invariant_factors(expand_matrix(c.boundary(degree), t)).size();
  std::vector<BigInt> outgoing;
  if (degree < c.top_degree()) outgoing = invariant_factors(expand_matrix(c.boundary(degree + 1), t));

  HomologyGroup h;
  h.free_rank = n - incoming_rank - outgoing.size();
  for (const BigInt& d : outgoing) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

std::vector<HomologyGroup> homology_all(const ChainComplex& c) {
  std::vector<HomologyGroup> out;
  for (std::size_t i = 0; i <= c.top_degree(); ++i) out.push_back(homology(c, i));
  return out;
}

TwoComplexReport verify_two_complex(const ChainComplex& c) {
  require_table(c);
  if (c.top_degree() != 2) throw DimensionMismatch("an algebraic 2-complex has degrees 0, 1, 2");

  TwoComplexReport report;
  report.checks = verify_complex(c);
  const bool composites_vanish = report.checks.passed();

  if (!c.augmentation()) {
    const auto values = augment_columns(standard_augmentation(c.rank(0)), c.boundary(1));
    for (std::size_t col = 0; col < values.size(); ++col) {
      if (values[col] != 0) {
        report.checks.violations.push_back(
            {"augmentation∘d1 = 0", 1, 0, col, "column augments to " + to_decimal(values[col])});
      }
    }
  }
  const auto values = c.augmentation().value_or(standard_augmentation(c.rank(0)));
  BigInt g = 0;
  for (const BigInt& v : values) g = gcd(g, v);
  if (g != 1) {
    report.checks.violations.push_back({"augmentation onto Z", 0, 0, 0, "augmentation values have gcd " + to_decimal(g)});
  }

  if (!composites_vanish) return report;
  report.homology = homology_all(c);
  if (!report.homology[0].is_integers()) {
    report.checks.violations.push_back({"H0 = Z", 0, 0, 0, "H0 = " + to_string(report.homology[0])});
  }
  if (!report.homology[1].is_zero()) {
    report.checks.violations.push_back({"H1 = 0", 1, 0, 0, "H1 = " + to_string(report.homology[1])});
  }
  return report;
}

}  // namespace d2kit

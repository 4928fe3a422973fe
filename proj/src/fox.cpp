#include "d2kit/fox.hpp"

#include <stdexcept>

#include "d2kit/errors.hpp"

namespace d2kit {

SymbolicDerivative fox_derivative(const GroupWord& w, std::size_t generator, std::size_t generator_count) {
  if (generator >= generator_count) throw std::out_of_range("Fox derivative: generator index out of range");
  if (w.generator_bound() > generator_count) throw std::out_of_range("Fox derivative: word letter out of range");

  // Unrolled product rule: each occurrence of x contributes its prefix,
  // each occurrence of x^-1 contributes -(prefix * x^-1).
  GroupRingElement::SymbolicTerms terms;
  std::vector<Letter> prefix;
  for (const Letter& l : w.letters()) {
    if (l.generator == generator) {
      if (l.exponent > 0) {
        terms[free_reduce(prefix)] += 1;
      } else {
        std::vector<Letter> through = prefix;
        through.push_back(l);
        terms[free_reduce(through)] -= 1;
      }
    }
    prefix.push_back(l);
  }
  return GroupRingElement::symbolic(std::move(terms));
}

GroupRingElement project(const GroupRingElement& d, const GroupHandle& t) {
  if (!t) throw std::invalid_argument("project needs a group table");
  if (!d.is_symbolic()) {
    if (d.group() != t && !d.group()->same_group(*t)) throw FlavorMismatch("element is over a different group");
    return d;
  }
  GroupRingElement::TabularTerms terms;
  for (const auto& [word, c] : d.symbolic_terms()) terms[evaluate_word(*t, word)] += c;
  return GroupRingElement::tabular(t, std::move(terms));
}

GroupRingMatrix project(const GroupRingMatrix& m, const GroupHandle& t) {
  GroupRingMatrix out(m.rows(), m.cols(), t);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, project(m(i, j), t));
  return out;
}

GroupRingMatrix fox_jacobian(const GroupPresentation& p) {
  const std::size_t g = p.generator_count();
  GroupRingMatrix d2(g, p.relators.size(), nullptr);
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (std::size_t i = 0; i < g; ++i) d2.set(i, j, fox_derivative(p.relators[j], i, g));
  return d2;
}

ChainComplex cayley_complex(const GroupPresentation& p) {
  const std::size_t g = p.generator_count();
  GroupRingMatrix d1(1, g, nullptr);
  for (std::size_t i = 0; i < g; ++i) {
    d1.set(0, i,
           GroupRingElement::word(GroupWord::generator(static_cast<std::uint32_t>(i))) -
               GroupRingElement::word(GroupWord()));
  }
  return ChainComplex(nullptr, {1, g, p.relators.size()}, {std::move(d1), fox_jacobian(p)}, standard_augmentation(1));
}

ChainComplex cayley_complex(const GroupPresentation& p, const GroupHandle& t) {
  if (!t) throw std::invalid_argument("cayley_complex needs a group table");
  if (t->presentation().generator_count() != p.generator_count()) {
    throw DimensionMismatch("group table was enumerated from a different generating set");
  }
  const ChainComplex symbolic = cayley_complex(p);
  return ChainComplex(t, symbolic.ranks(), {project(symbolic.boundary(1), t), project(symbolic.boundary(2), t)},
                      symbolic.augmentation());
}

}  // namespace d2kit

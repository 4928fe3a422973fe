#include "d2kit/solve.hpp"

#include <algorithm>
#include <deque>

#include "d2kit/errors.hpp"
#include "zg_linear_system.hpp"

namespace d2kit {

namespace {

using detail::ZGLinearSystem;

GroupHandle common_group(const ChainComplex& source, const ChainComplex& target) {
  if (source.is_symbolic() || target.is_symbolic()) {
    throw SymbolicNotSupported("solving for chain maps needs a finite group table");
  }
  if (source.group() != target.group() && !source.group()->same_group(*target.group())) {
    throw FlavorMismatch("complexes are over different groups");
  }
  return source.group();
}

// Unknown ids of phi_0..phi_top, with every commuting square and the
// augmentation condition added. `keep` owns the operand matrices.
std::vector<std::size_t> add_chain_map_unknowns(ZGLinearSystem& system, const ChainComplex& source,
                                                const ChainComplex& target, std::deque<GroupRingMatrix>& keep) {
  const std::size_t top = source.top_degree();
  std::vector<std::size_t> phi;
  for (std::size_t i = 0; i <= top; ++i) phi.push_back(system.add_unknown(target.rank(i), source.rank(i)));
  for (std::size_t i = 1; i <= top; ++i) {
    keep.push_back(target.boundary(i));
    const GroupRingMatrix* outer = &keep.back();
    keep.push_back(source.boundary(i));
    const GroupRingMatrix* inner = &keep.back();
    system.add_equation({{phi[i], outer, nullptr, 1}, {phi[i - 1], nullptr, inner, -1}},
                        GroupRingMatrix(target.rank(i - 1), source.rank(i), source.group()));
  }
  if (source.augmentation() && target.augmentation()) {
    system.add_augmentation_equation(phi[0], *target.augmentation(), *source.augmentation());
  }
  return phi;
}

std::pair<ChainComplex, ChainComplex> same_length(const ChainComplex& a, const ChainComplex& b) {
  const std::size_t top = std::max(a.top_degree(), b.top_degree());
  return {a.padded_to(top), b.padded_to(top)};
}

// Identity where the shapes allow it: 1 on the diagonal, 0 elsewhere.
GroupRingMatrix padded_identity(std::size_t rows, std::size_t cols, const GroupHandle& group) {
  GroupRingMatrix m(rows, cols, group);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) m.set(i, i, GroupRingElement::one(group));
  return m;
}

std::vector<GroupRingMatrix> padded_identities(const ChainComplex& source, const ChainComplex& target) {
  std::vector<GroupRingMatrix> out;
  for (std::size_t i = 0; i <= source.top_degree(); ++i) {
    out.push_back(padded_identity(target.rank(i), source.rank(i), source.group()));
  }
  return out;
}

std::vector<BigInt> shifted(const std::vector<BigInt>& base, const std::vector<BigInt>& direction, int sign) {
  std::vector<BigInt> out = base;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * direction[i];
  return out;
}

std::optional<EquivalenceCertificate> complete_certificate(const ChainComplex& source, const ChainComplex& target,
                                                           const ChainMapCert& forward) {
  const GroupHandle group = source.group();
  const std::size_t top = source.top_degree();

  // Backward map and source homotopy together: psi∘phi - 1 = d h + h d is
  // linear in (psi, h) once phi is fixed.
  ZGLinearSystem system(group);
  std::deque<GroupRingMatrix> keep;
  const auto psi = add_chain_map_unknowns(system, target, source, keep);
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < top; ++i) h.push_back(system.add_unknown(source.rank(i + 1), source.rank(i)));
  for (std::size_t i = 0; i <= top; ++i) {
    std::vector<ZGLinearSystem::Term> terms{{psi[i], nullptr, &forward.maps[i], 1}};
    if (i < top) {
      keep.push_back(source.boundary(i + 1));
      terms.push_back({h[i], &keep.back(), nullptr, -1});
    }
    if (i > 0) {
      keep.push_back(source.boundary(i));
      terms.push_back({h[i - 1], nullptr, &keep.back(), -1});
    }
    system.add_equation(terms, GroupRingMatrix::identity(source.rank(i), group));
  }
  std::vector<GroupRingMatrix> start = padded_identities(target, source);
  for (std::size_t i = 0; i < top; ++i) start.emplace_back(source.rank(i + 1), source.rank(i), group);
  const auto solution = system.solve_near(system.pack(start));
  if (!solution) return std::nullopt;
  auto parts = system.unpack(solution->particular);

  EquivalenceCertificate e;
  e.forward = forward;
  e.backward = ChainMapCert{target, source, {parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(top + 1)}};
  e.homotopy_source.assign(parts.begin() + static_cast<std::ptrdiff_t>(top + 1), parts.end());

  std::vector<GroupRingMatrix> difference;
  for (std::size_t i = 0; i <= top; ++i) {
    difference.push_back(compose(e.forward.maps[i], e.backward.maps[i]) -
                         GroupRingMatrix::identity(target.rank(i), group));
  }
  auto ht = solve_homotopy(target, difference);
  if (!ht) return std::nullopt;
  e.homotopy_target = std::move(*ht);
  if (!verify_equivalence(e).passed()) return std::nullopt;
  return e;
}

}  // namespace

std::optional<ChainMapCert> solve_chain_map(const ChainComplex& source_in, const ChainComplex& target_in) {
  const GroupHandle group = common_group(source_in, target_in);
  const auto [source, target] = same_length(source_in, target_in);
  ZGLinearSystem system(group);
  std::deque<GroupRingMatrix> keep;
  add_chain_map_unknowns(system, source, target, keep);
  const auto solution = system.solve();
  if (!solution) return std::nullopt;
  return ChainMapCert{source, target, system.unpack(solution->particular)};
}

std::optional<std::vector<GroupRingMatrix>> solve_homotopy(const ChainComplex& c,
                                                           const std::vector<GroupRingMatrix>& difference) {
  if (c.is_symbolic()) throw SymbolicNotSupported("solving for homotopies needs a finite group table");
  const std::size_t top = c.top_degree();
  if (difference.size() != top + 1) throw DimensionMismatch("one difference matrix per degree required");
  ZGLinearSystem system(c.group());
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < top; ++i) h.push_back(system.add_unknown(c.rank(i + 1), c.rank(i)));
  std::vector<GroupRingMatrix> boundaries;
  boundaries.reserve(top + 2);
  for (std::size_t i = 0; i <= top + 1; ++i) boundaries.push_back(c.boundary(i));
  for (std::size_t i = 0; i <= top; ++i) {
    std::vector<ZGLinearSystem::Term> terms;
    if (i < top) terms.push_back({h[i], &boundaries[i + 1], nullptr, 1});
    if (i > 0) terms.push_back({h[i - 1], nullptr, &boundaries[i], 1});
    if (terms.empty()) {
      if (!difference[i].is_zero()) return std::nullopt;
      continue;
    }
    system.add_equation(terms, difference[i]);
  }
  const auto solution = system.solve();
  if (!solution) return std::nullopt;
  return system.unpack(solution->particular);
}

std::optional<EquivalenceCertificate> find_equivalence(const ChainComplex& source_in, const ChainComplex& target_in,
                                                       const EquivalenceSearchOptions& options) {
  const GroupHandle group = common_group(source_in, target_in);
  const auto [source, target] = same_length(source_in, target_in);
  if (source == target) return identity_certificate(source);

  ZGLinearSystem system(group);
  std::deque<GroupRingMatrix> keep;
  add_chain_map_unknowns(system, source, target, keep);
  // Searching near the identity keeps the free summands of stabilized
  // complexes mapped isomorphically, which a zero start would lose.
  const auto solution = system.solve_near(system.pack(padded_identities(source, target)));
  if (!solution) return std::nullopt;

  std::vector<std::vector<BigInt>> candidates{solution->particular};
  for (const auto& k : solution->kernel_basis) {
    if (candidates.size() >= options.max_candidates) break;
    candidates.push_back(shifted(solution->particular, k, +1));
    if (candidates.size() >= options.max_candidates) break;
    candidates.push_back(shifted(solution->particular, k, -1));
  }
  for (const auto& x : candidates) {
    const ChainMapCert forward{source, target, system.unpack(x)};
    if (auto e = complete_certificate(source, target, forward)) return e;
  }
  return std::nullopt;
}

}  // namespace d2kit

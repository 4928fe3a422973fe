#include "d2kit/realization.hpp"

#include <string>

#include "d2kit/errors.hpp"
#include "d2kit/smith.hpp"

namespace d2kit {

namespace {

bool same_shape_and_boundaries(const ChainComplex& a, const ChainComplex& b) {
  return a.with_augmentation(std::nullopt) == b.with_augmentation(std::nullopt);
}

// Rows `offset`.. of a (offset + n) x n matrix hold the identity.
GroupRingMatrix inclusion(std::size_t offset, std::size_t n, const GroupHandle& group) {
  GroupRingMatrix m(offset + n, n, group);
  m.set_block(offset, 0, GroupRingMatrix::identity(n, group));
  return m;
}

GroupRingMatrix projection(std::size_t offset, std::size_t n, std::size_t total, const GroupHandle& group) {
  GroupRingMatrix m(n, total, group);
  m.set_block(0, offset, GroupRingMatrix::identity(n, group));
  return m;
}

GroupRingMatrix pad_rows(const GroupRingMatrix& m, std::size_t extra) {
  GroupRingMatrix out(m.rows() + extra, m.cols(), m.group());
  out.set_block(0, 0, m);
  return out;
}

ChainComplex wedge(const ChainComplex& c, std::size_t n) {
  const std::size_t top = c.top_degree();
  if (top == 0) throw DimensionMismatch("cannot add summands above degree 0");
  std::vector<std::size_t> ranks = c.ranks();
  ranks[top] += n;
  std::vector<GroupRingMatrix> boundaries = c.boundaries();
  boundaries[top - 1] = pad_columns(boundaries[top - 1], n);
  return ChainComplex(c.group(), std::move(ranks), std::move(boundaries), c.augmentation());
}

}  // namespace

AlgebraicTwoComplex::AlgebraicTwoComplex(ChainComplex c) : complex_(std::move(c)) {
  if (complex_.top_degree() != 2) throw DimensionMismatch("an algebraic 2-complex has degrees 0, 1, 2");
}

StabilizationPlan make_stabilization_plan(const AlgebraicTwoComplex& source,
                                          const AlgebraicTwoComplex& presentation_complex, std::size_t rank_Q) {
  const GroupHandle& a = source.group();
  const GroupHandle& c = presentation_complex.group();
  if (!a || !c) throw SymbolicNotSupported("stabilization needs complexes over a finite group table");
  if (a != c && !a->same_group(*c)) throw FlavorMismatch("complexes are over different groups");
  StabilizationPlan plan{source, presentation_complex, 0, 0, rank_Q};
  plan.rank_C = source.rank(2) + presentation_complex.rank(1) + source.rank(0);
  plan.rank_S = presentation_complex.rank(2) + source.rank(1) + presentation_complex.rank(0);
  return plan;
}

AlgebraicTwoComplex wedge_spheres(const AlgebraicTwoComplex& c, std::size_t n) {
  return AlgebraicTwoComplex(wedge(c.complex(), n));
}

AlgebraicTwoComplex stabilized_source(const StabilizationPlan& plan) {
  return wedge_spheres(plan.source, plan.rank_S);
}

AlgebraicTwoComplex stabilized_presentation(const StabilizationPlan& plan) {
  return wedge_spheres(plan.presentation_complex, plan.rank_C);
}

APrime build_A_prime(const AlgebraicTwoComplex& a, std::size_t extra_rank) {
  const GroupHandle& group = a.group();
  const std::size_t s0 = a.rank(0);
  const std::size_t s1 = a.rank(1);
  const std::size_t s2 = a.rank(2);
  const std::size_t r = extra_rank;

  ChainComplex a_prime(group, {s0, s1, s2 + r, r},
                       {a.boundary(1), pad_columns(a.boundary(2), r), inclusion(s2, r, group)},
                       a.complex().augmentation());
  const ChainComplex source = a.complex().padded_to(3);

  ChainMapCert forward{source, a_prime,
                       {GroupRingMatrix::identity(s0, group), GroupRingMatrix::identity(s1, group),
                        pad_rows(GroupRingMatrix::identity(s2, group), r), GroupRingMatrix(r, 0, group)}};
  ChainMapCert backward{a_prime, source,
                        {GroupRingMatrix::identity(s0, group), GroupRingMatrix::identity(s1, group),
                         projection(0, s2, s2 + r, group), GroupRingMatrix(0, r, group)}};

  std::vector<GroupRingMatrix> h_target = zero_homotopy(a_prime);
  h_target[2] = -projection(s2, r, s2 + r, group);

  return {a_prime, {std::move(forward), std::move(backward), zero_homotopy(source), std::move(h_target)}};
}

EquivalenceCertificate extend_by_identity(const EquivalenceCertificate& e, std::size_t q) {
  if (q == 0) return e;
  const std::size_t top = e.forward.source.top_degree();
  if (top == 0) throw DimensionMismatch("cannot extend a degree-0 certificate");
  const GroupHandle& group = e.forward.source.group();
  const ChainComplex source = wedge(e.forward.source, q);
  const ChainComplex target = wedge(e.forward.target, q);

  auto extend_map = [&](const ChainMapCert& m, const ChainComplex& from, const ChainComplex& to) {
    ChainMapCert out{from, to, m.maps};
    out.maps[top] = direct_sum(m.maps[top], GroupRingMatrix::identity(q, group));
    return out;
  };
  auto extend_homotopy = [&](std::vector<GroupRingMatrix> h) {
    if (h.size() != top) throw DimensionMismatch("homotopy count differs from top degree");
    h[top - 1] = pad_rows(h[top - 1], q);
    return h;
  };
  return {extend_map(e.forward, source, target), extend_map(e.backward, target, source),
          extend_homotopy(e.homotopy_source), extend_homotopy(e.homotopy_target)};
}

RealizedThreeComplex build_realizing_complex(const StabilizationPlan& plan, const EquivalenceCertificate& e) {
  const VerificationReport check = verify_equivalence(e);
  if (!check.passed()) throw CertificateRejected("equivalence certificate: " + check.first_failure()->describe());

  const std::size_t q = plan.rank_Q;
  const ChainComplex expected_source = wedge_spheres(plan.source, plan.rank_S + q).complex();
  const ChainComplex expected_target = wedge_spheres(plan.presentation_complex, plan.rank_C + q).complex();
  if (!same_shape_and_boundaries(e.forward.source, expected_source)) {
    throw DimensionMismatch("certificate source is not S_2 + (S + Q) -> S_1 -> S_0 for this plan");
  }
  if (!same_shape_and_boundaries(e.forward.target, expected_target)) {
    throw DimensionMismatch("certificate target is not C_2 + (C + Q) -> C_1 -> C_0 for this plan");
  }

  const GroupHandle& group = plan.presentation_complex.group();
  const std::size_t s2 = plan.source.rank(2);
  const std::size_t m = plan.rank_S + q;
  const GroupRingMatrix d3 = compose(e.forward.maps[2], inclusion(s2, m, group));

  const ChainComplex& c = expected_target;
  RealizedThreeComplex y{ChainComplex(group, {c.rank(0), c.rank(1), c.rank(2), m},
                                      {c.boundary(1), c.boundary(2), d3}, plan.presentation_complex.complex().augmentation()),
                         {}};
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<GroupRingElement> column;
    for (std::size_t i = 0; i < d3.rows(); ++i) column.push_back(d3(i, j));
    y.attaching_vectors.push_back(std::move(column));
  }

  const VerificationReport complex_check = verify_complex(y.complex);
  if (!complex_check.passed()) {
    throw CertificateRejected("realized complex: " + complex_check.first_failure()->describe());
  }
  return y;
}

EquivalenceCertificate assemble_realization_certificate(const ChainComplex& a_prime, const RealizedThreeComplex& y,
                                                        const EquivalenceCertificate& e) {
  const ChainComplex& target = y.complex;
  if (a_prime.top_degree() != 3 || target.top_degree() != 3) throw DimensionMismatch("expected 3-complexes");
  if (e.forward.maps.size() != 3 || e.homotopy_source.size() != 2 || e.homotopy_target.size() != 2) {
    throw DimensionMismatch("expected an equivalence between 2-complexes");
  }
  const std::size_t m = a_prime.rank(3);
  if (target.rank(3) != m) throw DimensionMismatch("degree-3 ranks of A' and C(Y) differ");
  const GroupHandle& group = a_prime.group();

  EquivalenceCertificate out;
  out.forward = ChainMapCert{a_prime, target, e.forward.maps};
  out.forward.maps.push_back(GroupRingMatrix::identity(m, group));
  out.backward = ChainMapCert{target, a_prime, e.backward.maps};
  out.backward.maps.push_back(GroupRingMatrix::identity(m, group));
  out.homotopy_source = e.homotopy_source;
  out.homotopy_source.emplace_back(m, a_prime.rank(2), group);
  out.homotopy_target = e.homotopy_target;
  out.homotopy_target.emplace_back(m, target.rank(2), group);
  return out;
}

VerificationReport verify_realization(const ChainComplex& a_prime, const RealizedThreeComplex& y,
                                      const EquivalenceCertificate& e) {
  VerificationReport report = verify_equivalence(assemble_realization_certificate(a_prime, y, e));

  const GroupRingMatrix d2 = y.complex.boundary(2);
  const GroupRingMatrix d3 = y.complex.boundary(3);
  if (y.attaching_vectors.size() != d3.cols()) {
    report.violations.push_back({"one attaching vector per 3-cell", 3, 0, 0,
                                 std::to_string(y.attaching_vectors.size()) + " vectors for " +
                                     std::to_string(d3.cols()) + " cells"});
    return report;
  }
  for (std::size_t j = 0; j < d3.cols(); ++j) {
    const auto& v = y.attaching_vectors[j];
    if (v.size() != d3.rows()) {
      report.violations.push_back({"attaching vector length", 3, 0, j, "wrong length"});
      continue;
    }
    GroupRingMatrix column(d3.rows(), 1, d3.group());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] == d3(i, j))) report.violations.push_back({"attaching vector is column of d3", 3, i, j, "differs"});
      column.set(i, 0, v[i]);
    }
    const GroupRingMatrix image = compose(d2, column);
    for (std::size_t k = 0; k < image.rows(); ++k) {
      if (!image(k, 0).is_zero()) {
        report.violations.push_back({"attaching vector lies in ker(d2 + 0)", 3, k, j, "nonzero boundary"});
      }
    }
  }
  const std::size_t expanded_rank = invariant_factors(expand_matrix(d3, *y.complex.group())).size();
  const std::size_t columns = d3.cols() * y.complex.group()->order();
  if (expanded_rank != columns) {
    report.violations.push_back({"H3 = 0 (d3 injective)", 3, 0, 0,
                                 "expanded rank " + std::to_string(expanded_rank) + " of " + std::to_string(columns)});
  }
  return report;
}

RealizationResult realize(const StabilizationPlan& plan, const EquivalenceCertificate& stable_equivalence) {
  RealizationResult result;
  result.extended = extend_by_identity(stable_equivalence, plan.rank_Q);
  result.realized = build_realizing_complex(plan, result.extended);
  result.a_prime = build_A_prime(plan.source, plan.rank_S + plan.rank_Q);
  result.certificate = assemble_realization_certificate(result.a_prime.complex, result.realized, result.extended);
  result.report = verify_realization(result.a_prime.complex, result.realized, result.extended);
  return result;
}

}  // namespace d2kit

#pragma once

#include <cstddef>
#include <vector>

#include "d2kit/chain_map.hpp"

namespace d2kit {

/// A chain complex S_2 -> S_1 -> S_0 of free ZG-modules. Construction only
/// checks the length; verify_two_complex() checks the axioms.
class AlgebraicTwoComplex {
 public:
  explicit AlgebraicTwoComplex(ChainComplex c);

  const ChainComplex& complex() const noexcept { return complex_; }
  const GroupHandle& group() const noexcept { return complex_.group(); }
  std::size_t rank(std::size_t degree) const { return complex_.rank(degree); }
  GroupRingMatrix boundary(std::size_t degree) const { return complex_.boundary(degree); }

  friend bool operator==(const AlgebraicTwoComplex&, const AlgebraicTwoComplex&) = default;

 private:
  ChainComplex complex_;
};

/// Ranks for stabilizing A = (S_2 -> S_1 -> S_0) against a presentation
/// complex C_2 -> C_1 -> C_0: C = S_2 + C_1 + S_0, S = C_2 + S_1 + C_0, and
/// the free stabilizer Q.
struct StabilizationPlan {
  AlgebraicTwoComplex source;
  AlgebraicTwoComplex presentation_complex;
  std::size_t rank_C = 0;
  std::size_t rank_S = 0;
  std::size_t rank_Q = 0;
};

StabilizationPlan make_stabilization_plan(const AlgebraicTwoComplex& source,
                                          const AlgebraicTwoComplex& presentation_complex, std::size_t rank_Q = 0);

/// Adds n free summands in degree 2 with zero boundary (wedge with n 2-spheres).
AlgebraicTwoComplex wedge_spheres(const AlgebraicTwoComplex& c, std::size_t n);

/// S_2 + S -> S_1 -> S_0 and C_2 + C -> C_1 -> C_0: the two sides of the
/// equivalence the plan consumes, before extending over Q.
AlgebraicTwoComplex stabilized_source(const StabilizationPlan& plan);
AlgebraicTwoComplex stabilized_presentation(const StabilizationPlan& plan);

struct APrime {
  /// F -> S_2 + F -> S_1 -> S_0 with d_3 the inclusion of F = ZG^extra_rank
  /// into the second summand and d_2 = d_2(A) + 0.
  ChainComplex complex;
  /// Inclusion A -> A' (A padded with a zero degree-3 module), projection
  /// back, zero homotopy on A, and h_2 = -(projection onto F) on A'.
  EquivalenceCertificate inclusion;
};

APrime build_A_prime(const AlgebraicTwoComplex& a, std::size_t extra_rank);

/// Extends an equivalence between 2-complexes by the identity on q new
/// top-degree summands on both sides; homotopies are zero-padded.
EquivalenceCertificate extend_by_identity(const EquivalenceCertificate& e, std::size_t q);

struct RealizedThreeComplex {
  /// S + Q -> C_2 + (C + Q) -> C_1 -> C_0 with d_3 = phi_2 ∘ iota.
  ChainComplex complex;
  /// Columns of d_3; each lies in ker(d_2 + 0).
  std::vector<std::vector<GroupRingElement>> attaching_vectors;
};

/// Builds the realizing 3-complex from an equivalence between
/// S_2 + (S + Q) -> S_1 -> S_0 and C_2 + (C + Q) -> C_1 -> C_0.
/// Throws CertificateRejected if `e` does not verify and DimensionMismatch
/// if it relates the wrong complexes.
RealizedThreeComplex build_realizing_complex(const StabilizationPlan& plan, const EquivalenceCertificate& e);

/// The equivalence A' -> C(Y) given by (phi_0, phi_1, phi_2, 1) and
/// (psi_0, psi_1, psi_2, 1), with the homotopies of `e` extended by zero.
EquivalenceCertificate assemble_realization_certificate(const ChainComplex& a_prime, const RealizedThreeComplex& y,
                                                        const EquivalenceCertificate& e);

/// Verifies the assembled certificate, that each attaching vector is the
/// matching column of d_3 and lies in ker(d_2 + 0), and that d_3 is
/// injective after integer expansion (H_3 = 0).
VerificationReport verify_realization(const ChainComplex& a_prime, const RealizedThreeComplex& y,
                                      const EquivalenceCertificate& e);

struct RealizationResult {
  APrime a_prime;
  EquivalenceCertificate extended;
  RealizedThreeComplex realized;
  EquivalenceCertificate certificate;
  VerificationReport report;
};

/// End to end: extend `stable_equivalence` (between stabilized_source and
/// stabilized_presentation) over Q, build A', build C(Y), verify.
RealizationResult realize(const StabilizationPlan& plan, const EquivalenceCertificate& stable_equivalence);

}  // namespace d2kit

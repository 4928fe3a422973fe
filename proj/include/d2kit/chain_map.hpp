#pragma once

#include <cstddef>
#include <vector>

#include "d2kit/chain_complex.hpp"

namespace d2kit {

/// Degreewise maps phi_i : source_i -> target_i, each target.rank(i) x source.rank(i).
struct ChainMapCert {
  ChainComplex source;
  ChainComplex target;
  std::vector<GroupRingMatrix> maps;
};

/// Chain maps both ways plus homotopies h_i : C_i -> C_{i+1} (i = 0..top-1)
/// with backward∘forward - 1 = d h + h d on the source and
/// forward∘backward - 1 = d h + h d on the target.
struct EquivalenceCertificate {
  ChainMapCert forward;
  ChainMapCert backward;
  std::vector<GroupRingMatrix> homotopy_source;
  std::vector<GroupRingMatrix> homotopy_target;
};

ChainMapCert identity_map(const ChainComplex& c);
ChainMapCert zero_map(const ChainComplex& source, const ChainComplex& target);
EquivalenceCertificate identity_certificate(const ChainComplex& c);

/// Zero homotopies of the right shapes for `c`.
std::vector<GroupRingMatrix> zero_homotopy(const ChainComplex& c);

/// Checks d∘phi_i = phi_{i-1}∘d for every square and, when both complexes
/// carry an augmentation, that phi_0 preserves it. Throws DimensionMismatch
/// when the maps do not fit the complexes.
VerificationReport verify_chain_map(const ChainMapCert& m);

/// Both chain-map conditions plus both homotopy identities, exactly.
VerificationReport verify_equivalence(const EquivalenceCertificate& e);

/// Degreewise composite g∘f.
ChainMapCert compose(const ChainMapCert& g, const ChainMapCert& f);

/// d_{i+1} h_i + h_{i-1} d_i for each degree i.
std::vector<GroupRingMatrix> homotopy_boundary(const ChainComplex& c, const std::vector<GroupRingMatrix>& h);

}  // namespace d2kit

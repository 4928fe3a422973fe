#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d2kit/chain_map.hpp"

namespace d2kit {

/// Finds an integer solution of the commuting-square system for a chain map
/// source -> target over the expanded representation (augmentation-preserving
/// when both complexes carry an augmentation). Free parameters are set to
/// zero, so the result is deterministic. Complexes of different length are
/// padded with zero modules. Throws SymbolicNotSupported.
std::optional<ChainMapCert> solve_chain_map(const ChainComplex& source, const ChainComplex& target);

/// Finds h with d h + h d = difference (one square matrix per degree), or nullopt.
std::optional<std::vector<GroupRingMatrix>> solve_homotopy(const ChainComplex& c,
                                                           const std::vector<GroupRingMatrix>& difference);

struct EquivalenceSearchOptions {
  /// Chain maps source -> target tried before giving up.
  std::size_t max_candidates = 16;
};

/// Bounded search for a chain homotopy equivalence. Candidates for the
/// forward map are the chain map nearest the padded identity (the identity
/// start corrected by a solution with free parameters zero) and its shifts
/// by single integer-kernel vectors. For each, a backward map and a
/// source homotopy are solved jointly, then a target homotopy. Returns the
/// identity certificate when the complexes are equal. Every returned
/// certificate has passed verify_equivalence.
std::optional<EquivalenceCertificate> find_equivalence(const ChainComplex& source, const ChainComplex& target,
                                                       const EquivalenceSearchOptions& options = {});

}  // namespace d2kit

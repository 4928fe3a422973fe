#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "d2kit/bigint.hpp"
#include "d2kit/chain_complex.hpp"

namespace d2kit {

/// Finitely generated abelian group Z^free_rank + sum Z/t, t > 1 ascending.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool is_integers() const noexcept { return free_rank == 1 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "0", "Z", "Z^3 + Z/2 + Z/4".
std::string to_string(const HomologyGroup& h);

/// H_i of the integer expansion: ker d_i / im d_{i+1}, read off Smith
/// normal forms. Assumes d∘d = 0. Throws SymbolicNotSupported for symbolic
/// complexes and std::out_of_range for degrees above the top.
HomologyGroup homology(const ChainComplex& c, std::size_t degree);

/// H_0 .. H_top.
std::vector<HomologyGroup> homology_all(const ChainComplex& c);

struct TwoComplexReport {
  VerificationReport checks;
  std::vector<HomologyGroup> homology;

  bool passed() const noexcept { return checks.passed(); }
};

/// Algebraic 2-complex axioms: d∘d = 0, H_1 = 0, and coker d_1 ≅ Z through
/// the augmentation (augmentation∘d_1 = 0, augmentation onto Z, H_0 ≅ Z).
/// The standard augmentation is used when none is stored. H_2 is reported
/// but not constrained.
TwoComplexReport verify_two_complex(const ChainComplex& c);

}  // namespace d2kit

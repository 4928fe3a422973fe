#pragma once

#include <cstddef>

#include "d2kit/chain_complex.hpp"
#include "d2kit/group_ring.hpp"
#include "d2kit/group_ring_matrix.hpp"
#include "d2kit/presentation.hpp"

namespace d2kit {

/// A Fox derivative: a symbolic element of the free group ring.
using SymbolicDerivative = GroupRingElement;

/// d(w)/d(x_generator) by the product rule d(uv) = du + u dv, with
/// dx/dx = 1 and dx^-1/dx = -x^-1. Throws std::out_of_range when the
/// generator (or any letter of w) is not below `generator_count`.
SymbolicDerivative fox_derivative(const GroupWord& w, std::size_t generator, std::size_t generator_count);

/// Replaces each word by its element in `t` and collects coefficients.
/// Tabular input must already be over `t` and is returned unchanged.
GroupRingElement project(const GroupRingElement& d, const GroupHandle& t);
GroupRingMatrix project(const GroupRingMatrix& m, const GroupHandle& t);

/// Generators x relators matrix of Fox derivatives, entry (i, j) = d r_j / d x_i.
GroupRingMatrix fox_jacobian(const GroupPresentation& p);

/// Chain complex of the universal cover of the presentation complex over
/// the free group ring: ranks (1, #generators, #relators), d_1 column i is
/// x_i - 1, d_2 = fox_jacobian(p). Standard augmentation on C_0.
ChainComplex cayley_complex(const GroupPresentation& p);

/// Same complex over ZG for the enumerated group `t`.
ChainComplex cayley_complex(const GroupPresentation& p, const GroupHandle& t);

}  // namespace d2kit

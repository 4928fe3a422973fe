#include <doctest.h>

#include <random>

#include "d2kit/chain_map.hpp"
#include "d2kit/errors.hpp"
#include "d2kit/realization.hpp"
#include "oracles.hpp"

using namespace d2kit;

namespace {

// Adds coefficient `delta` at group element `g` of one entry.
GroupRingMatrix bump(GroupRingMatrix m, std::size_t r, std::size_t c, ElementIndex g, int delta) {
  m.set(r, c, m(r, c) + GroupRingElement::element(m.group(), g, delta));
  return m;
}

}  // namespace

TEST_SUITE("chain_map") {
  TEST_CASE("identity and zero maps are chain maps") {
    for (const auto& entry : oracle::corpus()) {
      const auto c = oracle::cayley_of(entry.text);
      CHECK(verify_chain_map(identity_map(c)).passed());
      CHECK(verify_chain_map(zero_map(c.with_augmentation(std::nullopt), c.with_augmentation(std::nullopt))).passed());
      CHECK(verify_equivalence(identity_certificate(c)).passed());
    }
  }

  TEST_CASE("zero map fails augmentation preservation") {
    const auto c = oracle::cayley_of("<x | x^3>");
    const auto report = verify_chain_map(zero_map(c, c));
    CHECK_FALSE(report.passed());
  }

  TEST_CASE("corrupting a chain map entry is detected") {
    const auto c = oracle::cayley_of("<x, y | x^2, y^3, x*y*x*y>");
    auto m = identity_map(c);
    m.maps[1] = bump(m.maps[1], 0, 1, 2, 1);
    const auto report = verify_chain_map(m);
    REQUIRE_FALSE(report.passed());
    CHECK(report.first_failure()->degree >= 1);
  }

  TEST_CASE("flipping a homotopy entry is detected") {
    const AlgebraicTwoComplex a(oracle::cayley_of("<x | x^4>"));
    auto e = build_A_prime(a, 2).inclusion;
    REQUIRE(verify_equivalence(e).passed());
    auto& h = e.homotopy_target[2];
    REQUIRE(h(0, 1) == -GroupRingElement::one(a.group()));
    h.set(0, 1, -h(0, 1));
    CHECK_FALSE(verify_equivalence(e).passed());
  }

  TEST_CASE("shape errors are thrown") {
    const auto c = oracle::cayley_of("<x | x^2>");
    auto m = identity_map(c);
    m.maps.pop_back();
    CHECK_THROWS_AS(verify_chain_map(m), DimensionMismatch);
  }

  TEST_CASE("composition of chain maps") {
    const auto c = oracle::cayley_of("<x | x^5>");
    const auto& g = c.group();
    // Multiplication by a central unit x in each degree is a chain map (Z/5 is abelian).
    ChainMapCert shift{c, c.with_augmentation(std::nullopt), {}};
    const auto x = GroupRingElement::element(g, g->generator_image(0));
    for (std::size_t i = 0; i <= 2; ++i) {
      GroupRingMatrix m(1, 1, g);
      m.set(0, 0, x);
      shift.maps.push_back(m);
    }
    shift.source = shift.target;
    CHECK(verify_chain_map(shift).passed());
    const auto twice = compose(shift, shift);
    CHECK(verify_chain_map(twice).passed());
    CHECK(twice.maps[0](0, 0) == x * x);
  }

  TEST_CASE("homotopy boundary of a homotopy is a chain map difference") {
    std::mt19937_64 rng(61);
    const auto c = oracle::cayley_of("<x, y | x^2*y^-2, y^-1*x*y*x>");
    const auto& g = c.group();
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
    std::vector<GroupRingMatrix> h;
    for (std::size_t i = 0; i < 2; ++i) {
      GroupRingMatrix m(c.rank(i + 1), c.rank(i), g);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t col = 0; col < m.cols(); ++col) m.set(r, col, GroupRingElement::element(g, pick(rng), 1));
      }
      h.push_back(m);
    }
    // f = 1 + (dh + hd) is a chain map, and h witnesses both f∘1 ~ 1 and 1∘f ~ 1.
    const auto dh = homotopy_boundary(c.with_augmentation(std::nullopt), h);
    ChainMapCert f{c.with_augmentation(std::nullopt), c.with_augmentation(std::nullopt), {}};
    for (std::size_t i = 0; i <= 2; ++i) f.maps.push_back(GroupRingMatrix::identity(c.rank(i), g) + dh[i]);
    CHECK(verify_chain_map(f).passed());
    EquivalenceCertificate e{f, identity_map(f.source), {}, {}};
    e.homotopy_source = h;
    e.homotopy_target = h;
    CHECK(verify_equivalence(e).passed());
    e.homotopy_source[1] = bump(e.homotopy_source[1], 0, 0, 1, 1);
    CHECK_FALSE(verify_equivalence(e).passed());
  }
}

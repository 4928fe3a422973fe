#include <doctest.h>

#include "d2kit/errors.hpp"
#include "d2kit/solve.hpp"
#include "oracles.hpp"

using namespace d2kit;

TEST_SUITE("solve") {
  TEST_CASE("self maps of corpus complexes") {
    for (const auto& entry : oracle::corpus()) {
      const auto c = oracle::cayley_of(entry.text);
      const auto m = solve_chain_map(c, c);
      REQUIRE_MESSAGE(m, entry.name);
      CHECK(verify_chain_map(*m).passed());
    }
  }

  TEST_CASE("map to the zero complex is zero") {
    const auto c = oracle::cayley_of("<x | x^3>").with_augmentation(std::nullopt);
    const auto zero = ChainComplex::zero(c.group(), 2);
    const auto m = solve_chain_map(c, zero);
    REQUIRE(m);
    for (const auto& phi : m->maps) CHECK(phi.is_zero());
  }

  TEST_CASE("sign-flipped top boundary") {
    const auto c = oracle::cayley_of("<x | x^2>");
    const ChainComplex flipped(c.group(), c.ranks(), {c.boundary(1), -c.boundary(2)}, c.augmentation());
    const auto m = solve_chain_map(c, flipped);
    REQUIRE(m);
    CHECK(verify_chain_map(*m).passed());
    const auto e = find_equivalence(c, flipped);
    REQUIRE(e);
    CHECK(verify_equivalence(*e).passed());
  }

  TEST_CASE("equal complexes give the identity certificate") {
    const auto c = oracle::cayley_of("<x, y | x^2, y^3, x*y*x*y>");
    const auto e = find_equivalence(c, c);
    REQUIRE(e);
    CHECK(e->forward.maps == identity_map(c).maps);
  }

  TEST_CASE("different presentations of the same group") {
    const auto g = oracle::table_of("<x | x^3>");
    for (const char* other : {"<x | x^-3>", "<x | x^3*x^3*x^-3>", "<x | x*x*x>"}) {
      const auto a = cayley_complex(parse_presentation("<x | x^3>"), g);
      const auto b = cayley_complex(parse_presentation(other), g);
      const auto e = find_equivalence(a, b);
      REQUIRE_MESSAGE(e, other);
      CHECK(verify_equivalence(*e).passed());
    }
  }

  TEST_CASE("homotopy solving") {
    const auto c = oracle::cayley_of("<x | x^4>").with_augmentation(std::nullopt);
    const auto& g = c.group();
    // The difference dh + hd of a known h is solvable, and the solution reproduces it.
    std::vector<GroupRingMatrix> h{GroupRingMatrix::from_rows(g, {{GroupRingElement::element(g, 1, 2)}}),
                                   GroupRingMatrix::from_rows(g, {{GroupRingElement::element(g, 3, -1)}})};
    const auto diff = homotopy_boundary(c, h);
    const auto found = solve_homotopy(c, diff);
    REQUIRE(found);
    CHECK(homotopy_boundary(c, *found) == diff);
    // The identity is not null-homotopic: H_0 = Z would vanish.
    std::vector<GroupRingMatrix> identity;
    for (std::size_t i = 0; i <= 2; ++i) identity.push_back(GroupRingMatrix::identity(1, g));
    CHECK_FALSE(solve_homotopy(c, identity));
  }

  TEST_CASE("symbolic complexes are refused") {
    const auto c = cayley_complex(parse_presentation("<x | x^2>"));
    CHECK_THROWS_AS(solve_chain_map(c, c), SymbolicNotSupported);
  }
}

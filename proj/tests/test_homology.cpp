#include <doctest.h>

#include <random>

#include "d2kit/errors.hpp"
#include "d2kit/homology.hpp"
#include "oracles.hpp"

using namespace d2kit;

namespace {

ChainComplex z2_complex(const GroupRingElement& d1, const GroupRingElement& d2) {
  const auto& g = d1.group();
  return ChainComplex(g, {1, 1, 1}, {GroupRingMatrix::from_rows(g, {{d1}}), GroupRingMatrix::from_rows(g, {{d2}})},
                      standard_augmentation(1));
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Cayley complex of Z/2") {
    const auto c = oracle::cayley_of("<x | x^2>");
    CHECK(homology(c, 0).is_integers());
    CHECK(homology(c, 1).is_zero());
    CHECK(homology(c, 2) == HomologyGroup{1, {}});
    CHECK(verify_complex(c).passed());
  }

  TEST_CASE("H2 of cyclic groups has rank n-1") {
    for (int n = 2; n <= 6; ++n) {
      const auto c = oracle::cayley_of("<x | x^" + std::to_string(n) + ">");
      CHECK(homology(c, 2) == HomologyGroup{static_cast<std::size_t>(n - 1), {}});
      CHECK(oracle::betti_number(c, 2) == static_cast<std::size_t>(n - 1));
    }
  }

  TEST_CASE("corpus complexes are algebraic 2-complexes with Euler-characteristic H2") {
    for (const auto& entry : oracle::corpus()) {
      const auto c = oracle::cayley_of(entry.text);
      const auto report = verify_two_complex(c);
      CHECK_MESSAGE(report.passed(), entry.name);
      REQUIRE(report.homology.size() == 3);
      // chi = |G| (1 - g + r) = 1 - 0 + rank H2 when H0 = Z, H1 = 0, H2 free.
      const long order = static_cast<long>(c.group()->order());
      const long chi = order * (static_cast<long>(c.rank(0)) - static_cast<long>(c.rank(1)) + static_cast<long>(c.rank(2)));
      CHECK(report.homology[2] == HomologyGroup{static_cast<std::size_t>(chi - 1), {}});
      for (std::size_t i = 0; i <= 2; ++i) CHECK(report.homology[i].free_rank == oracle::betti_number(c, i));
    }
  }

  TEST_CASE("a complex with the wrong cokernel fails") {
    const auto z2 = oracle::table_of("<x | x^2>");
    const auto x = GroupRingElement::element(z2, z2->generator_image(0));
    const auto one = GroupRingElement::one(z2);
    const auto c = z2_complex(one + x, x - one);
    CHECK(verify_complex(c.with_augmentation(std::nullopt)).passed());
    const auto report = verify_two_complex(c);
    CHECK_FALSE(report.passed());
    // The cokernel of (1 + x) is Z, but the augmentation does not kill the image of d_1.
    CHECK(homology(c, 0).is_integers());
    CHECK(report.checks.first_failure()->check.find("augmentation") != std::string::npos);
  }

  TEST_CASE("non-composable boundaries fail at the right entry") {
    const auto z2 = oracle::table_of("<x | x^2>");
    const auto x = GroupRingElement::element(z2, z2->generator_image(0));
    const auto one = GroupRingElement::one(z2);
    const auto report = verify_complex(z2_complex(x - one, one));
    REQUIRE_FALSE(report.passed());
    CHECK(report.first_failure()->degree == 2);
    CHECK(report.first_failure()->row == 0);
    CHECK(report.first_failure()->col == 0);
    CHECK_FALSE(verify_two_complex(z2_complex(x - one, one)).passed());
  }

  TEST_CASE("zero boundaries over the trivial group") {
    const auto trivial = oracle::table_of("< | >");
    for (std::size_t r1 = 0; r1 <= 2; ++r1) {
      const ChainComplex c(trivial, {1, r1, 0}, {GroupRingMatrix(1, r1, trivial), GroupRingMatrix(r1, 0, trivial)},
                           standard_augmentation(1));
      CHECK(verify_complex(c).passed());
      CHECK(homology(c, 0).is_integers());
      CHECK(homology(c, 1) == HomologyGroup{r1, {}});
      CHECK(verify_two_complex(c).passed() == (r1 == 0));
    }
  }

  TEST_CASE("torsion is reported") {
    const auto trivial = oracle::table_of("< | >");
    const auto two = GroupRingElement::integer(trivial, 2);
    const ChainComplex c(trivial, {1, 1}, {GroupRingMatrix::from_rows(trivial, {{two}})});
    CHECK(homology(c, 0) == HomologyGroup{0, {BigInt(2)}});
    CHECK(to_string(homology(c, 0)) == "Z/2");
    CHECK(homology(c, 1).is_zero());
  }

  TEST_CASE("homology is invariant under a change of basis") {
    std::mt19937_64 rng(51);
    const auto c = oracle::cayley_of("<x, y | x^2, y^3, x*y*x*y>");
    const auto& g = c.group();
    const auto before = homology_all(c);
    // Multiply the degree-1 basis by an elementary automorphism e_0 -> e_0 + a e_1.
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g->order() - 1));
      auto e = GroupRingMatrix::identity(2, g);
      e.set(1, 0, GroupRingElement::element(g, pick(rng), 3));
      auto e_inv = GroupRingMatrix::identity(2, g);
      e_inv.set(1, 0, -e(1, 0));
      const ChainComplex changed(g, c.ranks(), {compose(c.boundary(1), e_inv), compose(e, c.boundary(2))},
                                 c.augmentation());
      CHECK(verify_complex(changed).passed());
      CHECK(homology_all(changed) == before);
    }
  }

  TEST_CASE("symbolic complexes and bad degrees") {
    const auto c = cayley_complex(parse_presentation("<x | x^2>"));
    CHECK_THROWS_AS(homology(c, 0), SymbolicNotSupported);
    CHECK_THROWS_AS(homology(oracle::cayley_of("<x | x^2>"), 3), std::out_of_range);
    CHECK_THROWS_AS(verify_two_complex(ChainComplex::zero(oracle::table_of("<x | x^2>"), 3)), DimensionMismatch);
  }
}

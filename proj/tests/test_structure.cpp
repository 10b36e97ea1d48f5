#include "doctest.h"
#include "oracles.hpp"
#include "wtring/classify.hpp"
#include "wtring/constructors.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"
#include "wtring/structure.hpp"

using namespace wtring;

TEST_CASE("structure of Z2 x Z8") {
  Ring r = direct_product({zmod(2), zmod(8)});
  auto c = wt_structure(r);
  CHECK(c.valid());
  CHECK(c.two_part_order == 16);
  CHECK(c.three_part_order == 1);
  CHECK(c.radical.members().members() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(c.complement.members().members() == std::vector<Elem>{0, 8});
  CHECK(c.r0_order == 8);
  REQUIRE(c.boolean_ideals.size() == 1);
  CHECK(c.boolean_ideals[0].x == 8);
  CHECK(c.boolean_ideals[0].ideal.size() == 8);
  CHECK_FALSE(c.boolean_ideals[0].ideal.contains(8));
}

TEST_CASE("structure of a Boolean ring has no idempotent-free factor") {
  auto c = wt_structure(direct_product({zmod(2), zmod(2)}));
  CHECK(c.valid());
  CHECK(c.r0_order == 0);
  CHECK(c.complement.size() == 4);
  CHECK(c.boolean_ideals.size() == 3);
}

TEST_CASE("structure of Z24 splits off a tripotent 3-part") {
  auto c = wt_structure(zmod(24));
  CHECK(c.valid());
  CHECK(c.two_part_order == 8);
  CHECK(c.three_part_order == 3);
  CHECK(c.three_part_tripotent);
  CHECK(c.complement.is_zero());
  CHECK(c.r0_order == 8);
}

TEST_CASE("structure rejects rings outside the hypothesis") {
  CHECK_THROWS_AS(wt_structure(triangular_ring(zmod(2), 2)), PreconditionError);
  CHECK_THROWS_AS(wt_structure(zmod(16)), PreconditionError);
}

TEST_CASE("certificates are independently re-verified on the corpus") {
  for (const auto& [name, r] : builtin_corpus()) {
    if (!is_commutative(r) || !oracle::weakly_tripotent(r)) continue;
    CAPTURE(name);
    auto c = wt_structure(r);
    REQUIRE(c.valid());
    if (!c.split.two_part) continue;
    const Ring& two = c.split.two_part->ring;
    // L meets J trivially and consists of idempotents.
    for (auto x : c.complement.members()) {
      CHECK(two.mul(x, x) == x);
      if (x) CHECK_FALSE(c.radical.contains(x));
    }
    // L meets the intersection of the I_x trivially.
    for (auto x : c.complement.members()) {
      if (x == 0) continue;
      bool in_all = true;
      for (const auto& b : c.boolean_ideals) in_all &= b.ideal.contains(x);
      CHECK_FALSE(in_all);
    }
    // R'/I_x is Boolean: y^2 - y lies in I_x for every y.
    for (const auto& b : c.boolean_ideals) {
      CHECK(c.radical.members().is_subset_of(b.ideal.members()));
      for (Elem y = 0; y < two.order(); ++y)
        CHECK(b.ideal.contains(two.sub(two.mul(y, y), y)));
    }
  }
}

#include "doctest.h"
#include "oracles.hpp"
#include "wtring/constructors.hpp"
#include "wtring/error.hpp"
#include "wtring/ring.hpp"

using namespace wtring;

TEST_CASE("zmod tables") {
  Ring r = zmod(6);
  CHECK(r.order() == 6);
  CHECK(r.one() == 1);
  CHECK(r.add(4, 5) == 3);
  CHECK(r.mul(4, 5) == 2);
  CHECK(r.neg(2) == 4);
  CHECK(r.label(3) == "3");
  CHECK(verify_axioms(r).empty());
  CHECK(characteristic(r) == 6);
}

TEST_CASE("zmod rejects trivial and negative moduli") {
  CHECK_THROWS_AS(zmod(1), PreconditionError);
  CHECK_THROWS_AS(zmod(0), PreconditionError);
  CHECK_THROWS_AS(zmod(-3), PreconditionError);
}

TEST_CASE("ring constructor validates shapes") {
  CHECK_THROWS_AS(Ring(2, {0, 1, 1}, {0, 0, 0, 1}, 1), MalformedInput);
  CHECK_THROWS_AS(Ring(2, {0, 1, 1, 2}, {0, 0, 0, 1}, 1), MalformedInput);
  CHECK_THROWS_AS(Ring(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0), PreconditionError);
}

TEST_CASE("broken distributivity is reported with a witness") {
  Ring z = zmod(3);
  std::vector<Elem> mul(z.mul_table().begin(), z.mul_table().end());
  mul[2 * 3 + 2] = 2;  // 2*2 = 2 instead of 1
  Ring broken(3, {z.add_table().begin(), z.add_table().end()}, mul, 1);
  auto rep = verify_axioms(broken);
  REQUIRE_FALSE(rep.empty());
  bool dist = false;
  for (const auto& v : rep) dist |= v.axiom.find("distributivity") != std::string::npos;
  CHECK(dist);
  CHECK_THROWS_AS(require_valid(broken), AxiomError);
  // The witness reproduces the violation.
  for (const auto& v : rep) {
    if (v.axiom != "left_distributivity") continue;
    auto [a, b, c] = v.witness;
    CHECK(broken.mul(a, broken.add(b, c)) != broken.add(broken.mul(a, b), broken.mul(a, c)));
  }
}

TEST_CASE("power, scalar and multiple") {
  Ring r = zmod(16);
  CHECK(power(r, 3, 4) == 1);
  CHECK(power(r, 3, 0) == 1);
  CHECK(power(r, 2, 4) == 0);
  CHECK(scalar(r, 9) == 9);
  CHECK(scalar(r, -1) == 15);
  CHECK(multiple(r, 5, 3) == 15);
  CHECK(multiple(r, -2, 3) == 10);
}

TEST_CASE("units, center, commutativity against brute force") {
  for (const Ring& r : {zmod(12), triangular_ring(zmod(2), 2), matrix_ring(zmod(2), 2)}) {
    std::vector<Elem> u, z;
    bool comm = true;
    for (Elem a = 0; a < r.order(); ++a) {
      bool unit = false, central = true;
      for (Elem b = 0; b < r.order(); ++b) {
        unit |= r.mul(a, b) == r.one() && r.mul(b, a) == r.one();
        central &= r.mul(a, b) == r.mul(b, a);
      }
      if (unit) u.push_back(a);
      if (central) z.push_back(a);
      comm &= central;
    }
    CHECK(units(r).members() == u);
    CHECK(center(r).members() == z);
    CHECK(is_commutative(r) == comm);
  }
}

TEST_CASE("element set operations") {
  ElementSet a(std::vector<Elem>{5, 1, 3, 1});
  CHECK(a.members() == std::vector<Elem>{1, 3, 5});
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  ElementSet b(std::vector<Elem>{1, 5});
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.intersect(ElementSet(std::vector<Elem>{0, 3})) == ElementSet(std::vector<Elem>{3}));
  CHECK(ElementSet::from_mask({0, 1, 0, 1}).members() == std::vector<Elem>{1, 3});
}

TEST_CASE("sampled and exhaustive axiom checks agree on a valid ring") {
  Ring big = direct_product({zmod(4), zmod(4), zmod(5)});
  REQUIRE(big.order() > 64);
  AxiomOptions opts;
  opts.samples = 20000;
  CHECK(verify_axioms(big, opts).empty());
  opts.exhaustive_limit = 1000;
  CHECK(verify_axioms(big, opts).empty());
}

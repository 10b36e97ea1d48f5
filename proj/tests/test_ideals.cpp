#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"
#include "wtring/ideals.hpp"

using namespace wtring;

namespace {

std::vector<NamedRing> small_rings() {
  std::vector<NamedRing> out;
  for (auto& nr : builtin_corpus())
    if (nr.ring.order() <= 16) out.push_back(std::move(nr));
  return out;
}

std::vector<std::vector<Elem>> as_lists(const std::vector<Ideal>& ideals) {
  std::vector<std::vector<Elem>> out;
  for (const auto& i : ideals) out.push_back(i.members().members());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ideal lattice of Z8 by subset enumeration") {
  Ring z = zmod(8);
  auto brute = oracle::two_sided_ideals(z);
  CHECK(brute == std::vector<std::vector<Elem>>{
                     {0}, {0, 1, 2, 3, 4, 5, 6, 7}, {0, 2, 4, 6}, {0, 4}});
  CHECK(as_lists(all_ideals(z)) == brute);
}

TEST_CASE("all_ideals matches subset enumeration on small corpus rings") {
  for (const auto& [name, r] : small_rings()) {
    CAPTURE(name);
    CHECK(as_lists(all_ideals(r)) == oracle::two_sided_ideals(r));
  }
}

TEST_CASE("is_ideal agrees with the direct closure test") {
  std::mt19937_64 rng(11);
  for (const auto& [name, r] : small_rings()) {
    for (int t = 0; t < 200; ++t) {
      std::vector<char> in(r.order(), 0);
      in[0] = 1;
      for (Elem x = 1; x < r.order(); ++x) in[x] = rng() % 3 == 0;
      CHECK(is_ideal(r, ElementSet::from_mask(in)) == oracle::is_two_sided(r, in));
    }
  }
}

TEST_CASE("Jacobson radical equals the intersection of maximal left ideals") {
  for (const auto& [name, r] : small_rings()) {
    CAPTURE(name);
    CHECK(jacobson_radical(r).members().members() == oracle::radical_by_maximal_left_ideals(r));
    CHECK(nilpotents(r).members() == oracle::nilpotent_set(r));
  }
}

TEST_CASE("radicals of named rings") {
  CHECK(jacobson_radical(zmod(8)).members().members() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(jacobson_radical(zmod(6)).is_zero());
  CHECK(jacobson_radical(zmod(12)).members().members() == std::vector<Elem>{0, 6});
  CHECK(jacobson_radical(matrix_ring(zmod(2), 2)).is_zero());
  CHECK(jacobson_radical(triangular_ring(zmod(2), 2)).size() == 2);
}

TEST_CASE("ideal generation, sum and intersection") {
  Ring z = zmod(12);
  CHECK(ideal_generated(z, std::vector<Elem>{8}).members().members() == std::vector<Elem>{0, 4, 8});
  CHECK(ideal_generated(z, std::vector<Elem>{4, 6}).size() == 6);
  auto a = ideal_generated(z, std::vector<Elem>{4});
  auto b = ideal_generated(z, std::vector<Elem>{6});
  CHECK(ideal_sum(z, a, b).size() == 6);
  CHECK(ideal_intersection(a, b).is_zero());
  CHECK(whole_ring(z).size() == 12);
  // Two-sided closure in a noncommutative ring: the ideal generated by a
  // matrix unit in M2(Z2) is everything.
  Ring m = matrix_ring(zmod(2), 2);
  CHECK(ideal_generated(m, std::vector<Elem>{1}).size() == 16);
}

TEST_CASE("quotients are homomorphic images with least representatives") {
  for (const auto& [name, r] : small_rings()) {
    for (const auto& i : all_ideals(r)) {
      if (i.size() == r.order()) {
        CHECK_THROWS_AS(quotient(r, i), PreconditionError);
        continue;
      }
      auto q = quotient(r, i);
      CHECK(q.ring.order() * i.size() == r.order());
      CHECK(verify_axioms(q.ring).empty());
      for (Elem a = 0; a < r.order(); ++a) {
        CHECK(q.representatives[q.projection[a]] <= a);
        for (Elem b = 0; b < r.order(); ++b) {
          CHECK(q.projection[r.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
          CHECK(q.projection[r.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
        }
      }
    }
  }
  CHECK_THROWS_AS(quotient(zmod(8), Ideal(ElementSet(std::vector<Elem>{0, 2}))), PreconditionError);
}

TEST_CASE("minimal ideals and monolith by brute force") {
  for (const auto& [name, r] : small_rings()) {
    CAPTURE(name);
    auto ideals = oracle::two_sided_ideals(r);
    std::vector<std::vector<Elem>> minimal;
    for (const auto& a : ideals) {
      if (a.size() == 1) continue;
      bool is_min = true;
      for (const auto& b : ideals)
        if (b.size() > 1 && b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end()))
          is_min = false;
      if (is_min) minimal.push_back(a);
    }
    CHECK(as_lists(minimal_ideals(r)) == minimal);
    auto irr = subdirect_irreducibility(r);
    CHECK(irr.irreducible == (minimal.size() == 1));
    if (irr.irreducible) CHECK(irr.monolith.members().members() == minimal.front());
  }
}

TEST_CASE("maximal avoiding ideals are maximal") {
  for (const auto& [name, r] : small_rings()) {
    auto ideals = oracle::two_sided_ideals(r);
    for (Elem x = 1; x < r.order(); ++x) {
      auto i = maximal_avoiding_ideal(r, x, Ideal());
      CHECK_FALSE(i.contains(x));
      for (const auto& b : ideals) {
        if (std::find(b.begin(), b.end(), x) != b.end()) continue;
        if (b.size() > i.size())
          CHECK_FALSE(std::includes(b.begin(), b.end(), i.members().begin(), i.members().end()));
      }
    }
  }
  CHECK_THROWS_AS(maximal_avoiding_ideal(zmod(4), 0, Ideal()), PreconditionError);
  CHECK_THROWS_AS(maximal_avoiding_ideal(zmod(4), 2, ideal_generated(zmod(4), std::vector<Elem>{2})),
                  PreconditionError);
}

TEST_CASE("subdirect decompositions") {
  auto z6 = subdirect_decomposition(zmod(6));
  CHECK(as_lists(z6) == std::vector<std::vector<Elem>>{{0, 2, 4}, {0, 3}});
  CHECK(as_lists(subdirect_decomposition(zmod(8))) == std::vector<std::vector<Elem>>{{0}});
  for (const auto& [name, r] : small_rings()) {
    CAPTURE(name);
    auto parts = subdirect_decomposition(r);
    ElementSet meet = whole_ring(r).members();
    for (const auto& i : parts) {
      meet = meet.intersect(i.members());
      CHECK(is_subdirectly_irreducible(quotient(r, i).ring));
    }
    CHECK(meet.size() == 1);
  }
}

TEST_CASE("Peirce factors") {
  Ring z = zmod(6);
  auto f = peirce_factor(z, 3);
  CHECK(f.ring.order() == 2);
  CHECK(f.inclusion == std::vector<Elem>{0, 3});
  CHECK(f.ring.one() == 1);
  CHECK_THROWS_AS(peirce_factor(z, 2), PreconditionError);
  CHECK_THROWS_AS(peirce_factor(triangular_ring(zmod(2), 2), 1), PreconditionError);
}

TEST_CASE("char24 split of Z24") {
  auto s = char24_split(zmod(24));
  CHECK(s.f == 9);
  CHECK(s.e == 16);
  REQUIRE(s.two_part);
  REQUIRE(s.three_part);
  CHECK(s.two_part->ring.order() == 8);
  CHECK(s.three_part->ring.order() == 3);
  CHECK(characteristic(s.two_part->ring) == 8);
  CHECK(characteristic(s.three_part->ring) == 3);
}

TEST_CASE("char24 split edge cases") {
  auto s8 = char24_split(zmod(8));
  CHECK(s8.two_part);
  CHECK_FALSE(s8.three_part);
  auto s3 = char24_split(zmod(3));
  CHECK_FALSE(s3.two_part);
  CHECK(s3.three_part);
  CHECK_THROWS_AS(char24_split(zmod(16)), PreconditionError);
  CHECK_THROWS_AS(char24_split(zmod(5)), PreconditionError);
}

#pragma once

#include <optional>
#include <vector>

#include "wtring/ring.hpp"

namespace wtring {

/// A two-sided ideal, stored as its canonical member list.
///
/// Instances produced by this module are closed by construction; the
/// explicit constructor is for callers that have verified closure
/// themselves (see is_ideal).
class Ideal {
 public:
  Ideal() : members_(std::vector<Elem>{0}) {}
  explicit Ideal(ElementSet members) : members_(std::move(members)) {}

  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const { return members_.contains(x); }
  bool is_zero() const noexcept { return members_.size() == 1; }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  ElementSet members_;
};

/// Closed under addition, negation and two-sided multiplication, and
/// contains zero.
bool is_ideal(const Ring& r, const ElementSet& s);

Ideal ideal_generated(const Ring& r, const std::vector<Elem>& gens);
Ideal ideal_generated(const Ring& r, const ElementSet& gens);
Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal whole_ring(const Ring& r);

struct Quotient {
  Ring ring;
  std::vector<Elem> projection;       // element of R -> coset index
  std::vector<Elem> representatives;  // coset index -> least member of R
};

/// R/I with the least index of each coset as its representative.
Quotient quotient(const Ring& r, const Ideal& ideal);

/// {x : 1 - rx is a unit for every r}, certified to be an ideal.
Ideal jacobson_radical(const Ring& r);
Ideal jacobson_radical(const Ring& r, const ElementSet& unit_set);

ElementSet nilpotents(const Ring& r);

/// Minimal nonzero ideals, ordered by their least nonzero member.
std::vector<Ideal> minimal_ideals(const Ring& r);

struct Irreducibility {
  bool irreducible = false;
  Ideal monolith;  // intersection of all nonzero ideals (zero when reducible)
};

Irreducibility subdirect_irreducibility(const Ring& r);
bool is_subdirectly_irreducible(const Ring& r);

/// Greedy single-element extension of `seed` that avoids x, scanning
/// candidates in ascending index order. The result is inclusion-maximal
/// among ideals containing the seed and not containing x.
Ideal maximal_avoiding_ideal(const Ring& r, Elem x, const Ideal& seed);

/// Ideals with zero intersection whose quotients are subdirectly
/// irreducible; redundant members are pruned.
std::vector<Ideal> subdirect_decomposition(const Ring& r);

/// Every two-sided ideal, ordered by size then members. Orders <= 64 only.
std::vector<Ideal> all_ideals(const Ring& r);

/// eR as a ring with identity e, for a central idempotent e != 0.
struct PeirceFactor {
  Elem idempotent;
  Ring ring;
  std::vector<Elem> inclusion;  // factor index -> index in R
};

PeirceFactor peirce_factor(const Ring& r, Elem e);

/// R = 9R x 16R for rings with 24 = 0: the first factor satisfies 8 = 0,
/// the second 3 = 0. A factor is absent when its idempotent is zero.
struct Char24Split {
  Elem f = 0;  // 9 * 1
  Elem e = 0;  // 16 * 1
  std::optional<PeirceFactor> two_part;
  std::optional<PeirceFactor> three_part;
};

Char24Split char24_split(const Ring& r);

}  // namespace wtring

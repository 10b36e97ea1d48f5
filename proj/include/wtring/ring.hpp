#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wtring {

/// Carrier index of a ring element. Zero is always index 0.
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of carrier indices.
///
/// Used for unit groups, idempotent and nilpotent sets, and as the storage
/// of ideals. The canonical sorted form makes equality a plain comparison.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Elem> members);

  /// Builds the set {i : mask[i] != 0}.
  static ElementSet from_mask(const std::vector<char>& mask);

  bool contains(Elem x) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<Elem>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Elem> members_;
};

/// A finite unital ring stored as Cayley tables over indices 0..n-1.
///
/// Construction only validates the table shapes and ranges; use
/// verify_axioms() (or require_valid()) to certify the ring axioms. The
/// additive inverse table is derived from the addition table. A Ring is
/// immutable once built.
class Ring {
 public:
  Ring(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
       Elem one, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }

  /// Display label; defaults to the decimal index when none were given.
  std::string label(Elem a) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws MalformedInput when a is not a carrier index.
  void check_index(Elem a) const;

  /// Table identity (labels excluded).
  bool same_tables(const Ring& other) const noexcept;
  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::size_t n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem one_;
  std::vector<std::string> labels_;
};

/// A ring together with the stable identifier used in reports.
struct NamedRing {
  std::string name;
  Ring ring;
};

struct AxiomViolation {
  std::string axiom;
  std::array<Elem, 3> witness;
};

using AxiomReport = std::vector<AxiomViolation>;

struct AxiomOptions {
  // Cubic scans (associativity, distributivity) are exhaustive up to this
  // order and randomly sampled above it.
  std::size_t exhaustive_limit = 64;
  std::size_t samples = 100000;
  std::uint64_t seed = 0x5eed;
};

/// Lists every violated axiom with the first witness triple found. Empty
/// iff the tables define a unital ring (exactly so up to the exhaustive
/// limit).
AxiomReport verify_axioms(const Ring& r, const AxiomOptions& opts = {});

/// Throws AxiomError naming the first violation.
void require_valid(const Ring& r, const AxiomOptions& opts = {});

std::string describe(const AxiomViolation& v);

/// Least k >= 1 with k*1 = 0.
std::size_t characteristic(const Ring& r);

/// a^k by repeated squaring; a^0 is one.
Elem power(const Ring& r, Elem a, std::uint64_t k);

/// k*1; negative k goes through the inverse table.
Elem scalar(const Ring& r, std::int64_t k);

/// k*a for an arbitrary element a.
Elem multiple(const Ring& r, std::int64_t k, Elem a);

ElementSet units(const Ring& r);
ElementSet center(const Ring& r);
bool is_commutative(const Ring& r);

}  // namespace wtring

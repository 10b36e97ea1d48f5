#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wtring/polynomial.hpp"
#include "wtring/ring.hpp"

namespace wtring {

/// Largest ring order any constructor will tabulate (default 4096).
std::size_t order_cap();
void set_order_cap(std::size_t cap);

/// Tabulates a ring from element-level operations on indices 0..n-1.
Ring tabulate(std::size_t n, const std::function<Elem(Elem, Elem)>& add,
              const std::function<Elem(Elem, Elem)>& mul, Elem one,
              std::vector<std::string> labels = {});

/// Ring on the sorted `carrier` (which must contain 0 and be closed under
/// the operations) with identity `unit`. Indices are renumbered by rank.
Ring induced_ring(const Ring& r, const std::vector<Elem>& carrier, Elem unit);

Ring zmod(std::int64_t n);

/// Componentwise product. Indices are lexicographic in the coordinates
/// with the first factor most significant.
Ring direct_product(const std::vector<Ring>& factors);
std::vector<Elem> product_coordinates(const std::vector<Ring>& factors, Elem x);
Elem product_index(const std::vector<Ring>& factors,
                   const std::vector<Elem>& coords);

// Matrix entries are packed little-endian in row-major order: entry (i,j)
// of M_k carries weight |R|^(i*k+j); T_k skips the entries below the
// diagonal.
Ring matrix_ring(const Ring& base, int k);
Ring triangular_ring(const Ring& base, int k);
Elem matrix_index(const Ring& base, int k, const std::vector<Elem>& row_major);

/// N as a direct sum of cyclic groups Z_{c_1} + ... + Z_{c_r}.
struct ModuleSpec {
  std::vector<std::int64_t> cyclic_orders;
};

/// Z_{2^k} + N with (x,n)(y,m) = (xy, xm + yn), i.e. matrices [[x,n],[0,x]].
Ring idealization(int k, const ModuleSpec& module);

/// 2N = 0 for the module.
bool annihilated_by_two(const ModuleSpec& module);

/// Z_{2^k} x Z_4 with (x,n)*(y,m) = (xy, xm + ny + 2mn).
Ring twisted_product(int k);

/// A finitely presented commutative Z_m-algebra.
struct Presentation {
  std::int64_t modulus = 2;
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
  unsigned degree_bound = 0;

  static Presentation parse(std::int64_t modulus, std::vector<std::string> vars,
                            const std::vector<std::string>& relations,
                            unsigned degree_bound);
};

struct PresentedRing {
  Ring ring;
  std::vector<Elem> generators;  // image of each variable
};

/// Tabulates Z_m[vars]/(relations), representing elements by reduced
/// polynomials of degree <= degree_bound. The result is certified after the
/// fact (axioms, commutativity, relations vanish, monomials are products of
/// the generators); any failure throws NotClosed.
PresentedRing presented_ring(const Presentation& p);
Ring presentation_quotient(const Presentation& p);

/// Value of an integer polynomial at `values` (one element per variable).
Elem evaluate(const Ring& r, const std::vector<Elem>& values,
              const Polynomial& poly);

struct Subring {
  Ring ring;
  std::vector<Elem> inclusion;  // subring index -> index in the parent
};

/// Unital subring generated by `gens` (always contains 0 and 1).
Subring subring_generated(const Ring& r, const ElementSet& gens);

}  // namespace wtring

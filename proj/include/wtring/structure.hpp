#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtring/ideals.hpp"
#include "wtring/ring.hpp"

namespace wtring {

/// Constructive decomposition of a commutative weakly tripotent ring R.
///
/// R = R' x R'' via the idempotents 9 and 16. On the 2-power part R':
/// J is the radical, L an ideal maximal with L meet J = 0, and for every
/// nonzero x in L an ideal I_x containing J, maximal with x not in I_x.
/// Then R' embeds in R'/L x prod R'/I_x with R'/L idempotent-free and each
/// R'/I_x Boolean. All ideals below are in the indices of the R' factor.
struct StructureCertificate {
  struct BooleanFactor {
    Elem x;
    Ideal ideal;
  };

  Char24Split split;
  std::size_t two_part_order = 1;    // |R'|, 1 when R' = 0
  std::size_t three_part_order = 1;  // |R''|, 1 when R'' = 0

  Ideal radical;
  Ideal complement;  // L
  std::vector<BooleanFactor> boolean_ideals;

  // |R'/L|; 0 when L is all of R' (then R' itself is Boolean and the
  // idempotent-free factor is absent).
  std::size_t r0_order = 0;

  bool complement_idempotent = false;  // every element of L is idempotent
  bool r0_idempotent_free = false;     // R'/L has exactly {0, 1}, or is absent
  bool r0_weakly_tripotent = false;
  bool boolean_quotients = false;
  bool embedding_checked = false;      // L meet all I_x = 0
  bool three_part_tripotent = false;

  bool valid() const noexcept {
    return complement_idempotent && r0_idempotent_free && r0_weakly_tripotent &&
           boolean_quotients && embedding_checked && three_part_tripotent &&
           two_part_order * three_part_order != 0;
  }
};

/// Greedy ideal maximal with respect to meeting `avoid` only in zero.
Ideal maximal_disjoint_ideal(const Ring& r, const Ideal& avoid);

/// Requires R commutative and weakly tripotent; throws PreconditionError
/// naming a witness otherwise.
StructureCertificate wt_structure(const Ring& r);

}  // namespace wtring

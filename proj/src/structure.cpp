#include "wtring/structure.hpp"

#include "wtring/classify.hpp"
#include "wtring/error.hpp"

namespace wtring {

Ideal maximal_disjoint_ideal(const Ring& r, const Ideal& avoid) {
  Ideal current;
  for (Elem y = 1; y < r.order(); ++y) {
    if (current.contains(y)) continue;
    auto gens = current.members().members();
    gens.push_back(y);
    Ideal grown = ideal_generated(r, gens);
    if (ideal_intersection(grown, avoid).is_zero()) current = std::move(grown);
  }
  return current;
}

StructureCertificate wt_structure(const Ring& r) {
  if (auto c = commutativity(r); !c) {
    throw PreconditionError("wt_structure requires a commutative ring; " +
                            r.label(c.witness[0]) + " and " +
                            r.label(c.witness[1]) + " do not commute");
  }
  if (auto w = is_weakly_tripotent(r); !w) {
    throw PreconditionError(
        "wt_structure requires a weakly tripotent ring; neither x nor 1+x is "
        "tripotent for x = " + r.label(w.witness[0]));
  }

  StructureCertificate cert;
  cert.split = char24_split(r);
  cert.three_part_tripotent = true;
  if (cert.split.three_part) {
    const auto& three = cert.split.three_part->ring;
    cert.three_part_order = three.order();
    cert.three_part_tripotent = is_tripotent_ring(three).holds;
  }

  if (!cert.split.two_part) {
    cert.complement_idempotent = cert.r0_idempotent_free = true;
    cert.r0_weakly_tripotent = cert.boolean_quotients = true;
    cert.embedding_checked = true;
    return cert;
  }

  const Ring& two = cert.split.two_part->ring;
  cert.two_part_order = two.order();
  cert.radical = jacobson_radical(two);
  cert.complement = maximal_disjoint_ideal(two, cert.radical);

  cert.complement_idempotent = true;
  for (auto x : cert.complement.members())
    cert.complement_idempotent &= is_idempotent(two, x);

  if (cert.complement.size() == two.order()) {
    cert.r0_order = 0;
    cert.r0_idempotent_free = cert.r0_weakly_tripotent = true;
  } else {
    auto r0 = quotient(two, cert.complement);
    cert.r0_order = r0.ring.order();
    cert.r0_idempotent_free = idempotents(r0.ring).size() == 2;
    cert.r0_weakly_tripotent = is_weakly_tripotent(r0.ring).holds;
  }

  cert.boolean_quotients = true;
  ElementSet meet = cert.complement.members();
  for (auto x : cert.complement.members()) {
    if (x == 0) continue;
    Ideal ix = maximal_avoiding_ideal(two, x, cert.radical);
    cert.boolean_quotients &= is_boolean(quotient(two, ix).ring).holds;
    meet = meet.intersect(ix.members());
    cert.boolean_ideals.push_back({x, std::move(ix)});
  }
  cert.embedding_checked = meet.size() == 1;
  return cert;
}

}  // namespace wtring

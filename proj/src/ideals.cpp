#include "wtring/ideals.hpp"

#include <algorithm>
#include <map>

#include "wtring/constructors.hpp"
#include "wtring/error.hpp"

namespace wtring {

bool is_ideal(const Ring& r, const ElementSet& s) {
  if (!s.contains(0)) return false;
  const auto n = static_cast<Elem>(r.order());
  for (auto a : s) {
    if (a >= n || !s.contains(r.neg(a))) return false;
    for (auto b : s)
      if (!s.contains(r.add(a, b))) return false;
    for (Elem x = 0; x < n; ++x)
      if (!s.contains(r.mul(x, a)) || !s.contains(r.mul(a, x))) return false;
  }
  return true;
}

Ideal ideal_generated(const Ring& r, const std::vector<Elem>& gens) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  push(0);
  for (auto g : gens) {
    r.check_index(g);
    push(g);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem a = members[i];
    push(r.neg(a));
    for (Elem x = 0; x < n; ++x) {
      push(r.mul(x, a));
      push(r.mul(a, x));
    }
    for (std::size_t j = 0; j <= i; ++j) push(r.add(a, members[j]));
  }
  return Ideal(ElementSet(std::move(members)));
}

Ideal ideal_generated(const Ring& r, const ElementSet& gens) {
  return ideal_generated(r, gens.members());
}

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b) {
  std::vector<Elem> gens = a.members().members();
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  return ideal_generated(r, gens);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal(a.members().intersect(b.members()));
}

Ideal whole_ring(const Ring& r) {
  std::vector<Elem> all(r.order());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Ideal(ElementSet(std::move(all)));
}

Quotient quotient(const Ring& r, const Ideal& ideal) {
  if (!is_ideal(r, ideal.members()))
    throw PreconditionError("quotient: argument is not an ideal");
  if (ideal.size() == r.order())
    throw PreconditionError("quotient by the whole ring is the trivial ring");
  const auto n = static_cast<Elem>(r.order());
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> projection(n, unset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (projection[a] != unset) continue;
    const auto idx = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (auto i : ideal.members()) projection[r.add(a, i)] = idx;
  }
  std::vector<std::string> labels;
  for (auto rep : reps) labels.push_back("[" + r.label(rep) + "]");
  Ring q = tabulate(
      reps.size(),
      [&](Elem a, Elem b) { return projection[r.add(reps[a], reps[b])]; },
      [&](Elem a, Elem b) { return projection[r.mul(reps[a], reps[b])]; },
      projection[r.one()], std::move(labels));

  // The projection must be a homomorphism on the whole carrier.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (projection[r.add(a, b)] != q.add(projection[a], projection[b]) ||
          projection[r.mul(a, b)] != q.mul(projection[a], projection[b]))
        throw InvariantViolation("quotient operations are not well defined");
    }
  }
  return {std::move(q), std::move(projection), std::move(reps)};
}

Ideal jacobson_radical(const Ring& r, const ElementSet& unit_set) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<char> is_unit(n, 0);
  for (auto u : unit_set) is_unit[u] = 1;
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x) {
    bool quasi_regular = true;
    for (Elem s = 0; s < n && quasi_regular; ++s)
      quasi_regular = is_unit[r.sub(r.one(), r.mul(s, x))];
    if (quasi_regular) members.push_back(x);
  }
  ElementSet set(std::move(members));
  if (!is_ideal(r, set))
    throw InvariantViolation("quasi-regular elements do not form an ideal");
  return Ideal(std::move(set));
}

Ideal jacobson_radical(const Ring& r) { return jacobson_radical(r, units(r)); }

ElementSet nilpotents(const Ring& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (power(r, x, r.order()) == 0) out.push_back(x);
  return ElementSet(std::move(out));
}

namespace {

std::vector<Ideal> principal_ideals(const Ring& r) {
  std::vector<Ideal> out;
  out.reserve(r.order());
  for (Elem a = 0; a < r.order(); ++a) out.push_back(ideal_generated(r, {a}));
  return out;
}

}  // namespace

std::vector<Ideal> minimal_ideals(const Ring& r) {
  const auto principal = principal_ideals(r);
  std::vector<Ideal> out;
  for (Elem a = 1; a < r.order(); ++a) {
    const auto& p = principal[a];
    bool minimal = std::all_of(p.members().begin(), p.members().end(), [&](Elem b) {
      return b == 0 || principal[b].size() == p.size();
    });
    if (minimal && std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(p);
  }
  return out;
}

Irreducibility subdirect_irreducibility(const Ring& r) {
  const auto principal = principal_ideals(r);
  ElementSet mono = principal[1].members();
  for (Elem a = 2; a < r.order(); ++a) mono = mono.intersect(principal[a].members());
  Irreducibility out;
  out.monolith = Ideal(mono);
  out.irreducible = !out.monolith.is_zero();
  return out;
}

bool is_subdirectly_irreducible(const Ring& r) {
  return subdirect_irreducibility(r).irreducible;
}

Ideal maximal_avoiding_ideal(const Ring& r, Elem x, const Ideal& seed) {
  r.check_index(x);
  if (x == 0) throw PreconditionError("maximal_avoiding_ideal: x must be nonzero");
  Ideal current = ideal_generated(r, seed.members());
  if (current.contains(x))
    throw PreconditionError("maximal_avoiding_ideal: seed already contains x");
  // A rejected candidate stays rejected as the ideal grows, so one
  // ascending pass reaches a maximal ideal.
  std::vector<Elem> gens = current.members().members();
  for (Elem y = 1; y < r.order(); ++y) {
    if (current.contains(y)) continue;
    gens.push_back(y);
    Ideal grown = ideal_generated(r, gens);
    if (grown.contains(x)) {
      gens.pop_back();
    } else {
      current = std::move(grown);
      gens = current.members().members();
    }
  }
  return current;
}

std::vector<Ideal> subdirect_decomposition(const Ring& r) {
  std::vector<Ideal> family;
  for (Elem x = 1; x < r.order(); ++x) {
    Ideal ix = maximal_avoiding_ideal(r, x, Ideal());
    if (std::find(family.begin(), family.end(), ix) == family.end())
      family.push_back(std::move(ix));
  }
  auto meet_is_zero = [&](const std::vector<Ideal>& ideals, std::size_t skip) {
    ElementSet meet = whole_ring(r).members();
    bool any = false;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (i == skip) continue;
      meet = meet.intersect(ideals[i].members());
      any = true;
    }
    return any && meet.size() == 1;
  };
  for (std::size_t i = 0; i < family.size();) {
    if (meet_is_zero(family, i)) {
      family.erase(family.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return family;
}

std::vector<Ideal> all_ideals(const Ring& r) {
  if (r.order() > 64)
    throw PreconditionError("ideal lattice enumeration is limited to order 64");
  std::vector<Ideal> found{Ideal()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem a = 1; a < r.order(); ++a) {
      if (found[i].contains(a)) continue;
      auto gens = found[i].members().members();
      gens.push_back(a);
      Ideal next = ideal_generated(r, gens);
      if (std::find(found.begin(), found.end(), next) == found.end())
        found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members().members() < b.members().members();
  });
  return found;
}

PeirceFactor peirce_factor(const Ring& r, Elem e) {
  r.check_index(e);
  if (e == 0) throw PreconditionError("Peirce factor of the zero idempotent");
  if (r.mul(e, e) != e) throw PreconditionError("Peirce factor needs an idempotent");
  for (Elem x = 0; x < r.order(); ++x)
    if (r.mul(e, x) != r.mul(x, e))
      throw PreconditionError("Peirce factor needs a central idempotent");
  std::vector<Elem> carrier;
  for (Elem x = 0; x < r.order(); ++x) carrier.push_back(r.mul(e, x));
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  Ring factor = induced_ring(r, carrier, e);
  return {e, std::move(factor), std::move(carrier)};
}

Char24Split char24_split(const Ring& r) {
  const auto c = characteristic(r);
  if (24 % c != 0)
    throw PreconditionError("char24_split: characteristic " + std::to_string(c) +
                            " does not divide 24");
  Char24Split s{scalar(r, 9), scalar(r, 16), std::nullopt, std::nullopt};
  if (r.add(s.f, s.e) != r.one() || r.mul(s.f, s.e) != 0 ||
      r.mul(s.f, s.f) != s.f || r.mul(s.e, s.e) != s.e ||
      multiple(r, 8, s.f) != 0 || multiple(r, 3, s.e) != 0)
    throw InvariantViolation("9 and 16 do not split the ring");
  if (s.f != 0) s.two_part = peirce_factor(r, s.f);
  if (s.e != 0) s.three_part = peirce_factor(r, s.e);
  std::size_t a = s.two_part ? s.two_part->ring.order() : 1;
  std::size_t b = s.three_part ? s.three_part->ring.order() : 1;
  if (a * b != r.order())
    throw InvariantViolation("Peirce factor orders do not multiply to |R|");
  return s;
}

}  // namespace wtring

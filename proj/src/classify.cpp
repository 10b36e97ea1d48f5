#include "wtring/classify.hpp"

#include <algorithm>

#include "wtring/error.hpp"

namespace wtring {

bool is_idempotent(const Ring& r, Elem x) { return r.mul(x, x) == x; }

bool is_tripotent(const Ring& r, Elem x) { return r.mul(r.mul(x, x), x) == x; }

namespace {

template <class Pred>
ElementSet scan(const Ring& r, Pred pred) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (pred(x)) out.push_back(x);
  return ElementSet(std::move(out));
}

template <class Pred>
Outcome for_all(const Ring& r, Pred pred) {
  for (Elem x = 0; x < r.order(); ++x)
    if (!pred(x)) return Outcome::fail({x});
  return {};
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

ElementSet idempotents(const Ring& r) {
  return scan(r, [&](Elem x) { return is_idempotent(r, x); });
}

ElementSet tripotents(const Ring& r) {
  return scan(r, [&](Elem x) { return is_tripotent(r, x); });
}

Outcome weakly_holds(const Ring& r, ElementPredicate p, Sign s) {
  auto test = [&](Elem x) {
    return p == ElementPredicate::Idempotent ? is_idempotent(r, x)
                                             : is_tripotent(r, x);
  };
  return for_all(r, [&](Elem x) {
    Elem shifted = s == Sign::Plus ? r.add(r.one(), x) : r.sub(r.one(), x);
    return test(x) || test(shifted);
  });
}

Outcome is_weakly_tripotent(const Ring& r) {
  return weakly_holds(r, ElementPredicate::Tripotent, Sign::Plus);
}

Outcome is_tripotent_ring(const Ring& r) {
  return for_all(r, [&](Elem x) { return is_tripotent(r, x); });
}

Outcome is_boolean(const Ring& r) {
  return for_all(r, [&](Elem x) { return is_idempotent(r, x); });
}

Outcome x4_eq_x6(const Ring& r) {
  return for_all(r, [&](Elem x) { return power(r, x, 4) == power(r, x, 6); });
}

Outcome units_exponent_two(const Ring& r) {
  for (auto u : units(r))
    if (r.mul(u, u) != r.one()) return Outcome::fail({u});
  return {};
}

Outcome radical_square_rule(const Ring& r, const Ideal& radical) {
  for (auto x : radical.members())
    if (r.mul(x, x) != r.add(x, x)) return Outcome::fail({x});
  return {};
}

Outcome radical_square_rule(const Ring& r) {
  return radical_square_rule(r, jacobson_radical(r));
}

Outcome commutativity(const Ring& r) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return Outcome::fail({a, b});
  return {};
}

Outcome is_abelian(const Ring& r) {
  for (auto e : idempotents(r))
    for (Elem x = 0; x < r.order(); ++x)
      if (r.mul(e, x) != r.mul(x, e)) return Outcome::fail({e, x});
  return {};
}

Outcome is_local(const Ring& r) {
  const auto u = units(r);
  const auto j = jacobson_radical(r, u);
  return for_all(r, [&](Elem x) { return u.contains(x) != j.contains(x); });
}

namespace {

using Part = SumDecomposition::Part;

// Marks every reachable x by scanning ordered pairs (a, b) of `pool`
// lexicographically, so the recorded part is the least one.
template <class Emit>
SumDecomposition decompose(const Ring& r, const ElementSet& pool, Emit emit) {
  SumDecomposition out;
  out.parts.assign(r.order(), std::nullopt);
  for (auto a : pool)
    for (auto b : pool)
      if (r.mul(a, b) == r.mul(b, a)) emit(a, b, out.parts);
  for (Elem x = 0; x < r.order(); ++x) {
    if (!out.parts[x]) {
      out.holds = false;
      out.counterexample = x;
      break;
    }
  }
  return out;
}

void mark(std::vector<std::optional<Part>>& parts, Elem x, Part p) {
  if (!parts[x]) parts[x] = p;
}

}  // namespace

SumDecomposition sum_idem_tripotent(const Ring& r) {
  SumDecomposition out;
  out.parts.assign(r.order(), std::nullopt);
  const auto trip = tripotents(r);
  for (auto e : idempotents(r))
    for (auto t : trip)
      if (r.mul(e, t) == r.mul(t, e)) mark(out.parts, r.add(e, t), {e, t, false});
  for (Elem x = 0; x < r.order(); ++x) {
    if (!out.parts[x]) {
      out.holds = false;
      out.counterexample = x;
      break;
    }
  }
  return out;
}

SumDecomposition sum_two_tripotents(const Ring& r) {
  return decompose(r, tripotents(r), [&](Elem a, Elem b, auto& parts) {
    mark(parts, r.add(a, b), {a, b, false});
  });
}

SumDecomposition sum_diff_commuting_idempotents(const Ring& r) {
  return decompose(r, idempotents(r), [&](Elem a, Elem b, auto& parts) {
    mark(parts, r.add(a, b), {a, b, false});
    mark(parts, r.sub(a, b), {a, b, true});
  });
}

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names{
      "boolean_ring",        "tripotent_ring",      "weakly_tripotent",
      "abelian",             "commutative",         "local",
      "x4_eq_x6",            "units_exp_2",         "radical_sq_rule",
      "radical_quotient_boolean",
      "sum_idem_trip",       "sum_two_trip",        "sum_diff_idem",
      "subdirectly_irreducible"};
  return names;
}

const ClassificationReport::Flag& ClassificationReport::get(std::string_view name) const {
  for (const auto& f : flags)
    if (f.name == name) return f;
  throw PreconditionError("unknown classification flag " + std::string(name));
}

ClassificationReport classify(const Ring& r, std::string ring_id) {
  ClassificationReport rep;
  rep.ring_id = std::move(ring_id);
  rep.order = r.order();
  rep.characteristic = characteristic(r);

  const auto radical = jacobson_radical(r);

  auto add = [&](const std::string& name, const Outcome& o) {
    rep.flags.push_back({name, o.holds, o.witness});
  };
  auto add_sum = [&](const std::string& name, const SumDecomposition& d) {
    std::vector<Elem> w;
    if (d.counterexample) w.push_back(*d.counterexample);
    rep.flags.push_back({name, d.holds, std::move(w)});
  };

  add("boolean_ring", is_boolean(r));
  add("tripotent_ring", is_tripotent_ring(r));
  add("weakly_tripotent", is_weakly_tripotent(r));
  add("abelian", is_abelian(r));
  add("commutative", commutativity(r));
  add("local", is_local(r));
  add("x4_eq_x6", x4_eq_x6(r));
  add("units_exp_2", units_exponent_two(r));
  add("radical_sq_rule", radical_square_rule(r, radical));
  {
    auto q = quotient(r, radical);
    Outcome b = is_boolean(q.ring);
    if (!b.holds) b.witness = {q.representatives[b.witness.front()]};
    add("radical_quotient_boolean", b);
  }
  auto sit = sum_idem_tripotent(r);
  add_sum("sum_idem_trip", sit);
  rep.idem_tripotent_parts = sit.parts;
  add_sum("sum_two_trip", sum_two_tripotents(r));
  add_sum("sum_diff_idem", sum_diff_commuting_idempotents(r));

  auto irr = subdirect_irreducibility(r);
  rep.flags.push_back({"subdirectly_irreducible", irr.irreducible,
                       irr.irreducible ? irr.monolith.members().members()
                                       : std::vector<Elem>{}});
  return rep;
}

std::vector<std::string> consistency_violations(const ClassificationReport& rep) {
  std::vector<std::string> out;
  auto f = [&](const char* name) { return rep.flag(name); };
  auto expect = [&](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };
  const bool wt = f("weakly_tripotent");
  expect(!f("boolean_ring") || f("tripotent_ring"), "boolean => tripotent");
  expect(!f("tripotent_ring") || wt, "tripotent => weakly tripotent");
  expect(!wt || f("sum_idem_trip"), "weakly tripotent => idempotent+tripotent sums");
  expect(!wt || f("sum_two_trip"), "weakly tripotent => sums of two tripotents");
  expect(!f("sum_diff_idem") || wt, "idempotent sums/differences => weakly tripotent");
  expect(!wt || 24 % rep.characteristic == 0, "weakly tripotent => 24 = 0");
  expect(!(wt && rep.characteristic == 3) || f("tripotent_ring"),
         "characteristic 3 and weakly tripotent => tripotent");
  expect(!(f("abelian") && wt) || f("commutative"),
         "abelian and weakly tripotent => commutative");
  if (is_power_of_two(rep.characteristic)) {
    const bool a = f("sum_idem_trip");
    const bool b = f("x4_eq_x6");
    const bool c = f("radical_quotient_boolean") && f("units_exp_2");
    const bool d = f("radical_quotient_boolean") && f("radical_sq_rule");
    expect(a == b && b == c && c == d,
           "characteristic 2^k: the four x^4 = x^6 conditions disagree");
  }
  return out;
}

}  // namespace wtring

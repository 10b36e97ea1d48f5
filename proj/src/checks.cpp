#include "wtring/checks.hpp"

#include <chrono>
#include <set>

#include "wtring/classify.hpp"
#include "wtring/constructors.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"
#include "wtring/ideals.hpp"
#include "wtring/structure.hpp"

namespace wtring {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

struct Result {
  Status status;
  Json certificate;
};

Result holds(Json c = Json::object()) { return {Status::Holds, std::move(c)}; }

Result fails(std::string reason, Json c = Json::object()) {
  c["failed"] = std::move(reason);
  return {Status::Fails, std::move(c)};
}

Result not_applicable(std::string hypothesis, Json c = Json::object()) {
  c["hypothesis_failed"] = std::move(hypothesis);
  return {Status::NotApplicable, std::move(c)};
}

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

Json witness_json(const Ring& r, const Outcome& o) { return elements_json(r, o.witness); }

Json ideal_json(const Ring& r, const Ideal& i) { return elements_json(r, i.members()); }

// Returns a not_applicable result when R is not weakly tripotent.
std::optional<Result> require_wt(const Ring& r) {
  if (auto w = is_weakly_tripotent(r); !w)
    return not_applicable("weakly_tripotent", Json{{"witness", witness_json(r, w)}});
  return std::nullopt;
}

Result t01(const Ring& r) {
  if (auto na = require_wt(r)) return *na;
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < r.order(); ++x) {
    auto s = subring_generated(r, ElementSet(std::vector<Elem>{x}));
    if (!seen.insert(s.inclusion).second) continue;
    if (auto w = is_weakly_tripotent(s.ring); !w) {
      return fails("subring not weakly tripotent",
                   Json{{"generator", element_json(r, x)},
                        {"witness", element_json(r, s.inclusion[w.witness[0]])}});
    }
  }
  return holds(Json{{"subrings_checked", seen.size()}});
}

Result t02(const Ring& r) {
  if (auto na = require_wt(r)) return *na;
  std::set<std::vector<Elem>> seen;
  for (Elem a = 0; a < r.order(); ++a) {
    Ideal p = ideal_generated(r, std::vector<Elem>{a});
    if (p.size() == r.order() || !seen.insert(p.members().members()).second) continue;
    auto q = quotient(r, p);
    if (auto w = is_weakly_tripotent(q.ring); !w) {
      return fails("quotient not weakly tripotent",
                   Json{{"generator", element_json(r, a)},
                        {"ideal", ideal_json(r, p)},
                        {"witness", element_json(r, q.representatives[w.witness[0]])}});
    }
  }
  return holds(Json{{"quotients_checked", seen.size()}});
}

Result t03(const Ring& r) {
  if (auto na = require_wt(r)) return *na;
  const auto n = characteristic(r);
  if (24 % n != 0) return fails("characteristic does not divide 24", Json{{"characteristic", n}});
  try {
    auto s = char24_split(r);
    return holds(Json{{"characteristic", n}, {"split", split_json(s, r)}});
  } catch (const Error& e) {
    return fails("char24_split rejected the ring",
                 Json{{"characteristic", n}, {"error", e.what()}});
  }
}

Result t04(const Ring& r) {
  const auto n = characteristic(r);
  if (n != 3) return not_applicable("characteristic 3", Json{{"characteristic", n}});
  if (auto na = require_wt(r)) return *na;
  if (auto t = is_tripotent_ring(r); !t)
    return fails("not tripotent", Json{{"witness", witness_json(r, t)}});
  return holds(Json{{"characteristic", n}});
}

Result t05(const Ring& r) {
  auto plus = weakly_holds(r, ElementPredicate::Tripotent, Sign::Plus);
  auto minus = weakly_holds(r, ElementPredicate::Tripotent, Sign::Minus);
  Json c{{"plus", plus.holds}, {"minus", minus.holds}};
  if (!plus) c["plus_witness"] = witness_json(r, plus);
  if (!minus) c["minus_witness"] = witness_json(r, minus);
  if (plus.holds != minus.holds) return fails("x+1 and 1-x conditions disagree", std::move(c));
  return holds(std::move(c));
}

// Z4 x Z4: every element is an idempotent plus a commuting tripotent, yet
// (1,2) and (1,1) + (1,2) are both non-tripotent.
std::optional<Result> t06_strictness(Json& c) {
  const std::vector<Ring> f{zmod(4), zmod(4)};
  Ring z = direct_product(f);
  const Elem expected = product_index(f, {1, 2});
  auto sit = sum_idem_tripotent(z);
  auto w = is_weakly_tripotent(z);
  c["strictness"] = Json{{"ring", "Z4xZ4"},
                         {"sum_idem_trip", sit.holds},
                         {"weakly_tripotent", w.holds},
                         {"witness", witness_json(z, w)}};
  if (!sit) return fails("Z4xZ4 is not a sum of idempotent and tripotent", c);
  if (w || w.witness != std::vector<Elem>{expected})
    return fails("Z4xZ4 strictness witness is not (1,2)", c);
  return std::nullopt;
}

Result t06(const Ring& r) {
  Json c;
  if (auto bad = t06_strictness(c)) return *bad;
  if (auto w = is_weakly_tripotent(r); !w) {
    c["witness"] = witness_json(r, w);
    return not_applicable("weakly_tripotent", std::move(c));
  }
  if (auto s = sum_idem_tripotent(r); !s) {
    c["counterexample"] = element_json(r, *s.counterexample);
    return fails("element is not idempotent + commuting tripotent", std::move(c));
  }
  return holds(std::move(c));
}

Result t07(const Ring& r) {
  if (auto na = require_wt(r)) return *na;
  if (auto s = sum_two_tripotents(r); !s)
    return fails("element is not a sum of two commuting tripotents",
                 Json{{"counterexample", element_json(r, *s.counterexample)}});
  return holds();
}

Result t08(const Ring& r) {
  const bool wt = is_weakly_tripotent(r).holds;
  auto parts = subdirect_decomposition(r);
  ElementSet meet = whole_ring(r).members();
  Json ideals = Json::array();
  for (const auto& i : parts) {
    meet = meet.intersect(i.members());
    ideals.push_back(ideal_json(r, i));
  }
  Json c{{"weakly_tripotent", wt}, {"ideals", ideals}};
  if (meet.size() != 1) return fails("ideals do not intersect to zero", std::move(c));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto q = quotient(r, parts[k]);
    if (!is_subdirectly_irreducible(q.ring)) {
      c["ideal"] = ideals[k];
      return fails("quotient is not subdirectly irreducible", std::move(c));
    }
    if (wt) {
      if (auto w = is_weakly_tripotent(q.ring); !w) {
        c["ideal"] = ideals[k];
        c["witness"] = element_json(r, q.representatives[w.witness[0]]);
        return fails("quotient is not weakly tripotent", std::move(c));
      }
    }
  }
  return holds(std::move(c));
}

Result t09(const std::vector<NamedRing>& family) {
  Json names = Json::array();
  std::vector<Ring> rings;
  Json non_tripotent = Json::array();
  for (const auto& f : family) {
    names.push_back(f.name);
    if (auto w = is_weakly_tripotent(f.ring); !w)
      return not_applicable("every factor weakly tripotent",
                            Json{{"factor", f.name}, {"witness", witness_json(f.ring, w)}});
    if (!is_tripotent_ring(f.ring)) non_tripotent.push_back(f.name);
    rings.push_back(f.ring);
  }
  std::size_t order = 1;
  for (const auto& r : rings) {
    order *= r.order();
    if (order > order_cap())
      return not_applicable("product within order cap",
                            Json{{"factors", names}, {"cap", order_cap()}});
  }
  Ring p = direct_product(rings);
  auto w = is_weakly_tripotent(p);
  const bool rhs = non_tripotent.size() <= 1;
  Json c{{"factors", names},
         {"order", p.order()},
         {"product_weakly_tripotent", w.holds},
         {"non_tripotent_factors", non_tripotent}};
  if (!w) c["witness"] = witness_json(p, w);
  if (w.holds != rhs) return fails("criterion disagrees with product scan", std::move(c));
  return holds(std::move(c));
}

Result t10(const Ring& r) {
  const auto n = characteristic(r);
  if (!power_of_two(n)) return not_applicable("characteristic a power of 2", Json{{"characteristic", n}});
  auto rep = classify(r);
  const bool a = rep.flag("sum_idem_trip");
  const bool b = rep.flag("x4_eq_x6");
  const bool qb = rep.flag("radical_quotient_boolean");
  const bool c3 = qb && rep.flag("units_exp_2");
  const bool d = qb && rep.flag("radical_sq_rule");
  Json c{{"characteristic", n},
         {"sum_idem_trip", a},
         {"x4_eq_x6", b},
         {"boolean_quotient_and_units_exp_2", c3},
         {"boolean_quotient_and_radical_sq_rule", d}};
  if (!b) c["x4_eq_x6_witness"] = elements_json(r, rep.get("x4_eq_x6").witness);
  if (!(a == b && b == c3 && c3 == d)) return fails("conditions disagree", std::move(c));
  if (a) {
    auto j = jacobson_radical(r).members();
    auto nil = nilpotents(r);
    if (!(j == nil)) {
      c["radical"] = elements_json(r, j);
      c["nilpotents"] = elements_json(r, nil);
      return fails("radical differs from nilpotents", std::move(c));
    }
    c["radical_equals_nilpotents"] = true;
  }
  return holds(std::move(c));
}

Result t11(const Ring& r) {
  if (auto s = sum_idem_tripotent(r); !s)
    return not_applicable("sum_idem_trip",
                          Json{{"counterexample", element_json(r, *s.counterexample)}});
  auto j = jacobson_radical(r).members();
  auto nil = nilpotents(r);
  Json c{{"radical", elements_json(r, j)}};
  if (!nil.is_subset_of(j) || !j.is_subset_of(nil)) {
    c["nilpotents"] = elements_json(r, nil);
    return fails("radical is not the nilpotent set", std::move(c));
  }
  for (auto x : j) {
    const Elem x2 = r.mul(x, x);
    if (x2 != r.add(x, x)) return fails("x^2 != 2x", Json{{"x", element_json(r, x)}});
    if (multiple(r, 4, x) != 0) return fails("4x != 0", Json{{"x", element_json(r, x)}});
    if (r.mul(x2, x) != 0) return fails("x^3 != 0", Json{{"x", element_json(r, x)}});
  }
  for (auto x : j) {
    for (auto y : j) {
      const Elem xy = r.mul(x, y);
      Json pair{{"x", element_json(r, x)}, {"y", element_json(r, y)}};
      if (xy != r.mul(y, x)) return fails("xy != yx in the radical", pair);
      if (r.add(xy, xy) != 0) return fails("2xy != 0 in the radical", pair);
    }
  }
  return holds(std::move(c));
}

Result t12(const Ring& r) {
  const auto idem = idempotents(r);
  const bool idem_free = idem.size() == 2;
  const auto u = units(r);
  const bool three_unit = u.contains(scalar(r, 3));
  if (!idem_free || !three_unit) {
    Json c{{"idempotent_free", idem_free}, {"three_is_unit", three_unit}};
    if (idem_free) c["only_failing_hypothesis"] = "3 is a unit";
    if (!idem_free) c["idempotents"] = elements_json(r, idem);
    return not_applicable(idem_free ? "3 is a unit" : "no nontrivial idempotents", std::move(c));
  }
  const auto j = jacobson_radical(r, u);
  const bool quotient_z2 = r.order() == 2 * j.size();
  const bool a = sum_idem_tripotent(r).holds;
  const bool b = is_local(r).holds && quotient_z2 && units_exponent_two(r).holds;
  const bool c3 = quotient_z2 && radical_square_rule(r, j).holds;
  const bool d = is_weakly_tripotent(r).holds;
  Json c{{"sum_idem_trip", a},
         {"local_z2_units_exp_2", b},
         {"z2_radical_sq_rule", c3},
         {"weakly_tripotent", d}};
  if (!(a == b && b == c3 && c3 == d)) return fails("conditions disagree", std::move(c));
  if (a) {
    if (auto com = commutativity(r); !com) {
      c["witness"] = witness_json(r, com);
      return fails("not commutative", std::move(c));
    }
  }
  return holds(std::move(c));
}

Result t13(const Ring& r) {
  if (auto ab = is_abelian(r); !ab)
    return not_applicable("abelian", Json{{"witness", witness_json(r, ab)}});
  if (auto na = require_wt(r)) return *na;
  if (auto com = commutativity(r); !com)
    return fails("not commutative", Json{{"witness", witness_json(r, com)}});
  return holds();
}

Result t14(const Ring& r) {
  const auto n = characteristic(r);
  if (!power_of_two(n)) return not_applicable("characteristic a power of 2", Json{{"characteristic", n}});
  if (auto com = commutativity(r); !com)
    return not_applicable("commutative", Json{{"witness", witness_json(r, com)}});
  if (auto na = require_wt(r)) return *na;
  const auto nil = nilpotents(r);
  Json kinds = Json::array();
  for (auto e : idempotents(r)) {
    bool kills = true, fixes = true;
    for (auto x : nil) {
      const Elem ex = r.mul(e, x);
      kills &= ex == 0;
      fixes &= ex == x;
    }
    if (!kills && !fixes)
      return fails("idempotent neither kills nor fixes the nilpotents",
                   Json{{"idempotent", element_json(r, e)}});
    kinds.push_back(Json{{"idempotent", element_json(r, e)},
                         {"action", kills ? "annihilates" : "identity"}});
  }
  return holds(Json{{"idempotents", kinds}});
}

Result t15(const Ring& r) {
  if (auto com = commutativity(r); !com)
    return not_applicable("commutative", Json{{"witness", witness_json(r, com)}});
  if (auto na = require_wt(r)) return *na;
  auto cert = wt_structure(r);
  Json c = certificate_json(cert, r);
  if (!cert.valid()) return fails("structure certificate invalid", std::move(c));
  return holds(std::move(c));
}

bool z2_or_z4(const Ring& q) {
  const auto n = q.order();
  return (n == 2 || n == 4) && characteristic(q) == n;
}

Result t16(const Ring& r) {
  if (auto s = sum_diff_commuting_idempotents(r); !s)
    return not_applicable("sum_diff_idem",
                          Json{{"counterexample", element_json(r, *s.counterexample)}});
  if (auto ab = is_abelian(r); !ab) return fails("not abelian", Json{{"witness", witness_json(r, ab)}});
  if (auto com = commutativity(r); !com)
    return fails("not commutative", Json{{"witness", witness_json(r, com)}});
  if (auto w = is_weakly_tripotent(r); !w)
    return fails("not weakly tripotent", Json{{"witness", witness_json(r, w)}});
  auto cert = wt_structure(r);
  Json c{{"reading", "R = R0 x R1 x R2 with R0 idempotent-free of order <= 4"},
         {"structure", certificate_json(cert, r)}};
  if (!cert.valid()) return fails("structure certificate invalid", std::move(c));
  if (cert.r0_order > 4) return fails("idempotent-free factor larger than 4", std::move(c));
  if (!cert.split.two_part) return holds(std::move(c));

  const Ring& two = cert.split.two_part->ring;
  const auto& inc = cert.split.two_part->inclusion;
  std::vector<Ideal> candidates;
  const bool exhaustive = two.order() <= 64;
  if (exhaustive) {
    for (auto& i : all_ideals(two))
      if (i.size() < two.order()) candidates.push_back(std::move(i));
  } else {
    candidates = subdirect_decomposition(two);
  }
  std::size_t irreducible = 0;
  for (const auto& i : candidates) {
    auto q = quotient(two, i);
    if (!is_subdirectly_irreducible(q.ring)) continue;
    ++irreducible;
    if (!z2_or_z4(q.ring)) {
      std::vector<Elem> lifted;
      for (auto x : i.members()) lifted.push_back(inc[x]);
      c["ideal"] = elements_json(r, lifted);
      c["quotient_order"] = q.ring.order();
      return fails("irreducible quotient is not Z2 or Z4", std::move(c));
    }
  }
  c["irreducible_quotients"] = irreducible;
  c["all_ideals_scanned"] = exhaustive;
  return holds(std::move(c));
}

Result t17(const Ring& r) {
  Ring z8 = zmod(8);
  const bool wt8 = is_weakly_tripotent(z8).holds;
  const bool sd8 = sum_diff_commuting_idempotents(z8).holds;
  Json c{{"Z8", Json{{"weakly_tripotent", wt8}, {"sum_diff_idem", sd8}}}};
  if (!wt8 || sd8) return fails("Z8 does not separate the classes", std::move(c));
  // The implication is vacuous when some element is not of the form e +- f;
  // the separation by Z8 carries the content of the check then.
  if (auto s = sum_diff_commuting_idempotents(r); !s) {
    c["sum_diff_idem"] = false;
    c["counterexample"] = element_json(r, *s.counterexample);
    return holds(std::move(c));
  }
  c["sum_diff_idem"] = true;
  if (auto w = is_weakly_tripotent(r); !w) {
    c["witness"] = witness_json(r, w);
    return fails("not weakly tripotent", std::move(c));
  }
  return holds(std::move(c));
}

Result t18() {
  Json c;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, std::string what) {
    if (!ok) failures.push_back(std::move(what));
  };

  {
    const Ring t = triangular_ring(zmod(2), 2);
    const bool irr = is_subdirectly_irreducible(t);
    const bool wt = is_weakly_tripotent(t).holds;
    const bool local = is_local(t).holds;
    auto com = commutativity(t);
    c["T2_Z2"] = Json{{"subdirectly_irreducible", irr},
                      {"weakly_tripotent", wt},
                      {"local", local},
                      {"commutative", com.holds},
                      {"noncommuting_pair", witness_json(t, com)}};
    expect(irr && wt && !local && !com.holds, "T2_Z2");
  }

  {
    Json sweep = Json::array();
    const std::vector<std::int64_t> orders{2, 4, 8};
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::vector<std::int64_t>> modules;
      for (std::size_t a = 0; a < orders.size(); ++a) {
        if (orders[a] > (1 << k)) continue;
        modules.push_back({orders[a]});
        for (std::size_t b = a; b < orders.size(); ++b)
          if (orders[b] <= (1 << k)) modules.push_back({orders[a], orders[b]});
      }
      for (const auto& n : modules) {
        ModuleSpec spec{n};
        std::size_t order = static_cast<std::size_t>(1) << k;
        for (auto m : n) order *= static_cast<std::size_t>(m);
        if (order > order_cap()) continue;
        Ring r = idealization(k, spec);
        auto w = is_weakly_tripotent(r);
        const bool two_kills = annihilated_by_two(spec);
        Json entry{{"k", k}, {"N", n}, {"order", r.order()},
                   {"weakly_tripotent", w.holds}, {"two_N_zero", two_kills}};
        if (!w) entry["witness"] = witness_json(r, w);
        if (!two_kills) {
          // least module element (0, n) with 2n != 0
          std::vector<Elem> module_gen;
          for (Elem x = 1; x < r.order(); ++x) {
            if (r.label(x).starts_with("(0,") && r.add(x, x) != 0) {
              module_gen.push_back(x);
              break;
            }
          }
          entry["module_element"] = elements_json(r, module_gen);
        }
        expect(w.holds == two_kills, "idealization k=" + std::to_string(k));
        sweep.push_back(std::move(entry));
      }
    }
    c["idealization"] = std::move(sweep);
  }

  {
    Json tw = Json::object();
    for (int k : {2, 3}) {
      Ring t = twisted_product(k);
      auto w = is_weakly_tripotent(t);
      Json e{{"order", t.order()}, {"weakly_tripotent", w.holds}};
      if (!w) e["witness"] = witness_json(t, w);
      tw["k" + std::to_string(k)] = std::move(e);
      if (k == 2) expect(w.holds, "twisted_product(2)");
    }
    c["twisted"] = std::move(tw);
  }

  {
    Ring e3 = presentation_quotient(example3_presentation());
    const bool wt = is_weakly_tripotent(e3).holds;
    auto irr = subdirect_irreducibility(e3);
    const ElementSet expected_monolith(std::vector<Elem>{0, scalar(e3, 2)});
    c["Example3"] = Json{{"order", e3.order()},
                         {"weakly_tripotent", wt},
                         {"subdirectly_irreducible", irr.irreducible},
                         {"monolith", ideal_json(e3, irr.monolith)}};
    expect(e3.order() == 16 && wt && irr.irreducible &&
               irr.monolith.members() == expected_monolith,
           "Example3");
  }

  {
    Ring idl = idealization(1, ModuleSpec{{2, 2}});
    const bool irr = is_subdirectly_irreducible(idl);
    Json minimal = Json::array();
    for (const auto& m : minimal_ideals(idl)) minimal.push_back(ideal_json(idl, m));
    const auto count = minimal.size();
    c["Idl_k1_N2x2"] = Json{{"subdirectly_irreducible", irr}, {"minimal_ideals", std::move(minimal)}};
    expect(!irr && count == 3, "Idl_k1_N2x2");
  }

  if (!failures.empty()) {
    c["failures"] = failures;
    return fails("example expectations", std::move(c));
  }
  return holds(std::move(c));
}

using SingleFn = Result (*)(const Ring&);

struct Entry {
  CheckInfo info;
  SingleFn single = nullptr;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> list{
      {{"T01", "subring closure",
        "R weakly tripotent => every subring generated by one element is weakly tripotent",
        Arity::Single, "unital subrings"}, t01},
      {{"T02", "quotient closure",
        "R weakly tripotent => R/P(a) weakly tripotent for every proper principal ideal P(a)",
        Arity::Single, ""}, t02},
      {{"T03", "characteristic and splitting",
        "R weakly tripotent => 24 = 0 and R = 9R x 16R with 8(9R) = 0, 3(16R) = 0",
        Arity::Single, ""}, t03},
      {{"T04", "characteristic 3 collapse",
        "R weakly tripotent of characteristic 3 => R tripotent", Arity::Single, ""}, t04},
      {{"T05", "plus/minus symmetry",
        "(for all x: x or 1+x tripotent) <=> (for all x: x or 1-x tripotent)",
        Arity::Single, "applies to every ring"}, t05},
      {{"T06", "idempotent plus tripotent sums",
        "R weakly tripotent => x = e + t with e^2 = e, t^3 = t, et = te; strict, witnessed by "
        "(1,2) in Z4 x Z4",
        Arity::Single, "the strictness ring is checked on every run"}, t06},
      {{"T07", "two tripotent sums",
        "R weakly tripotent => every x is a sum of two commuting tripotents", Arity::Single, ""},
       t07},
      {{"T08", "subdirect embedding",
        "R embeds in a product of subdirectly irreducible quotients, weakly tripotent when R is",
        Arity::Single, ""}, t08},
      {{"T09", "product criterion",
        "for weakly tripotent R_i: prod R_i weakly tripotent <=> at most one R_i not tripotent",
        Arity::List, "finite families only"}, nullptr},
      {{"T10", "x^4 = x^6 equivalences",
        "characteristic 2^k: idempotent+tripotent sums <=> x^4 = x^6 for every x in R <=> "
        "(R/J Boolean and U(R)^2 = 1) <=> (R/J Boolean and x^2 = 2x on J); then J = nilpotents",
        Arity::Single, "applied to every characteristic 2^k"}, t10},
      {{"T11", "radical properties",
        "idempotent+tripotent sums => J nil, and on J: x^2 = 2x, 4x = 0, x^3 = 0, xy = yx, 2xy = 0",
        Arity::Single, ""}, t11},
      {{"T12", "idempotent-free characterization",
        "no nontrivial idempotents and 3 a unit => the four conditions agree (sums; local with "
        "R/J = Z2 and U(R)^2 = 1; R/J = Z2 and x^2 = 2x on J; weakly tripotent), then R commutative",
        Arity::Single, "rings where only '3 is a unit' fails are flagged"}, t12},
      {{"T13", "abelian implies commutative",
        "R abelian and weakly tripotent => R commutative", Arity::Single, ""}, t13},
      {{"T14", "idempotents on nilpotents",
        "R commutative weakly tripotent of characteristic 2^k, e idempotent => en = 0 for all "
        "nilpotent n, or en = n for all nilpotent n",
        Arity::Single, ""}, t14},
      {{"T15", "structure certificate",
        "R commutative weakly tripotent => R' embeds in R_0 x prod R'/I_x where R_0 is a weakly "
        "tripotent ring without nontrivial idempotents and each R'/I_x is Boolean",
        Arity::Single, ""}, t15},
      {{"T16", "sums and differences of idempotents",
        "every x = e +- f with commuting idempotents => R abelian, commutative, R_0 of order <= 4, "
        "irreducible quotients of R' are Z2 or Z4",
        Arity::Single, "three-factor reading R0 x R1 x R2; Z2/Z4 decided by order and characteristic"},
       t16},
      {{"T17", "strict inclusion",
        "sums/differences of commuting idempotents => weakly tripotent; Z8 is weakly tripotent but "
        "not of that form",
        Arity::Single, "Z8 is checked on every run"}, t17},
      {{"T18", "examples",
        "T2(Z2) irreducible, weakly tripotent, not local, not commutative; idealization weakly "
        "tripotent <=> 2N = 0; twisted product k=2 weakly tripotent; Example3 monolith {0,2}; "
        "Z2 x (Z2 x Z2) idealization reducible",
        Arity::Global, "twisted product k=3 is recorded, not asserted"}, nullptr},
  };
  return list;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : registry())
    if (e.info.id == id) return e;
  throw PreconditionError("unknown check '" + std::string(id) + "'");
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CheckInfo& check_info(std::string_view id) { return entry(id).info; }

Verdict run_check(std::string_view id, const std::vector<NamedRing>& rings) {
  const Entry& e = entry(id);
  Verdict v;
  v.check_id = e.info.id;
  for (const auto& r : rings) v.ring_ids.push_back(r.name);
  const auto start = std::chrono::steady_clock::now();
  Result res{Status::NotApplicable, Json::object()};
  switch (e.info.arity) {
    case Arity::Single:
      if (rings.size() != 1) throw PreconditionError(v.check_id + " takes exactly one ring");
      res = e.single(rings.front().ring);
      break;
    case Arity::List:
      if (rings.empty()) throw PreconditionError(v.check_id + " takes a nonempty list of rings");
      res = t09(rings);
      break;
    case Arity::Global:
      if (!rings.empty()) throw PreconditionError(v.check_id + " takes no rings");
      res = t18();
      break;
  }
  v.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start).count();
  v.status = res.status;
  v.certificate = std::move(res.certificate);
  return v;
}

std::vector<std::vector<NamedRing>> product_families(const std::vector<NamedRing>& rings) {
  std::vector<NamedRing> base;
  for (int n : {2, 3, 4, 6, 8}) base.push_back({"Z" + std::to_string(n), zmod(n)});
  std::vector<std::vector<NamedRing>> out;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b) out.push_back({base[a], base[b]});
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b)
      for (std::size_t c = b; c < base.size(); ++c) out.push_back({base[a], base[b], base[c]});
  for (const auto& r : rings) {
    out.push_back({r});
    for (std::size_t i = 0; i < 3; ++i) out.push_back({r, base[i]});
  }
  return out;
}

bool CorpusReport::ok() const {
  auto it = counts.find("fails");
  return it == counts.end() || it->second == 0;
}

CorpusReport run_corpus(const std::vector<std::string>& ids,
                        const std::vector<NamedRing>& rings) {
  std::vector<std::string> todo = ids;
  if (todo.empty())
    for (const auto& c : list_checks()) todo.push_back(c.id);
  CorpusReport rep;
  for (const auto& s : {"holds", "fails", "not_applicable"}) rep.counts[s] = 0;
  auto record = [&](Verdict v) {
    ++rep.counts[std::string(status_name(v.status))];
    rep.verdicts.push_back(std::move(v));
  };
  for (const auto& id : todo) {
    const auto& info = check_info(id);
    switch (info.arity) {
      case Arity::Single:
        for (const auto& r : rings) record(run_check(id, {r}));
        break;
      case Arity::List:
        for (const auto& fam : product_families(rings)) record(run_check(id, fam));
        break;
      case Arity::Global:
        record(run_check(id, {}));
        break;
    }
  }
  return rep;
}

Json verdict_json(const Verdict& v, bool with_timing) {
  Json out{{"check", v.check_id},
           {"rings", v.ring_ids},
           {"status", status_name(v.status)},
           {"certificate", v.certificate}};
  if (with_timing) out["elapsed_ms"] = v.elapsed_ms;
  return out;
}

}  // namespace wtring

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "wtring/checks.hpp"
#include "wtring/classify.hpp"
#include "wtring/constructors.hpp"
#include "wtring/corpus.hpp"
#include "wtring/ideals.hpp"
#include "wtring/structure.hpp"

using namespace wtring;

namespace {

struct Criterion {
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    " << what << "\n";
    }
  }
};

const std::vector<NamedRing>& corpus() {
  static const auto c = builtin_corpus();
  return c;
}

const Ring& corpus_ring(std::string_view name) {
  for (const auto& nr : corpus())
    if (nr.name == name) return nr.ring;
  throw std::runtime_error("missing corpus ring " + std::string(name));
}

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void c1(Criterion& c) {
  const std::string cmd = std::string("\"") + WTRING_CLI + "\" verify --check all --corpus builtin > /dev/null";
  const int rc = std::system(cmd.c_str());
  c.expect(rc == 0, "CLI verify exited with status " + std::to_string(rc));
  auto rep = run_corpus({}, corpus());
  c.expect(rep.counts["fails"] == 0, std::to_string(rep.counts["fails"]) + " failing verdicts");
  for (const auto& v : rep.verdicts)
    c.expect(v.status != Status::Fails, v.check_id + " fails: " + v.certificate.dump());
  std::set<std::string> ids;
  for (const auto& v : rep.verdicts) ids.insert(v.check_id);
  c.expect(ids.size() == 18, "not every check ran");
}

void c2(Criterion& c) {
  auto z8 = classify(corpus_ring("Z8"));
  c.expect(z8.flag("weakly_tripotent"), "Z8 not weakly tripotent");
  c.expect(!z8.flag("sum_diff_idem"), "Z8 sum_diff_idem true");

  const Ring& p = corpus_ring("Z4xZ4");
  auto pr = classify(p);
  const auto& w = pr.get("weakly_tripotent");
  c.expect(!w.value, "Z4xZ4 weakly tripotent");
  c.expect(w.witness.size() == 1 && p.label(w.witness[0]) == "(1,2)" && w.witness[0] == 6,
           "Z4xZ4 witness is not (1,2)");
  c.expect(pr.flag("sum_idem_trip"), "Z4xZ4 sum_idem_trip false");

  auto t2 = classify(corpus_ring("T2_Z2"));
  c.expect(t2.flag("weakly_tripotent"), "T2_Z2 not weakly tripotent");
  c.expect(t2.flag("subdirectly_irreducible"), "T2_Z2 not subdirectly irreducible");
  c.expect(!t2.flag("commutative"), "T2_Z2 commutative");
  c.expect(!t2.flag("local"), "T2_Z2 local");

  const Ring& m = corpus_ring("M2_Z2");
  auto mr = classify(m);
  const auto& x46 = mr.get("x4_eq_x6");
  c.expect(!x46.value, "M2_Z2 x4_eq_x6 true");
  c.expect(x46.witness.size() == 1 && m.label(x46.witness[0]) == "[[1,1],[1,0]]",
           "M2_Z2 witness is not [[1,1],[1,0]]");
  // Independent least-witness scan.
  Elem least = 0;
  while (least < m.order() && oracle::pow(m, least, 4) == oracle::pow(m, least, 6)) ++least;
  c.expect(!x46.witness.empty() && x46.witness[0] == least, "M2_Z2 witness is not least");
}

void c3(Criterion& c) {
  const std::set<std::size_t> allowed{2, 3, 4, 6, 8, 12, 24};
  for (const auto& [name, r] : corpus()) {
    if (!oracle::weakly_tripotent(r)) continue;
    c.expect(classify(r).flag("weakly_tripotent"), name + " misclassified");
    c.expect(allowed.count(characteristic(r)) == 1,
             name + " has characteristic " + std::to_string(characteristic(r)));
  }
  c.expect(!is_weakly_tripotent(corpus_ring("Z16")).holds, "Z16 weakly tripotent");
}

void c4(Criterion& c) {
  auto s = char24_split(corpus_ring("Z24"));
  c.expect(s.f == 9, "f != 9");
  c.expect(s.e == 16, "e != 16");
  c.expect(s.two_part && s.two_part->ring.order() == 8, "2-part order != 8");
  c.expect(s.three_part && s.three_part->ring.order() == 3, "3-part order != 3");
}

void c5(Criterion& c) {
  std::size_t n = 0;
  for (const auto& [name, r] : corpus()) {
    if (!power_of_two(characteristic(r))) continue;
    ++n;
    auto rep = classify(r);
    const bool a = rep.flag("sum_idem_trip");
    const bool b = rep.flag("x4_eq_x6");
    const bool q = rep.flag("radical_quotient_boolean");
    const bool u = q && rep.flag("units_exp_2");
    const bool d = q && rep.flag("radical_sq_rule");
    c.expect(a == b && b == u && u == d, name + ": flags disagree");
    if (a)
      c.expect(jacobson_radical(r).members().members() == oracle::nilpotent_set(r),
               name + ": J differs from nilpotents");
  }
  c.expect(n > 0, "no corpus ring of characteristic 2^k");
}

void c6(Criterion& c) {
  std::size_t n = 0;
  auto check = [&](const std::string& label, const Ring& r, bool two_kills) {
    ++n;
    auto w = is_weakly_tripotent(r);
    c.expect(w.holds == two_kills, label + ": weakly tripotent " + std::to_string(w.holds));
    c.expect(w.holds == oracle::weakly_tripotent(r), label + ": oracle disagrees");
    if (!w.holds) {
      c.expect(w.witness.size() == 1, label + ": no witness");
      if (w.witness.size() == 1) {
        const Elem x = w.witness[0];
        c.expect(!oracle::tripotent(r, x) && !oracle::tripotent(r, r.add(r.one(), x)),
                 label + ": witness does not reproduce");
      }
    }
  };
  for (const auto& [name, r] : corpus()) {
    if (!name.starts_with("Idl_")) continue;
    check(name, r, name.find("N4") == std::string::npos);
  }
  auto t18 = run_check("T18", {});
  c.expect(t18.status == Status::Holds, "T18 does not hold");
  for (const auto& e : t18.certificate["idealization"]) {
    const bool two_kills = e["two_N_zero"].get<bool>();
    ++n;
    c.expect(e["weakly_tripotent"].get<bool>() == two_kills, "sweep entry " + e.dump());
    if (!two_kills) c.expect(e.contains("witness") && !e["witness"].empty(), "sweep entry lacks witness");
  }
  c.expect(n >= 8, "too few idealizations");
}

void c7(Criterion& c) {
  auto pr = presented_ring(example3_presentation());
  const Ring& r = pr.ring;
  // Oracle: additive closure of the relation ideal inside the degree-2
  // truncation Z4<1, X, Y, X^2, XY, Y^2>.
  const std::vector<std::pair<int, int>> monos{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  const std::vector<std::vector<std::int64_t>> rels{
      {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}, {2, 0, 0, 0, 1, 0}, {0, 2, 2, 0, 0, 0}};
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& rel : rels) {
    for (const auto& [mx, my] : monos) {
      std::vector<std::int64_t> g(6, 0);
      for (int i = 0; i < 6; ++i) {
        const int ex = monos[i].first + mx, ey = monos[i].second + my;
        for (int k = 0; k < 6; ++k)
          if (monos[k] == std::pair{ex, ey}) g[k] = (g[k] + rel[i]) % 4;
      }
      gens.push_back(g);
    }
  }
  const auto ideal = oracle::additive_span(gens, 6, 4);
  c.expect(4096 / ideal.size() == 16, "oracle order " + std::to_string(4096 / ideal.size()));
  c.expect(r.order() == 16, "order " + std::to_string(r.order()));
  c.expect(oracle::weakly_tripotent(r), "not weakly tripotent");
  auto irr = subdirect_irreducibility(r);
  c.expect(irr.irreducible, "not subdirectly irreducible");
  c.expect(irr.monolith.members().members() == std::vector<Elem>{0, scalar(r, 2)}, "monolith is not {0,2}");
  c.expect(r.label(scalar(r, 2)) == "2", "scalar 2 mislabelled");
}

void c8(Criterion& c) {
  const std::vector<std::uint64_t> ns{2, 3, 4, 6, 8};
  std::size_t n = 0;
  auto run = [&](const std::vector<std::uint64_t>& pick) {
    std::vector<Ring> f;
    std::size_t order = 1, non_trip = 0;
    std::string label;
    for (auto m : pick) {
      f.push_back(zmod(static_cast<std::int64_t>(m)));
      order *= m;
      non_trip += !is_tripotent_ring(f.back()).holds;
      label += (label.empty() ? "Z" : "xZ") + std::to_string(m);
    }
    if (order > order_cap()) return;
    ++n;
    Ring p = direct_product(f);
    const bool wt = is_weakly_tripotent(p).holds;
    c.expect(wt == (non_trip <= 1), label + ": criterion disagrees");
    c.expect(wt == oracle::product_of_zmods_weakly_tripotent(pick), label + ": oracle disagrees");
  };
  for (std::size_t a = 0; a < ns.size(); ++a)
    for (std::size_t b = a; b < ns.size(); ++b) {
      run({ns[a], ns[b]});
      for (std::size_t d = b; d < ns.size(); ++d) run({ns[a], ns[b], ns[d]});
    }
  c.expect(n == 15 + 35, "family count " + std::to_string(n));
}

void c9(Criterion& c) {
  std::size_t n = 0;
  for (const auto& [name, r] : corpus()) {
    if (!is_commutative(r) || !oracle::weakly_tripotent(r)) continue;
    ++n;
    auto cert = wt_structure(r);
    c.expect(cert.valid(), name + ": certificate invalid");
    if (cert.split.three_part) {
      const Ring& t = cert.split.three_part->ring;
      for (Elem x = 0; x < t.order(); ++x) c.expect(oracle::tripotent(t, x), name + ": 3-part not tripotent");
    }
    if (!cert.split.two_part) continue;
    const Ring& two = cert.split.two_part->ring;
    ElementSet meet = cert.complement.members();
    for (const auto& b : cert.boolean_ideals) {
      meet = meet.intersect(b.ideal.members());
      for (Elem y = 0; y < two.order(); ++y)
        c.expect(b.ideal.contains(two.sub(two.mul(y, y), y)), name + ": R/I_x not Boolean");
    }
    c.expect(meet.size() == 1, name + ": L meets the I_x nontrivially");
    if (cert.complement.size() < two.order()) {
      auto q = quotient(two, cert.complement);
      std::size_t idem = 0;
      for (Elem x = 0; x < q.ring.order(); ++x) idem += q.ring.mul(x, x) == x;
      c.expect(idem == 2, name + ": R/L has nontrivial idempotents");
    }
  }
  c.expect(n > 0, "no commutative weakly tripotent corpus ring");
}

void c10(Criterion& c) {
  for (const auto& [name, r] : corpus()) {
    auto rep = classify(r, name);
    for (const auto& v : consistency_violations(rep)) c.expect(false, name + ": " + v);

    const bool plus = weakly_holds(r, ElementPredicate::Tripotent, Sign::Plus).holds;
    const bool minus = weakly_holds(r, ElementPredicate::Tripotent, Sign::Minus).holds;
    c.expect(plus == minus, name + ": x+1 / 1-x conditions disagree");

    if (rep.flag("sum_idem_trip")) {
      const auto j = jacobson_radical(r).members().members();
      c.expect(j == oracle::nilpotent_set(r), name + ": J is not the nilpotent set");
      for (auto x : j) {
        const Elem x2 = r.mul(x, x);
        c.expect(x2 == r.add(x, x), name + ": x^2 != 2x on J");
        c.expect(multiple(r, 4, x) == 0, name + ": 4x != 0 on J");
        c.expect(r.mul(x2, x) == 0, name + ": x^3 != 0 on J");
        for (auto y : j) {
          const Elem xy = r.mul(x, y);
          c.expect(xy == r.mul(y, x), name + ": J not commutative");
          c.expect(r.add(xy, xy) == 0, name + ": 2xy != 0 on J");
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"verify --check all --corpus builtin has no failures", c1},
      {"golden classifications (Z8, Z4xZ4, T2_Z2, M2_Z2)", c2},
      {"weakly tripotent rings have characteristic dividing 24; Z16 is not", c3},
      {"char24_split(Z24) = (9, 16) with factor orders 8 and 3", c4},
      {"four-flag agreement in characteristic 2^k; J = nilpotents", c5},
      {"idealization weakly tripotent iff 2N = 0", c6},
      {"Example3: order 16, weakly tripotent, monolith {0,2}", c7},
      {"product criterion on pairs and triples of Z2, Z3, Z4, Z6, Z8", c8},
      {"structure certificates on commutative weakly tripotent rings", c9},
      {"property suite on the corpus", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << ": " << (c.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "\n"
              << c.log.str();
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}

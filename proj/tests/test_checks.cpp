#include "doctest.h"
#include "wtring/checks.hpp"
#include "wtring/classify.hpp"
#include "wtring/constructors.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"

using namespace wtring;

namespace {

Verdict one(std::string_view id, Ring r, std::string name = "R") {
  return run_check(id, {NamedRing{std::move(name), std::move(r)}});
}

}  // namespace

TEST_CASE("registry metadata") {
  const auto& checks = list_checks();
  REQUIRE(checks.size() == 18);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    char id[4];
    std::snprintf(id, sizeof id, "T%02zu", i + 1);
    CHECK(checks[i].id == id);
    CHECK_FALSE(checks[i].statement.empty());
  }
  CHECK(check_info("T10").statement.find("x^4 = x^6 for every x in R") != std::string::npos);
  CHECK(check_info("T15").statement.find("weakly tripotent ring without nontrivial idempotents") !=
        std::string::npos);
  CHECK(check_info("T09").arity == Arity::List);
  CHECK(check_info("T18").arity == Arity::Global);
  CHECK_THROWS_AS(check_info("T19"), PreconditionError);
  CHECK_THROWS_AS(run_check("T99", {}), PreconditionError);
}

TEST_CASE("arity is enforced") {
  CHECK_THROWS_AS(run_check("T01", {}), PreconditionError);
  CHECK_THROWS_AS(run_check("T09", {}), PreconditionError);
  CHECK_THROWS_AS(run_check("T18", {NamedRing{"Z2", zmod(2)}}), PreconditionError);
}

TEST_CASE("documented verdicts") {
  auto t09 = run_check("T09", {NamedRing{"Z8", zmod(8)}, NamedRing{"Z4", zmod(4)}});
  CHECK(t09.status == Status::Holds);
  CHECK(t09.certificate["product_weakly_tripotent"] == false);
  CHECK(t09.certificate["non_tripotent_factors"].size() == 2);
  CHECK(one("T10", zmod(8)).status == Status::Holds);
  CHECK(one("T17", zmod(8)).status == Status::Holds);
  CHECK(one("T05", zmod(16)).status == Status::Holds);
  auto t04 = one("T04", zmod(9));
  CHECK(t04.status == Status::NotApplicable);
  CHECK(t04.certificate.contains("hypothesis_failed"));
  CHECK(one("T04", zmod(3)).status == Status::Holds);
  CHECK(run_check("T18", {}).status == Status::Holds);
}

TEST_CASE("not_applicable names the hypothesis") {
  auto v = one("T13", triangular_ring(zmod(2), 2));
  CHECK(v.status == Status::NotApplicable);
  CHECK(v.certificate["hypothesis_failed"] == "abelian");
  auto t12 = one("T12", zmod(9));
  CHECK(t12.status == Status::NotApplicable);
  CHECK(t12.certificate["hypothesis_failed"] == "3 is a unit");
  CHECK(t12.certificate["only_failing_hypothesis"] == "3 is a unit");
}

TEST_CASE("T09 honours the order cap") {
  const auto saved = order_cap();
  set_order_cap(64);
  auto v = run_check("T09", {NamedRing{"Z8", zmod(8)}, NamedRing{"Z8", zmod(8)}, NamedRing{"Z2", zmod(2)}});
  set_order_cap(saved);
  CHECK(v.status == Status::NotApplicable);
}

TEST_CASE("corpus run has no failures and is deterministic") {
  auto corpus = builtin_corpus();
  auto a = run_corpus({}, corpus);
  auto b = run_corpus({}, corpus);
  CHECK(a.ok());
  CHECK(a.counts.at("fails") == 0);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(verdict_json(a.verdicts[i]) == verdict_json(b.verdicts[i]));
  }
  std::size_t total = 0;
  for (const auto& [k, n] : a.counts) total += n;
  CHECK(total == a.verdicts.size());
  // 16 single-ring checks per ring, one T09 verdict per family, one T18.
  CHECK(a.verdicts.size() == 16 * corpus.size() + product_families(corpus).size() + 1);
}

TEST_CASE("product families") {
  auto fams = product_families({NamedRing{"Z2", zmod(2)}});
  CHECK(fams.size() == 15 + 35 + 4);
  CHECK(fams.front().size() == 2);
  CHECK(fams.back().size() == 2);
}

TEST_CASE("certificates reproduce their status") {
  // A failing hypothesis witness is a real counterexample.
  auto v = one("T01", zmod(16));
  REQUIRE(v.status == Status::NotApplicable);
  const Elem x = v.certificate["witness"][0]["index"].get<Elem>();
  Ring z = zmod(16);
  CHECK(power(z, x, 3) != x);
  CHECK(power(z, z.add(1, x), 3) != z.add(1, x));
}

TEST_CASE("verdict JSON") {
  auto v = one("T05", zmod(4), "Z4");
  auto j = verdict_json(v);
  CHECK(j["check"] == "T05");
  CHECK(j["rings"] == Json::array({"Z4"}));
  CHECK(j["status"] == "holds");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(verdict_json(v, true).contains("elapsed_ms"));
}

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtring/ideals.hpp"
#include "wtring/ring.hpp"

namespace wtring {

/// Result of a ring-level scan. For universal predicates the witness is the
/// least counterexample (empty when the predicate holds); witnesses are
/// always least-index so reports are reproducible.
struct Outcome {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return holds; }
  static Outcome fail(std::vector<Elem> w) { return {false, std::move(w)}; }
};

bool is_idempotent(const Ring& r, Elem x);
bool is_tripotent(const Ring& r, Elem x);
ElementSet idempotents(const Ring& r);
ElementSet tripotents(const Ring& r);

enum class ElementPredicate { Idempotent, Tripotent };
enum class Sign { Plus, Minus };

/// For every x, P(x) or P(1 + x) (Plus) / P(1 - x) (Minus).
Outcome weakly_holds(const Ring& r, ElementPredicate p, Sign s);
Outcome is_weakly_tripotent(const Ring& r);

Outcome is_tripotent_ring(const Ring& r);
Outcome is_boolean(const Ring& r);
Outcome x4_eq_x6(const Ring& r);
Outcome units_exponent_two(const Ring& r);
Outcome radical_square_rule(const Ring& r);
Outcome radical_square_rule(const Ring& r, const Ideal& radical);
Outcome commutativity(const Ring& r);
Outcome is_abelian(const Ring& r);
Outcome is_local(const Ring& r);

/// Element-wise decompositions x = a + b (or a - b). parts[x] holds the
/// least pair found for x.
struct SumDecomposition {
  struct Part {
    Elem first;
    Elem second;
    bool difference = false;
  };
  bool holds = true;
  std::optional<Elem> counterexample;
  std::vector<std::optional<Part>> parts;

  explicit operator bool() const noexcept { return holds; }
};

/// x = e + t with e^2 = e, t^3 = t, et = te.
SumDecomposition sum_idem_tripotent(const Ring& r);
/// x = s + t with commuting tripotents s, t.
SumDecomposition sum_two_tripotents(const Ring& r);
/// x = e + f or x = e - f with commuting idempotents e, f.
SumDecomposition sum_diff_commuting_idempotents(const Ring& r);

struct ClassificationReport {
  struct Flag {
    std::string name;
    bool value;
    std::vector<Elem> witness;
  };

  std::string ring_id;
  std::size_t order = 0;
  std::size_t characteristic = 0;
  std::vector<Flag> flags;
  std::vector<std::optional<SumDecomposition::Part>> idem_tripotent_parts;

  const Flag& get(std::string_view name) const;
  bool flag(std::string_view name) const { return get(name).value; }
};

/// Flag names in report order.
const std::vector<std::string>& flag_names();

ClassificationReport classify(const Ring& r, std::string ring_id = "");

/// Implications between flags that every ring must satisfy; returns a
/// description of each one violated by the report.
std::vector<std::string> consistency_violations(const ClassificationReport& rep);

}  // namespace wtring

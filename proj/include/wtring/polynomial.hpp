#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wtring {

/// Exponent vector of a monomial, one entry per variable.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// "1", "X", "X^2Y", ... for the given variable names.
std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& vars);

/// Every exponent vector in `nvars` variables of total degree <= max_degree,
/// ordered by degree, then lexicographically descending (X^2, XY, Y^2).
std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// Sparse integer polynomial in a fixed number of commuting variables.
class Polynomial {
 public:
  using Terms = std::map<Exponents, std::int64_t>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Parses sums of terms such as "XY-2", "2X+2Y", "X^2", "3*X*Y^2 - 1".
  /// Variables are matched against `vars` longest-name first, so products
  /// may be written by juxtaposition.
  static Polynomial parse(std::string_view text,
                          const std::vector<std::string>& vars);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponents& e, std::int64_t coeff);
  Polynomial times_monomial(const Exponents& e) const;

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace wtring

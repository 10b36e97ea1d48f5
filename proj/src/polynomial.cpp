#include "wtring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wtring/error.hpp"

namespace wtring {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += vars.at(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void extend(std::size_t var, unsigned budget, Exponents& cur,
            std::vector<Exponents>& out) {
  if (var == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = 0; p <= budget; ++p) {
    cur[var] = p;
    extend(var + 1, budget - p, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  extend(0, max_degree, cur, out);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponents& e, std::int64_t coeff) {
  if (e.size() != nvars_)
    throw MalformedInput("monomial arity does not match polynomial");
  if (coeff == 0) return;
  auto& slot = terms_[e];
  slot += coeff;
  if (slot == 0) terms_.erase(e);
}

Polynomial Polynomial::times_monomial(const Exponents& e) const {
  Polynomial out(nvars_);
  for (const auto& [mono, c] : terms_) {
    Exponents m = mono;
    for (std::size_t i = 0; i < nvars_; ++i) m[i] += e.at(i);
    out.add_term(m, c);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, std::int64_t>> ordered(terms_.begin(),
                                                          terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    auto da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    std::int64_t mag = c < 0 ? -c : c;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    bool constant = total_degree(e) == 0;
    if (constant || mag != 1) out += std::to_string(mag);
    if (!constant) out += monomial_string(e, vars);
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text,
                             const std::vector<std::string>& vars) {
  std::vector<std::size_t> by_length(vars.size());
  std::iota(by_length.begin(), by_length.end(), 0);
  std::sort(by_length.begin(), by_length.end(), [&](auto a, auto b) {
    return vars[a].size() > vars[b].size();
  });

  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw MalformedInput("empty polynomial");

  auto fail = [&](const std::string& why) -> Polynomial {
    throw MalformedInput("cannot parse polynomial '" + std::string(text) +
                         "': " + why);
  };
  auto read_int = [&](std::size_t& pos) {
    std::int64_t v = 0;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      ++pos;
    }
    if (pos == start) fail("expected integer at offset " + std::to_string(pos));
    return v;
  };

  Polynomial p(vars.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::int64_t coeff = 1;
    Exponents e(vars.size(), 0);
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= read_int(pos);
        any = true;
        continue;
      }
      bool matched = false;
      for (auto vi : by_length) {
        const auto& name = vars[vi];
        if (!name.empty() && s.compare(pos, name.size(), name) == 0) {
          pos += name.size();
          unsigned exp = 1;
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            exp = static_cast<unsigned>(read_int(pos));
          }
          e[vi] += exp;
          matched = true;
          any = true;
          break;
        }
      }
      if (!matched)
        fail("unknown symbol at offset " + std::to_string(pos));
    }
    if (!any) fail("empty term");
    p.add_term(e, sign * coeff);
  }
  return p;
}

}  // namespace wtring

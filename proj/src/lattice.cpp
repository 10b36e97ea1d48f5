#include "wtring/lattice.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "wtring/error.hpp"

namespace wtring::lattice {

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

struct Bezout {
  std::int64_t g, s, t;
};

// s*a + t*b = g = gcd(a, b), a > 0, b > 0.
Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    auto q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

}  // namespace

ModularHermiteBasis::ModularHermiteBasis(std::size_t dim, std::int64_t modulus,
                                         const std::vector<Vector>& generators)
    : m_(modulus) {
  if (modulus < 1 || modulus > (std::int64_t{1} << 30))
    throw PreconditionError("lattice modulus must lie in [1, 2^30]");

  std::vector<Vector> pending;
  pending.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != dim) throw MalformedInput("generator has wrong dimension");
    Vector v(dim);
    bool nonzero = false;
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = mod(g[k], m_);
      nonzero |= v[k] != 0;
    }
    if (nonzero) pending.push_back(std::move(v));
  }

  rows_.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    // Start from m*e_j and fold in every pending row that is live at j.
    Vector piv(dim, 0);
    piv[j] = m_;
    for (auto& r : pending) {
      if (r[j] == 0) continue;
      auto [g, s, t] = extended_gcd(piv[j], r[j]);
      auto pa = piv[j] / g, rb = r[j] / g;
      for (std::size_t k = j; k < dim; ++k) {
        auto p = piv[k], q = r[k];
        piv[k] = s * p + t * q;
        r[k] = pa * q - rb * p;
        if (k > j) {
          piv[k] = mod(piv[k], m_);
          r[k] = mod(r[k], m_);
        }
      }
      r[j] = 0;
    }
    if (piv[j] <= 0)
      throw InvariantViolation("non-positive Hermite pivot");
    rows_.push_back(std::move(piv));
  }
}

Vector ModularHermiteBasis::reduce(Vector v) const {
  if (v.size() != rows_.size()) throw MalformedInput("vector has wrong dimension");
  for (auto& x : v) x = mod(x, m_);
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& row = rows_[j];
    auto q = v[j] / row[j];
    if (q == 0) continue;
    for (std::size_t k = j; k < v.size(); ++k) v[k] = mod(v[k] - q * row[k], m_);
  }
  return v;
}

bool ModularHermiteBasis::contains(const Vector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

std::uint64_t ModularHermiteBasis::index() const noexcept {
  std::uint64_t idx = 1;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    auto p = static_cast<std::uint64_t>(rows_[j][j]);
    if (idx > std::numeric_limits<std::uint64_t>::max() / p)
      return std::numeric_limits<std::uint64_t>::max();
    idx *= p;
  }
  return idx;
}

}  // namespace wtring::lattice

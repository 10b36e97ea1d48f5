#pragma once

#include <cstdint>
#include <vector>

namespace wtring::lattice {

using Vector = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept;

/// Hermite basis of a full-rank lattice L with m*Z^dim <= L <= Z^dim.
///
/// Because m*e_j lies in L for every j, all arithmetic happens on residues
/// mod m. The basis is upper triangular in column order 0..dim-1: row j has
/// zeros left of column j and a positive pivot dividing m. reduce() maps a
/// vector to the unique coset representative with coordinate j in
/// [0, pivot(j)), so columns that should be eliminated first belong at the
/// front.
class ModularHermiteBasis {
 public:
  ModularHermiteBasis(std::size_t dim, std::int64_t modulus,
                      const std::vector<Vector>& generators);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::int64_t modulus() const noexcept { return m_; }
  std::int64_t pivot(std::size_t col) const { return rows_.at(col).at(col); }
  const Vector& row(std::size_t col) const { return rows_.at(col); }

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  /// [Z^dim : L] = product of pivots, saturating at UINT64_MAX.
  std::uint64_t index() const noexcept;

 private:
  std::int64_t m_;
  std::vector<Vector> rows_;
};

}  // namespace wtring::lattice

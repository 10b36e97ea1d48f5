#include "wtring/constructors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>

#include "wtring/error.hpp"
#include "wtring/lattice.hpp"

namespace wtring {

namespace {

std::atomic<std::size_t> g_order_cap{4096};

// Saturating product of orders, compared against the cap.
std::size_t checked_order(const std::vector<std::size_t>& sizes,
                          const std::string& what) {
  std::size_t total = 1;
  for (auto s : sizes) {
    if (s != 0 && total > order_cap() / s) {
      throw CapExceeded(what + " exceeds the order cap of " +
                        std::to_string(order_cap()));
    }
    total *= s;
  }
  if (total > order_cap())
    throw CapExceeded(what + " exceeds the order cap of " +
                      std::to_string(order_cap()));
  return total;
}

// Big-endian mixed radix: digit 0 is most significant.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<std::size_t> radices)
      : radices_(std::move(radices)) {}

  std::vector<Elem> decode(Elem x) const {
    std::vector<Elem> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      digits[i] = static_cast<Elem>(x % radices_[i]);
      x = static_cast<Elem>(x / radices_[i]);
    }
    return digits;
  }

  Elem encode(const std::vector<Elem>& digits) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i)
      x = x * radices_[i] + digits[i];
    return static_cast<Elem>(x);
  }

 private:
  std::vector<std::size_t> radices_;
};

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

}  // namespace

std::size_t order_cap() { return g_order_cap.load(); }

void set_order_cap(std::size_t cap) {
  if (cap < 2) throw PreconditionError("order cap must be at least 2");
  g_order_cap.store(cap);
}

Ring tabulate(std::size_t n, const std::function<Elem(Elem, Elem)>& add,
              const std::function<Elem(Elem, Elem)>& mul, Elem one,
              std::vector<std::string> labels) {
  std::vector<Elem> at(n * n), mt(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      at[a * n + b] = add(a, b);
      mt[a * n + b] = mul(a, b);
    }
  }
  return Ring(n, std::move(at), std::move(mt), one, std::move(labels));
}

Ring induced_ring(const Ring& r, const std::vector<Elem>& carrier, Elem unit) {
  if (carrier.empty() || carrier.front() != 0)
    throw PreconditionError("induced carrier must contain zero");
  std::vector<std::int64_t> pos(r.order(), -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (i && carrier[i] <= carrier[i - 1])
      throw PreconditionError("induced carrier must be sorted");
    pos.at(carrier[i]) = static_cast<std::int64_t>(i);
  }
  if (pos.at(unit) < 0) throw PreconditionError("unit not in carrier");
  auto lookup = [&](Elem parent) {
    if (pos[parent] < 0)
      throw InvariantViolation("carrier is not closed under the ring operations");
    return static_cast<Elem>(pos[parent]);
  };
  std::vector<std::string> labels;
  for (auto c : carrier) labels.push_back(r.label(c));
  return tabulate(
      carrier.size(),
      [&](Elem a, Elem b) { return lookup(r.add(carrier[a], carrier[b])); },
      [&](Elem a, Elem b) { return lookup(r.mul(carrier[a], carrier[b])); },
      lookup(unit), std::move(labels));
}

Ring zmod(std::int64_t n) {
  if (n < 2) throw PreconditionError("zmod requires n >= 2, got " + std::to_string(n));
  auto size = checked_order({static_cast<std::size_t>(n)}, "zmod(" + std::to_string(n) + ")");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return tabulate(
      size, [&](Elem a, Elem b) { return static_cast<Elem>((a + b) % size); },
      [&](Elem a, Elem b) {
        return static_cast<Elem>((std::uint64_t{a} * b) % size);
      },
      1, std::move(labels));
}

Ring direct_product(const std::vector<Ring>& factors) {
  if (factors.empty()) throw PreconditionError("direct_product needs a factor");
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.order());
  auto n = checked_order(sizes, "direct product");
  MixedRadix radix(sizes);

  std::vector<std::vector<Elem>> digits(n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    digits[x] = radix.decode(x);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
      parts.push_back(factors[i].label(digits[x][i]));
    labels[x] = tuple_label(parts);
  }
  auto combine = [&](Elem a, Elem b, bool multiply) {
    std::vector<Elem> out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out[i] = multiply ? factors[i].mul(digits[a][i], digits[b][i])
                        : factors[i].add(digits[a][i], digits[b][i]);
    }
    return radix.encode(out);
  };
  std::vector<Elem> ones;
  for (const auto& f : factors) ones.push_back(f.one());
  return tabulate(
      n, [&](Elem a, Elem b) { return combine(a, b, false); },
      [&](Elem a, Elem b) { return combine(a, b, true); }, radix.encode(ones),
      std::move(labels));
}

std::vector<Elem> product_coordinates(const std::vector<Ring>& factors, Elem x) {
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.order());
  return MixedRadix(sizes).decode(x);
}

Elem product_index(const std::vector<Ring>& factors,
                   const std::vector<Elem>& coords) {
  if (coords.size() != factors.size())
    throw MalformedInput("coordinate count does not match factor count");
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    factors[i].check_index(coords[i]);
    sizes.push_back(factors[i].order());
  }
  return MixedRadix(sizes).encode(coords);
}

namespace {

// Square matrices over `base` whose nonzero entries are restricted to
// `slots` (row-major positions). Slot s carries weight |base|^s.
Ring matrix_like(const Ring& base, int k, const std::vector<int>& slots,
                 const std::string& what) {
  if (k < 1) throw PreconditionError(what + " requires k >= 1");
  const std::size_t q = base.order();
  std::vector<std::size_t> sizes(slots.size(), q);
  auto n = checked_order(sizes, what);
  const auto kk = static_cast<std::size_t>(k * k);

  auto decode = [&](Elem x) {
    std::vector<Elem> m(kk, 0);
    for (int s : slots) {
      m[s] = static_cast<Elem>(x % q);
      x = static_cast<Elem>(x / q);
    }
    return m;
  };
  auto encode = [&](const std::vector<Elem>& m) {
    std::size_t x = 0;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) x = x * q + m[*it];
    return static_cast<Elem>(x);
  };

  std::vector<std::vector<Elem>> cache(n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    cache[x] = decode(x);
    std::string s = "[";
    for (int i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (int j = 0; j < k; ++j) {
        if (j) s += ",";
        s += base.label(cache[x][i * k + j]);
      }
      s += "]";
    }
    labels[x] = s + "]";
  }
  std::vector<Elem> id(kk, 0);
  for (int i = 0; i < k; ++i) id[i * k + i] = base.one();

  return tabulate(
      n,
      [&](Elem a, Elem b) {
        std::vector<Elem> m(kk);
        for (std::size_t i = 0; i < kk; ++i) m[i] = base.add(cache[a][i], cache[b][i]);
        return encode(m);
      },
      [&](Elem a, Elem b) {
        std::vector<Elem> m(kk, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            Elem acc = 0;
            for (int l = 0; l < k; ++l)
              acc = base.add(acc, base.mul(cache[a][i * k + l], cache[b][l * k + j]));
            m[i * k + j] = acc;
          }
        return encode(m);
      },
      encode(id), std::move(labels));
}

}  // namespace

Ring matrix_ring(const Ring& base, int k) {
  std::vector<int> slots;
  for (int s = 0; s < k * k; ++s) slots.push_back(s);
  return matrix_like(base, k, slots, "matrix_ring(k=" + std::to_string(k) + ")");
}

Ring triangular_ring(const Ring& base, int k) {
  std::vector<int> slots;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) slots.push_back(i * k + j);
  return matrix_like(base, k, slots,
                     "triangular_ring(k=" + std::to_string(k) + ")");
}

Elem matrix_index(const Ring& base, int k, const std::vector<Elem>& row_major) {
  if (row_major.size() != static_cast<std::size_t>(k * k))
    throw MalformedInput("matrix entry count does not match k*k");
  std::size_t x = 0;
  for (auto it = row_major.rbegin(); it != row_major.rend(); ++it) {
    base.check_index(*it);
    x = x * base.order() + *it;
  }
  return static_cast<Elem>(x);
}

bool annihilated_by_two(const ModuleSpec& module) {
  return std::all_of(module.cyclic_orders.begin(), module.cyclic_orders.end(),
                     [](auto c) { return c == 2; });
}

Ring idealization(int k, const ModuleSpec& module) {
  if (k < 1 || k > 3) throw PreconditionError("idealization requires k in {1,2,3}");
  const auto base = static_cast<std::size_t>(pow2(k));
  std::vector<std::size_t> sizes{base};
  for (auto c : module.cyclic_orders) {
    if (c < 2 || base % static_cast<std::size_t>(c) != 0) {
      throw PreconditionError("cyclic order " + std::to_string(c) +
                              " does not divide 2^" + std::to_string(k));
    }
    sizes.push_back(static_cast<std::size_t>(c));
  }
  auto n = checked_order(sizes, "idealization");
  MixedRadix radix(sizes);
  const std::size_t r = module.cyclic_orders.size();

  std::vector<std::vector<Elem>> d(n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    d[x] = radix.decode(x);
    std::vector<std::string> parts;
    for (std::size_t i = 1; i <= r; ++i) parts.push_back(std::to_string(d[x][i]));
    std::string m = r == 1 ? parts.front() : tuple_label(parts);
    labels[x] = "(" + std::to_string(d[x][0]) + "," + m + ")";
  }
  return tabulate(
      n,
      [&](Elem a, Elem b) {
        std::vector<Elem> out(r + 1);
        for (std::size_t i = 0; i <= r; ++i)
          out[i] = static_cast<Elem>((d[a][i] + d[b][i]) % sizes[i]);
        return radix.encode(out);
      },
      [&](Elem a, Elem b) {
        std::vector<Elem> out(r + 1);
        out[0] = static_cast<Elem>((d[a][0] * d[b][0]) % base);
        for (std::size_t i = 1; i <= r; ++i)
          out[i] = static_cast<Elem>((d[a][0] * d[b][i] + d[b][0] * d[a][i]) % sizes[i]);
        return radix.encode(out);
      },
      radix.encode([&] {
        std::vector<Elem> one(r + 1, 0);
        one[0] = 1;
        return one;
      }()),
      std::move(labels));
}

Ring twisted_product(int k) {
  if (k != 2 && k != 3) throw PreconditionError("twisted_product requires k in {2,3}");
  const auto base = static_cast<std::size_t>(pow2(k));
  auto n = checked_order({base, 4}, "twisted_product");
  MixedRadix radix({base, 4});
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    auto d = radix.decode(x);
    labels[x] = tuple_label({std::to_string(d[0]), std::to_string(d[1])});
  }
  return tabulate(
      n,
      [&](Elem a, Elem b) {
        auto x = radix.decode(a), y = radix.decode(b);
        return radix.encode({static_cast<Elem>((x[0] + y[0]) % base),
                             static_cast<Elem>((x[1] + y[1]) % 4)});
      },
      [&](Elem a, Elem b) {
        auto x = radix.decode(a), y = radix.decode(b);
        return radix.encode(
            {static_cast<Elem>((x[0] * y[0]) % base),
             static_cast<Elem>((x[0] * y[1] + x[1] * y[0] + 2 * x[1] * y[1]) % 4)});
      },
      radix.encode({1, 0}), std::move(labels));
}

Presentation Presentation::parse(std::int64_t modulus,
                                 std::vector<std::string> vars,
                                 const std::vector<std::string>& relations,
                                 unsigned degree_bound) {
  Presentation p;
  p.modulus = modulus;
  p.vars = std::move(vars);
  p.degree_bound = degree_bound;
  for (const auto& text : relations)
    p.relations.push_back(Polynomial::parse(text, p.vars));
  return p;
}

Elem evaluate(const Ring& r, const std::vector<Elem>& values,
              const Polynomial& poly) {
  if (values.size() != poly.nvars())
    throw MalformedInput("evaluation point has the wrong number of values");
  Elem acc = 0;
  for (const auto& [e, c] : poly.terms()) {
    Elem term = r.one();
    for (std::size_t i = 0; i < e.size(); ++i)
      term = r.mul(term, power(r, values[i], e[i]));
    acc = r.add(acc, multiple(r, c, term));
  }
  return acc;
}

namespace {

void validate(const Presentation& p) {
  if (p.modulus < 2) throw PreconditionError("presentation modulus must be >= 2");
  std::set<std::string> names;
  for (const auto& v : p.vars) {
    if (v.empty()) throw MalformedInput("empty variable name");
    if (!names.insert(v).second) throw MalformedInput("duplicate variable " + v);
  }
  for (const auto& rel : p.relations) {
    if (rel.nvars() != p.vars.size())
      throw MalformedInput("relation arity does not match the variables");
    if (rel.is_zero()) throw PreconditionError("relations must be nonzero");
    if (rel.degree() > p.degree_bound + 1) {
      throw PreconditionError("relation " + rel.to_string(p.vars) +
                              " exceeds the degree bound " +
                              std::to_string(p.degree_bound) + " + 1");
    }
  }
}

}  // namespace

PresentedRing presented_ring(const Presentation& p) {
  using lattice::Vector;
  validate(p);
  const std::size_t nv = p.vars.size();
  const unsigned d = p.degree_bound;
  const unsigned top = d + 1;
  const std::int64_t m = p.modulus;

  // Coordinates are the monomials of degree <= d+1, highest degree first so
  // the Hermite basis eliminates degree-overflow monomials before anything
  // else.
  const auto graded = monomials_up_to(nv, std::max(2 * d, top));
  std::vector<Exponents> cols;
  for (auto it = graded.rbegin(); it != graded.rend(); ++it)
    if (total_degree(*it) <= top) cols.push_back(*it);
  std::map<Exponents, std::size_t> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
  const std::size_t dim = cols.size();

  auto to_vector = [&](const Polynomial& poly) {
    Vector v(dim, 0);
    for (const auto& [e, c] : poly.terms()) v[col_of.at(e)] = lattice::mod(c, m);
    return v;
  };

  // Multiples of each relation that stay inside degree d+1 (no truncation,
  // so every generator genuinely lies in the ideal).
  std::vector<Vector> gens;
  for (const auto& rel : p.relations) {
    for (const auto& mono : cols) {
      if (total_degree(mono) + rel.degree() <= top)
        gens.push_back(to_vector(rel.times_monomial(mono)));
    }
  }
  lattice::ModularHermiteBasis basis(dim, m, gens);

  for (std::size_t j = 0; j < dim; ++j) {
    if (total_degree(cols[j]) == top && basis.pivot(j) != 1) {
      throw NotClosed("presentation not closed at bound " + std::to_string(d) +
                      ": monomial " + monomial_string(cols[j], p.vars) +
                      " is irreducible");
    }
  }

  // Free coordinates, constant term first (least significant digit).
  std::vector<std::size_t> free;
  for (std::size_t j = dim; j-- > 0;)
    if (basis.pivot(j) > 1) free.push_back(j);
  std::vector<std::size_t> radices;
  for (auto j : free) radices.push_back(static_cast<std::size_t>(basis.pivot(j)));
  const auto n = checked_order(radices, "presentation quotient");
  if (n < 2) throw PreconditionError("presentation collapses to the trivial ring");

  auto to_index = [&](const Vector& reduced) {
    std::size_t x = 0;
    for (std::size_t i = free.size(); i-- > 0;)
      x = x * radices[i] + static_cast<std::size_t>(reduced[free[i]]);
    return static_cast<Elem>(x);
  };
  std::vector<Vector> reps(n, Vector(dim, 0));
  for (std::size_t x = 0; x < n; ++x) {
    auto rest = x;
    for (std::size_t i = 0; i < free.size(); ++i) {
      reps[x][free[i]] = static_cast<std::int64_t>(rest % radices[i]);
      rest /= radices[i];
    }
  }

  // Normal forms of every monomial up to degree 2d. Above d+1 they are
  // built as x_i * (normal form of the cofactor).
  std::map<Exponents, Vector> normal;
  for (const auto& mono : graded) {
    if (total_degree(mono) <= top) {
      Vector e(dim, 0);
      e[col_of.at(mono)] = 1;
      normal[mono] = basis.reduce(e);
      continue;
    }
    std::size_t var = 0;
    while (mono[var] == 0) ++var;
    Exponents cof = mono;
    --cof[var];
    const auto& prev = normal.at(cof);
    Vector shifted(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      if (prev[j] == 0) continue;
      Exponents e = cols[j];
      ++e[var];
      auto& slot = shifted[col_of.at(e)];
      slot = lattice::mod(slot + prev[j], m);
    }
    normal[mono] = basis.reduce(shifted);
  }

  std::vector<std::vector<const Vector*>> basis_products(free.size());
  for (std::size_t a = 0; a < free.size(); ++a) {
    for (std::size_t b = 0; b < free.size(); ++b) {
      Exponents e = cols[free[a]];
      for (std::size_t i = 0; i < nv; ++i) e[i] += cols[free[b]][i];
      basis_products[a].push_back(&normal.at(e));
    }
  }

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    Polynomial poly(nv);
    for (auto j : free) poly.add_term(cols[j], reps[x][j]);
    labels[x] = poly.to_string(p.vars);
  }

  Ring ring = tabulate(
      n,
      [&](Elem a, Elem b) {
        Vector v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = reps[a][j] + reps[b][j];
        return to_index(basis.reduce(std::move(v)));
      },
      [&](Elem a, Elem b) {
        Vector v(dim, 0);
        for (std::size_t i = 0; i < free.size(); ++i) {
          auto ca = reps[a][free[i]];
          if (ca == 0) continue;
          for (std::size_t k = 0; k < free.size(); ++k) {
            auto cb = reps[b][free[k]];
            if (cb == 0) continue;
            const auto& prod = *basis_products[i][k];
            for (std::size_t j = 0; j < dim; ++j)
              if (prod[j]) v[j] = lattice::mod(v[j] + ca * cb % m * prod[j], m);
          }
        }
        return to_index(basis.reduce(std::move(v)));
      },
      to_index(normal.at(Exponents(nv, 0))), std::move(labels));

  // Certification.
  AxiomOptions opts;
  opts.exhaustive_limit = 256;
  auto report = verify_axioms(ring, opts);
  if (!report.empty()) {
    throw NotClosed("presentation not closed at bound " + std::to_string(d) +
                    ": " + describe(report.front()));
  }
  if (!is_commutative(ring))
    throw NotClosed("presentation produced a non-commutative table");

  std::vector<Elem> generators;
  for (std::size_t i = 0; i < nv; ++i) {
    Exponents e(nv, 0);
    e[i] = 1;
    generators.push_back(to_index(normal.at(e)));
  }
  for (const auto& mono : graded) {
    if (total_degree(mono) > d) continue;
    Polynomial single(nv);
    single.add_term(mono, 1);
    if (evaluate(ring, generators, single) != to_index(normal.at(mono))) {
      throw NotClosed("monomial " + monomial_string(mono, p.vars) +
                      " is not the product of its generators");
    }
  }
  for (const auto& rel : p.relations) {
    if (evaluate(ring, generators, rel) != 0) {
      throw NotClosed("relation " + rel.to_string(p.vars) +
                      " does not vanish in the tabulated ring");
    }
  }
  return {std::move(ring), std::move(generators)};
}

Ring presentation_quotient(const Presentation& p) {
  return presented_ring(p).ring;
}

Subring subring_generated(const Ring& r, const ElementSet& gens) {
  const auto n = r.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  push(0);
  push(r.one());
  for (auto g : gens) {
    r.check_index(g);
    push(g);
  }
  // members grows while scanning; each pair is met when its later element
  // becomes the cursor.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem a = members[i];
    push(r.neg(a));
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem b = members[j];
      push(r.add(a, b));
      push(r.mul(a, b));
      push(r.mul(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  Ring sub = induced_ring(r, members, r.one());
  return {std::move(sub), std::move(members)};
}

}  // namespace wtring

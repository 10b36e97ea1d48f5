#include "wtring/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wtring/error.hpp"

namespace wtring {

ElementSet::ElementSet(std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::from_mask(const std::vector<char>& mask) {
  ElementSet s;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) s.members_.push_back(static_cast<Elem>(i));
  return s;
}

bool ElementSet::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

Ring::Ring(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
           Elem one, std::vector<std::string> labels)
    : n_(order), add_(std::move(add)), mul_(std::move(mul)), one_(one),
      labels_(std::move(labels)) {
  if (n_ == 0) throw MalformedInput("ring order must be positive");
  if (add_.size() != n_ * n_ || mul_.size() != n_ * n_) {
    std::ostringstream os;
    os << "table dimension mismatch: order " << n_ << " needs " << n_ * n_
       << " entries, got add=" << add_.size() << " mul=" << mul_.size();
    throw MalformedInput(os.str());
  }
  if (!labels_.empty() && labels_.size() != n_)
    throw MalformedInput("labels must be empty or have one entry per element");
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (add_[i] >= n_ || mul_[i] >= n_)
      throw MalformedInput("table entry out of range at position " +
                           std::to_string(i));
  }
  if (one_ >= n_) throw MalformedInput("unit index out of range");
  if (one_ == 0) throw PreconditionError("trivial ring rejected: one == zero");

  // Missing inverses fall back to 0; verify_axioms reports them.
  neg_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (add_[a * n_ + b] == 0) {
        neg_[a] = b;
        break;
      }
    }
  }
}

std::string Ring::label(Elem a) const {
  if (labels_.empty()) return std::to_string(a);
  return labels_.at(a);
}

void Ring::check_index(Elem a) const {
  if (a >= n_)
    throw MalformedInput("element index " + std::to_string(a) +
                         " out of range for order " + std::to_string(n_));
}

bool Ring::same_tables(const Ring& other) const noexcept {
  return n_ == other.n_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

namespace {

class ViolationLog {
 public:
  void record(const char* axiom, Elem a, Elem b, Elem c) {
    if (std::find(seen_.begin(), seen_.end(), axiom) != seen_.end()) return;
    seen_.push_back(axiom);
    report_.push_back({axiom, {a, b, c}});
  }
  AxiomReport take() { return std::move(report_); }

 private:
  std::vector<std::string> seen_;
  AxiomReport report_;
};

void check_triple(const Ring& r, Elem a, Elem b, Elem c, ViolationLog& log) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
    log.record("additive_associativity", a, b, c);
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
    log.record("multiplicative_associativity", a, b, c);
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
    log.record("left_distributivity", a, b, c);
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
    log.record("right_distributivity", a, b, c);
}

}  // namespace

AxiomReport verify_axioms(const Ring& r, const AxiomOptions& opts) {
  const auto n = static_cast<Elem>(r.order());
  ViolationLog log;
  for (Elem a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a)
      log.record("additive_identity", a, 0, 0);
    if (r.add(a, r.neg(a)) != 0) log.record("additive_inverse", a, 0, 0);
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a)
      log.record("multiplicative_identity", a, r.one(), 0);
    for (Elem b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a))
        log.record("additive_commutativity", a, b, 0);
  }

  if (r.order() <= opts.exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check_triple(r, a, b, c, log);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (std::size_t i = 0; i < opts.samples; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      check_triple(r, a, b, c, log);
    }
  }
  return log.take();
}

std::string describe(const AxiomViolation& v) {
  std::ostringstream os;
  os << v.axiom << " fails at (" << v.witness[0] << ", " << v.witness[1]
     << ", " << v.witness[2] << ")";
  return os.str();
}

void require_valid(const Ring& r, const AxiomOptions& opts) {
  auto report = verify_axioms(r, opts);
  if (!report.empty()) throw AxiomError(describe(report.front()));
}

std::size_t characteristic(const Ring& r) {
  Elem acc = r.one();
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (acc == 0) return k;
    acc = r.add(acc, r.one());
  }
  throw InvariantViolation("additive order of one exceeds the ring order");
}

Elem power(const Ring& r, Elem a, std::uint64_t k) {
  r.check_index(a);
  Elem result = r.one();
  Elem base = a;
  while (k > 0) {
    if (k & 1u) result = r.mul(result, base);
    base = r.mul(base, base);
    k >>= 1u;
  }
  return result;
}

Elem multiple(const Ring& r, std::int64_t k, Elem a) {
  r.check_index(a);
  Elem base = k < 0 ? r.neg(a) : a;
  auto m = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Elem result = 0;
  while (m > 0) {
    if (m & 1u) result = r.add(result, base);
    base = r.add(base, base);
    m >>= 1u;
  }
  return result;
}

Elem scalar(const Ring& r, std::int64_t k) { return multiple(r, k, r.one()); }

ElementSet units(const Ring& r) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<char> mask(n, 0);
  for (Elem u = 0; u < n; ++u) {
    if (mask[u]) continue;
    for (Elem v = 0; v < n; ++v) {
      if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) {
        mask[u] = mask[v] = 1;
        break;
      }
    }
  }
  return ElementSet::from_mask(mask);
}

ElementSet center(const Ring& r) {
  const auto n = static_cast<Elem>(r.order());
  std::vector<Elem> out;
  for (Elem c = 0; c < n; ++c) {
    bool central = true;
    for (Elem x = 0; x < n && central; ++x)
      central = r.mul(c, x) == r.mul(x, c);
    if (central) out.push_back(c);
  }
  return ElementSet(std::move(out));
}

bool is_commutative(const Ring& r) { return center(r).size() == r.order(); }

}  // namespace wtring

#include "wtring/corpus.hpp"

#include <functional>
#include <utility>

#include "wtring/error.hpp"

namespace wtring {

Presentation example3_presentation() {
  return Presentation::parse(4, {"X", "Y"}, {"X^2", "Y^2", "XY-2", "2X+2Y"}, 2);
}

Presentation z4_dual_numbers_presentation() {
  return Presentation::parse(4, {"X"}, {"X^2"}, 1);
}

namespace {

using Builder = std::function<Ring()>;

const std::vector<std::pair<std::string, Builder>>& entries() {
  static const std::vector<std::pair<std::string, Builder>> list = [] {
    std::vector<std::pair<std::string, Builder>> v;
    for (int n : {2, 3, 4, 6, 8, 9, 12, 16, 24})
      v.emplace_back("Z" + std::to_string(n), [n] { return zmod(n); });
    auto product = [](int a, int b) {
      return [a, b] { return direct_product({zmod(a), zmod(b)}); };
    };
    v.emplace_back("Z2xZ8", product(2, 8));
    v.emplace_back("Z4xZ4", product(4, 4));
    v.emplace_back("Z2xZ2", product(2, 2));
    v.emplace_back("Z3xZ4", product(3, 4));
    v.emplace_back("Z8xZ3", product(8, 3));
    v.emplace_back("M2_Z2", [] { return matrix_ring(zmod(2), 2); });
    v.emplace_back("T2_Z2", [] { return triangular_ring(zmod(2), 2); });
    struct Idl {
      int k;
      std::vector<std::int64_t> orders;
      const char* tag;
    };
    for (const auto& [k, orders, tag] : std::vector<Idl>{
             {1, {2}, "N2"}, {1, {2, 2}, "N2x2"}, {2, {2}, "N2"}, {2, {4}, "N4"},
             {2, {2, 2}, "N2x2"}, {3, {2}, "N2"}, {3, {4}, "N4"}, {3, {2, 2}, "N2x2"}}) {
      v.emplace_back("Idl_k" + std::to_string(k) + "_" + tag,
                     [k = k, orders = orders] { return idealization(k, {orders}); });
    }
    v.emplace_back("Twisted_k2", [] { return twisted_product(2); });
    v.emplace_back("Twisted_k3", [] { return twisted_product(3); });
    v.emplace_back("Example3", [] { return presentation_quotient(example3_presentation()); });
    v.emplace_back("Z4X_X2", [] { return presentation_quotient(z4_dual_numbers_presentation()); });
    return v;
  }();
  return list;
}

}  // namespace

std::vector<NamedRing> builtin_corpus() {
  std::vector<NamedRing> out;
  for (const auto& [name, build] : entries()) out.push_back({name, build()});
  return out;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.first);
  return out;
}

NamedRing builtin_ring(std::string_view name) {
  for (const auto& [n, build] : entries())
    if (n == name) return {n, build()};
  throw PreconditionError("unknown builtin ring '" + std::string(name) + "'");
}

}  // namespace wtring

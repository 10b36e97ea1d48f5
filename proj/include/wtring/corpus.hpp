#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wtring/constructors.hpp"
#include "wtring/ring.hpp"

namespace wtring {

/// Z_4[X,Y]/(X^2, Y^2, XY - 2, 2X + 2Y) at degree bound 2.
Presentation example3_presentation();

/// Z_4[X]/(X^2) at degree bound 1.
Presentation z4_dual_numbers_presentation();

/// The named rings every check is run against. Names are stable
/// identifiers ("Z8", "Z4xZ4", "T2_Z2", "Example3", ...).
std::vector<NamedRing> builtin_corpus();

std::vector<std::string> builtin_names();

/// Throws PreconditionError for an unknown name.
NamedRing builtin_ring(std::string_view name);

}  // namespace wtring

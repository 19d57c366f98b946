#pragma once

// Reference designs: two line spreads of PG(3,2) and their stars over <E>,
// and a non-isomorphic pair of line spreads of PG(5,2).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgiso/design_io.hpp"

namespace pgiso::catalog {

Spread psi1();
Spread psi2();
Star omega1();
Star omega2();
/// Cyclic line spread of PG(5,2) from w^6 + w + 1, flats in reference order.
Spread psi3();
/// psi3 with its last three flats re-partitioned; not isomorphic to psi3.
Spread psi4();

std::vector<std::string> names();
/// Design-file text of a named fixture, or nullopt.
std::optional<std::string_view> text(std::string_view name);

}  // namespace pgiso::catalog

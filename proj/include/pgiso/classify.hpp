#pragma once

// Exhaustive enumeration of small spreads and their isomorphism classes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgiso/designs.hpp"

namespace pgiso {

/// Largest u the enumerator accepts (point sets must fit a 64-bit mask).
inline constexpr int kMaxEnumerationDegree = 6;

/// Every (h-1)-flat of PG(u-1,2), ordered by the Yates-sorted point list.
std::vector<Flat> enumerate_flats(int u, int h);

/// Every (h-1)-spread of PG(u-1,2) by exact-cover backtracking (lowest
/// uncovered point first). Flats within a spread appear in selection order.
std::vector<Spread> enumerate_spreads(int u, int h);

struct Classification {
    std::size_t spread_count = 0;
    std::vector<Spread> representatives;
    std::vector<std::size_t> class_of;  // per enumerated spread
};

Classification classify_spreads(int u, int h);

/// Known isomorphism-class counts for small geometries.
struct ClassificationFact {
    int u;
    int h;
    std::optional<std::size_t> classes;  // nullopt when only cited
    std::string note;
};

const std::vector<ClassificationFact>& classification_facts();
std::optional<ClassificationFact> find_fact(int u, int h);

}  // namespace pgiso

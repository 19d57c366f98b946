#pragma once

// Isomorphism of balanced spreads and covering stars.
//
// Two designs are isomorphic when some collineation maps one onto a
// rearrangement of the other. The search fixes a set of r = u/h flats of the
// first spread whose union is a basis of P_u (a linearly independent family,
// LIF), relabels the spread so that those flats start with F_1..F_u, and then
// tries only the relabellings that send each LIF flat onto some flat of the
// second spread: an ordered choice of r target flats (If) times an ordered
// basis inside each target (IC). Any isomorphism has this shape, so
// exhausting the set proves non-isomorphism.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgiso/designs.hpp"
#include "pgiso/gf2.hpp"
#include "pgiso/signature.hpp"

namespace pgiso {

struct Lif {
    std::vector<std::size_t> flat_indices;  // 0-based, in selection order
    std::vector<Point> basis_points;        // h per flat, grouped by flat
};

/// Greedy scan in flat order, keeping a flat when it extends the independent
/// set. Basis points are the first independent h points in display order.
Lif find_lif(const Spread& spread);

struct LifNormalForm {
    Spread spread;            // C1(spread), LIF flats first, flat i leading with F_{ih+1..ih+h}
    Collineation to_normal;   // C1
    std::size_t lif_size;     // r
};

LifNormalForm normalize_lif(const Spread& spread, const Lif& lif);

/// 0-based relabelling index: target_flats[i] is the flat of the second spread
/// receiving LIF flat i; point_choice[i][s] is the position of
/// the image of F_{ih+s+1} within that target flat, in Yates order.
struct RelabelIndex {
    std::vector<std::size_t> target_flats;
    std::vector<std::vector<std::size_t>> point_choice;

    friend bool operator==(const RelabelIndex&, const RelabelIndex&) = default;
};

/// The u x u relabelling described by idx, or nullopt when its columns are
/// dependent. Throws pgiso::Error for a malformed index.
std::optional<Collineation> build_relabelling(const RelabelIndex& idx, const Spread& normalized, const Spread& target);

struct IsoOptions {
    bool deterministic = false;  // sequential canonical order, first witness
    unsigned jobs = 0;           // 0 = hardware concurrency
    bool prune = true;           // skip target-flat prefixes of deficient rank
};

enum class Verdict { isomorphic, non_isomorphic };

std::string to_string(Verdict v);

struct IsoResult {
    Verdict verdict = Verdict::non_isomorphic;
    std::optional<Collineation> witness;     // maps design 1 onto a rearrangement of design 2
    std::optional<RelabelIndex> relabelling; // search coordinates of the witness, when found by search
    std::uint64_t relabellings_tried = 0;
};

IsoResult iso_spreads(const Spread& a, const Spread& b, const IsoOptions& options = {});
IsoResult iso_stars(const Star& a, const Star& b, const IsoOptions& options = {});

/// Exhaustive search over all of GL(u,2); u <= 4 only.
IsoResult brute_force_iso(const Spread& a, const Spread& b);

bool verify_witness(const Collineation& c, const Spread& a, const Spread& b);
bool verify_witness(const Collineation& c, const Star& a, const Star& b);

/// mu! * ((2^t - 1)!)^mu: rearrangements of a star's rays and their points.
BigInt count_equiv_class(int n, int t, int t0);
/// |GL(n,2)| = prod_{i=1..n} (2^n - 2^(i-1)).
BigInt count_collineations(int n);
/// mu!/(mu-r)! * |GL(h,2)|^r with r = u/h.
BigInt count_search_space(int u, int h);
/// |GL(n,2)| * count_equiv_class(n, t, t0).
BigInt count_naive(int n, int t, int t0);

}  // namespace pgiso

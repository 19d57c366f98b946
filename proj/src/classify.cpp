#include "pgiso/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pgiso/error.hpp"
#include "pgiso/iso.hpp"

namespace pgiso {

namespace {

using PointSet = std::uint64_t;  // bit m-1 <-> point with mask m

PointSet to_set(const Flat& f) {
    PointSet s = 0;
    for (Point p : f.points()) s |= PointSet{1} << (p.mask() - 1);
    return s;
}

void check_degree(int u, int h) {
    if (u < 1 || u > kMaxEnumerationDegree) throw Error("enumeration supports 1 <= u <= 6");
    if (h < 1 || h > u) throw Error("need 1 <= h <= u");
}

}  // namespace

std::vector<Flat> enumerate_flats(int u, int h) {
    check_degree(u, h);
    const Mask points = (Mask{1} << u) - 1;
    std::map<std::vector<Point>, Flat> found;
    std::vector<Point> gens;
    auto recurse = [&](auto&& self, Mask from, const Gf2Basis& basis) -> void {
        if (static_cast<int>(gens.size()) == h) {
            std::vector<Point> pts = span(gens);
            std::sort(pts.begin(), pts.end());
            found.try_emplace(pts, Flat(pts));
            return;
        }
        for (Mask m = from; m <= points; ++m) {
            Gf2Basis next = basis;
            if (!next.insert(m)) continue;
            gens.emplace_back(m);
            self(self, m + 1, next);
            gens.pop_back();
        }
    };
    recurse(recurse, 1, Gf2Basis{});
    std::vector<Flat> out;
    out.reserve(found.size());
    for (auto& [key, flat] : found) out.push_back(std::move(flat));
    return out;
}

std::vector<Spread> enumerate_spreads(int u, int h) {
    check_degree(u, h);
    if (u % h != 0) throw Error("no balanced spread exists: h does not divide u");
    const std::vector<Flat> flats = enumerate_flats(u, h);
    std::vector<PointSet> sets;
    for (const Flat& f : flats) sets.push_back(to_set(f));
    const PointSet all = (u == 6 ? ~PointSet{0} >> 1 : (PointSet{1} << ((1U << u) - 1)) - 1);

    std::vector<Spread> out;
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, PointSet covered) -> void {
        if (covered == all) {
            std::vector<Flat> picked;
            for (std::size_t i : chosen) picked.push_back(flats[i]);
            out.emplace_back(u, h, std::move(picked));
            return;
        }
        const PointSet lowest = ~covered & (covered + 1);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!(sets[i] & lowest) || (sets[i] & covered)) continue;
            chosen.push_back(i);
            self(self, covered | sets[i]);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

Classification classify_spreads(int u, int h) {
    Classification result;
    const std::vector<Spread> spreads = enumerate_spreads(u, h);
    result.spread_count = spreads.size();
    IsoOptions options;
    options.deterministic = true;
    for (const Spread& s : spreads) {
        std::size_t cls = result.representatives.size();
        for (std::size_t k = 0; k < result.representatives.size(); ++k)
            if (iso_spreads(s, result.representatives[k], options).verdict == Verdict::isomorphic) {
                cls = k;
                break;
            }
        if (cls == result.representatives.size()) result.representatives.push_back(s);
        result.class_of.push_back(cls);
    }
    return result;
}

const std::vector<ClassificationFact>& classification_facts() {
    static const std::vector<ClassificationFact> facts = {
        {1, 1, 1, "trivial spread"},
        {2, 1, 1, "trivial spread"},
        {2, 2, 1, "trivial spread"},
        {3, 1, 1, "trivial spread"},
        {3, 3, 1, "trivial spread"},
        {4, 1, 1, "trivial spread"},
        {4, 2, 1, "all line spreads of PG(3,2) are isomorphic (Soicher 2000)"},
        {4, 4, 1, "trivial spread"},
        {5, 1, 1, "trivial spread"},
        {5, 5, 1, "trivial spread"},
        {6, 1, 1, "trivial spread"},
        {6, 2, 131044, "line spreads of PG(5,2) (Mateva and Topalova 2009)"},
        {6, 3, 1, "all plane spreads of PG(5,2) are isomorphic (Topalova and Zhelezova 2008)"},
        {6, 6, 1, "trivial spread"},
    };
    return facts;
}

std::optional<ClassificationFact> find_fact(int u, int h) {
    for (const auto& f : classification_facts())
        if (f.u == u && f.h == h) return f;
    return std::nullopt;
}

}  // namespace pgiso

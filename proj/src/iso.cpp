#include "pgiso/iso.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pgiso/error.hpp"

namespace pgiso {

namespace {

void check_same_shape(const Spread& a, const Spread& b) {
    if (a.u() != b.u() || a.h() != b.h()) throw Error("spreads have different parameters (u, h)");
}

void check_counts(int n, int t, int t0) {
    if (n < 1 || t0 < 0 || t0 >= t || t > n) throw Error("need 0 <= t0 < t <= n");
    if ((n - t0) % (t - t0) != 0) throw Error("t - t0 must divide n - t0");
    if (n > 30) throw Error("n too large");
}

BigInt factorial(std::uint64_t k) {
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
}

// Ordered independent h-tuples of Yates positions within a flat, lexicographic.
std::vector<std::vector<std::size_t>> independent_tuples(const Flat& f, int h) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, const Gf2Basis& basis) -> void {
        if (static_cast<int>(current.size()) == h) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            Gf2Basis next = basis;
            if (!next.insert(f.sorted_points()[i].mask())) continue;
            current.push_back(i);
            self(self, next);
            current.pop_back();
        }
    };
    recurse(recurse, Gf2Basis{});
    return out;
}

// Exhausts the relabelling set D for a LIF-normalized first spread.
class RelabellingSearch {
public:
    RelabellingSearch(const LifNormalForm& normal, const Spread& target, const IsoOptions& options)
        : normal_(normal), target_(target), options_(options), u_(target.u()), h_(target.h()),
          r_(normal.lif_size), mu_(target.mu()) {
        owner_.assign(std::size_t{1} << u_, 0);
        for (std::size_t j = 0; j < mu_; ++j)
            for (Point p : target.flat(j).points()) owner_[p.mask()] = static_cast<std::uint32_t>(j);

        // A flat maps into a target flat iff its basis does (target flats are closed).
        for (std::size_t i = r_; i < mu_; ++i) {
            Gf2Basis basis;
            std::vector<Mask> pts;
            for (Point p : normal.spread.flat(i).points())
                if (basis.insert(p.mask())) pts.push_back(p.mask());
            checks_.push_back(std::move(pts));
        }

        target_tuples_.reserve(mu_);
        for (std::size_t j = 0; j < mu_; ++j) {
            const auto positions = independent_tuples(target.flat(j), h_);
            std::vector<std::vector<Mask>> columns;
            for (const auto& pos : positions) {
                std::vector<Mask> c;
                for (std::size_t s : pos) c.push_back(target.flat(j).sorted_points()[s].mask());
                columns.push_back(std::move(c));
            }
            positions_.push_back(positions);
            target_tuples_.push_back(std::move(columns));
        }
        tuples_per_flat_ = target_tuples_.empty() ? 0 : target_tuples_.front().size();
    }

    IsoResult run() {
        unsigned jobs = options_.jobs ? options_.jobs : std::max(1U, std::thread::hardware_concurrency());
        if (options_.deterministic) jobs = 1;
        jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, mu_));

        if (jobs <= 1) {
            for (std::size_t first = 0; first < mu_ && !found_.load(); ++first) run_block(first);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    for (std::size_t first; !found_.load() && (first = next.fetch_add(1)) < mu_;) run_block(first);
                });
        }

        IsoResult result;
        result.relabellings_tried = tried_.load();
        if (winner_) {
            result.verdict = Verdict::isomorphic;
            result.relabelling = winner_;
            auto star = build_relabelling(*winner_, normal_.spread, target_);
            result.witness = *star * normal_.to_normal;
        }
        return result;
    }

private:
    struct BlockState {
        std::vector<std::size_t> targets;
        std::uint64_t tried = 0;
    };

    void run_block(std::size_t first) {
        BlockState state;
        state.targets.push_back(first);
        Gf2Basis basis;
        const bool ok = extend_basis(basis, first);
        if (ok || !options_.prune) choose_targets(state, basis, ok);
        tried_.fetch_add(state.tried);
    }

    bool extend_basis(Gf2Basis& basis, std::size_t flat) const {
        bool ok = true;
        for (Mask c : target_tuples_[flat].front()) ok = basis.insert(c) && ok;
        return ok;
    }

    void choose_targets(BlockState& state, const Gf2Basis& basis, bool independent) {
        if (found_.load()) return;
        if (state.targets.size() == r_) {
            scan_point_choices(state, independent);
            return;
        }
        for (std::size_t j = 0; j < mu_; ++j) {
            if (std::find(state.targets.begin(), state.targets.end(), j) != state.targets.end()) continue;
            Gf2Basis next = basis;
            const bool ok = extend_basis(next, j) && independent;
            if (!ok && options_.prune) continue;
            state.targets.push_back(j);
            choose_targets(state, next, ok);
            state.targets.pop_back();
            if (found_.load()) return;
        }
    }

    void scan_point_choices(BlockState& state, bool independent) {
        std::vector<std::size_t> digit(r_, 0);
        std::vector<Mask> cols(static_cast<std::size_t>(u_));
        while (true) {
            ++state.tried;
            for (std::size_t i = 0; i < r_; ++i) {
                const auto& tuple = target_tuples_[state.targets[i]][digit[i]];
                std::copy(tuple.begin(), tuple.end(), cols.begin() + static_cast<std::ptrdiff_t>(i * h_));
            }
            const bool full_rank = independent || rank(std::span<const Mask>(cols)) == u_;
            if (full_rank && accepts(cols)) {
                record(state, digit);
                return;
            }
            // Odometer: the last LIF flat's choice varies fastest.
            std::size_t pos = r_;
            while (pos > 0 && ++digit[pos - 1] == tuples_per_flat_) digit[--pos] = 0;
            if (pos == 0) return;
            if ((state.tried & 0xFFF) == 0 && found_.load()) return;
        }
    }

    bool accepts(const std::vector<Mask>& cols) const {
        auto image = [&](Mask v) {
            Mask out = 0;
            for (int j = 0; v != 0; ++j, v >>= 1)
                if (v & 1U) out ^= cols[static_cast<std::size_t>(j)];
            return out;
        };
        for (const auto& pts : checks_) {
            const std::uint32_t g = owner_[image(pts.front())];
            for (std::size_t k = 1; k < pts.size(); ++k)
                if (owner_[image(pts[k])] != g) return false;
        }
        return true;
    }

    void record(const BlockState& state, const std::vector<std::size_t>& digit) {
        std::scoped_lock guard(mutex_);
        if (found_.load()) return;
        RelabelIndex idx;
        idx.target_flats = state.targets;
        for (std::size_t i = 0; i < r_; ++i) idx.point_choice.push_back(positions_[state.targets[i]][digit[i]]);
        winner_ = std::move(idx);
        found_.store(true);
    }

    const LifNormalForm& normal_;
    const Spread& target_;
    IsoOptions options_;
    int u_;
    int h_;
    std::size_t r_;
    std::size_t mu_;
    std::vector<std::uint32_t> owner_;
    std::vector<std::vector<Mask>> checks_;
    std::vector<std::vector<std::vector<std::size_t>>> positions_;
    std::vector<std::vector<std::vector<Mask>>> target_tuples_;
    std::size_t tuples_per_flat_ = 0;

    std::atomic<bool> found_{false};
    std::atomic<std::uint64_t> tried_{0};
    std::mutex mutex_;
    std::optional<RelabelIndex> winner_;
};

}  // namespace

Lif find_lif(const Spread& spread) {
    Lif lif;
    Gf2Basis basis;
    const std::size_t r = static_cast<std::size_t>(spread.u() / spread.h());
    for (std::size_t i = 0; i < spread.mu() && lif.flat_indices.size() < r; ++i) {
        const Flat& f = spread.flat(i);
        Gf2Basis trial = basis;
        std::vector<Point> picked;
        for (Point p : f.points())
            if (static_cast<int>(picked.size()) < spread.h() && trial.insert(p.mask())) picked.push_back(p);
        // The flat extends the set only if its whole basis stays independent.
        if (static_cast<int>(picked.size()) < spread.h()) continue;
        basis = trial;
        lif.flat_indices.push_back(i);
        lif.basis_points.insert(lif.basis_points.end(), picked.begin(), picked.end());
    }
    if (lif.flat_indices.size() != r) throw std::logic_error("spread without a linearly independent family");
    return lif;
}

LifNormalForm normalize_lif(const Spread& spread, const Lif& lif) {
    std::vector<Mask> cols;
    for (Point p : lif.basis_points) cols.push_back(p.mask());
    const Collineation c1 = Collineation(Gf2Matrix(spread.u(), std::move(cols))).inverse();

    std::vector<bool> in_lif(spread.mu(), false);
    for (std::size_t i : lif.flat_indices) in_lif.at(i) = true;

    const auto h = static_cast<std::size_t>(spread.h());
    std::vector<Flat> flats;
    for (std::size_t k = 0; k < lif.flat_indices.size(); ++k) {
        // Basis images F_{kh+1..kh+h} first, then the remaining points in display order.
        std::vector<Point> pts;
        for (std::size_t s = 0; s < h; ++s) pts.emplace_back(Mask{1} << (k * h + s));
        for (Point p : spread.flat(lif.flat_indices[k]).points()) {
            Point q = c1(p);
            if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
        flats.emplace_back(std::move(pts));
    }
    for (std::size_t i = 0; i < spread.mu(); ++i)
        if (!in_lif[i]) flats.push_back(apply(c1, spread.flat(i)));
    return {Spread(spread.u(), spread.h(), std::move(flats)), c1, lif.flat_indices.size()};
}

std::optional<Collineation> build_relabelling(const RelabelIndex& idx, const Spread& normalized, const Spread& target) {
    check_same_shape(normalized, target);
    const auto r = static_cast<std::size_t>(target.u() / target.h());
    const auto h = static_cast<std::size_t>(target.h());
    if (idx.target_flats.size() != r || idx.point_choice.size() != r) throw Error("relabel index must have r columns");
    std::vector<Mask> cols;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = idx.target_flats[i];
        if (j >= target.mu()) throw Error("relabel index names a missing flat");
        if (std::count(idx.target_flats.begin(), idx.target_flats.end(), j) != 1)
            throw Error("relabel index repeats a target flat");
        if (idx.point_choice[i].size() != h) throw Error("relabel index column must have h entries");
        for (std::size_t s : idx.point_choice[i]) {
            if (s >= target.flat(j).size()) throw Error("relabel index names a missing point");
            cols.push_back(target.flat(j).sorted_points()[s].mask());
        }
    }
    Gf2Matrix m(target.u(), std::move(cols));
    if (rank(m) != target.u()) return std::nullopt;
    return Collineation(std::move(m));
}

std::string to_string(Verdict v) { return v == Verdict::isomorphic ? "ISOMORPHIC" : "NON-ISOMORPHIC"; }

IsoResult iso_spreads(const Spread& a, const Spread& b, const IsoOptions& options) {
    check_same_shape(a, b);
    if (signature(a, Repr::bitstring) == signature(b, Repr::bitstring))
        return {Verdict::isomorphic, Collineation::identity(a.u()), std::nullopt, 0};
    const LifNormalForm normal = normalize_lif(a, find_lif(a));
    RelabellingSearch search(normal, b, options);
    IsoResult result = search.run();
    if (result.witness && !verify_witness(*result.witness, a, b))
        throw std::logic_error("isomorphism witness failed verification");
    return result;
}

IsoResult iso_stars(const Star& a, const Star& b, const IsoOptions& options) {
    if (a.n() != b.n() || a.t() != b.t() || a.t0() != b.t0())
        throw Error("stars have different parameters (n, t, t0)");
    const NormalizedStar na = normalize_star(a);
    const NormalizedStar nb = normalize_star(b);
    IsoResult result = iso_spreads(na.spread, nb.spread, options);
    if (result.witness) {
        result.witness = nb.to_normal.inverse() * Collineation(embed(result.witness->matrix(), a.n())) * na.to_normal;
        if (!verify_witness(*result.witness, a, b)) throw std::logic_error("lifted star witness failed verification");
    }
    return result;
}

IsoResult brute_force_iso(const Spread& a, const Spread& b) {
    check_same_shape(a, b);
    const int u = a.u();
    if (u > 4) throw Error("brute force isomorphism is limited to u <= 4");
    const Signature want = signature(b, Repr::bitstring);

    IsoResult result;
    std::vector<Mask> cols;
    auto recurse = [&](auto&& self, const Gf2Basis& basis) -> bool {
        if (static_cast<int>(cols.size()) == u) {
            ++result.relabellings_tried;
            Collineation c(Gf2Matrix(u, cols));
            if (signature(apply(c, a), Repr::bitstring) != want) return false;
            result.verdict = Verdict::isomorphic;
            result.witness = c;
            return true;
        }
        for (Mask m = 1; m < (Mask{1} << u); ++m) {
            Gf2Basis next = basis;
            if (!next.insert(m)) continue;
            cols.push_back(m);
            if (self(self, next)) return true;
            cols.pop_back();
        }
        return false;
    };
    recurse(recurse, Gf2Basis{});
    return result;
}

bool verify_witness(const Collineation& c, const Spread& a, const Spread& b) {
    check_same_shape(a, b);
    if (c.size() != a.u()) throw Error("witness size does not match the spreads");
    return signature(apply(c, a)) == signature(b);
}

bool verify_witness(const Collineation& c, const Star& a, const Star& b) {
    if (c.size() != a.n() || a.n() != b.n()) throw Error("witness size does not match the stars");
    return equivalent(apply(c, a), b);
}

BigInt count_equiv_class(int n, int t, int t0) {
    check_counts(n, t, t0);
    const std::size_t mu = flat_count(n - t0, t - t0);
    const BigInt per_ray = factorial((std::uint64_t{1} << t) - 1);
    return factorial(mu) * boost::multiprecision::pow(per_ray, static_cast<unsigned>(mu));
}

BigInt count_collineations(int n) {
    if (n < 1 || n > 30) throw Error("n out of range");
    BigInt total = 1;
    for (int i = 1; i <= n; ++i) total *= (BigInt(1) << n) - (BigInt(1) << (i - 1));
    return total;
}

BigInt count_search_space(int u, int h) {
    const std::size_t mu = flat_count(u, h);
    const auto r = static_cast<std::size_t>(u / h);
    BigInt ordered = 1;
    for (std::size_t i = 0; i < r; ++i) ordered *= mu - i;
    return ordered * boost::multiprecision::pow(count_collineations(h), static_cast<unsigned>(r));
}

BigInt count_naive(int n, int t, int t0) { return count_collineations(n) * count_equiv_class(n, t, t0); }

}  // namespace pgiso

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pgiso/catalog.hpp"
#include "pgiso/classify.hpp"
#include "pgiso/design_io.hpp"
#include "pgiso/error.hpp"
#include "pgiso/field.hpp"
#include "pgiso/iso.hpp"
#include "pgiso/signature.hpp"

namespace pgiso::cli {

namespace {

// Decimal, 0b-binary or 0x-hex polynomial bitmask.
Mask parse_poly(const std::string& text) {
    int base = 10;
    std::string digits = text;
    if (digits.starts_with("0b") || digits.starts_with("0B")) {
        base = 2;
        digits = digits.substr(2);
    } else if (digits.starts_with("0x") || digits.starts_with("0X")) {
        base = 16;
        digits = digits.substr(2);
    }
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(digits, &used, base);
    } catch (const std::exception&) {
        used = 0;
    }
    if (digits.empty() || used != digits.size() || value > 0xFFFFFFFFUL)
        throw Error("cannot read polynomial '" + text + "'");
    return static_cast<Mask>(value);
}

// "3.9e20"-style rendering of a large count.
std::string approx(const BigInt& v) {
    const std::string digits = v.str();
    if (digits.size() <= 6) return digits;
    std::string out = digits.substr(0, 1) + "." + digits.substr(1, 1);
    return out + "e" + std::to_string(digits.size() - 1);
}

std::string label(const Design& d) {
    return std::holds_alternative<Spread>(d) ? "spread" : "star";
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_construct(Context& io, int u, int h, const std::string& poly, int conjugate, int t0, bool numeric) {
    const FieldSpec field(u, parse_poly(poly));
    const Spread spread = cyclic_spread(field, h, conjugate);
    if (t0 > 0)
        io.out << write_design(spread_to_star(spread, t0), numeric);
    else
        io.out << write_design(spread, numeric);
    return kYes;
}

int cmd_star(Context& io, const std::string& path, int t0, bool numeric) {
    const Design d = read_design_file(path, numeric);
    if (!std::holds_alternative<Spread>(d)) throw Error(path + " is not a spread file");
    io.out << write_design(spread_to_star(std::get<Spread>(d), t0), numeric);
    return kYes;
}

int cmd_check(Context& io, const std::string& path, bool numeric) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const RawDesign raw = parse_raw_design(buf.str(), numeric);

    if (raw.kind == DesignKind::spread) {
        const SpreadCheck check = validate_spread(raw.flats, raw.params[0], raw.params[1]);
        if (!check) {
            io.out << "INVALID spread: " << to_string(check.violation) << " (" << check.detail << ")\n";
            return kNo;
        }
    }
    try {
        const Design d = build_design(raw);
        std::visit(
            [&](const auto& x) {
                io.out << "VALID " << label(d) << " mu=" << x.mu();
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Spread>)
                    io.out << " u=" << x.u() << " h=" << x.h() << '\n';
                else
                    io.out << " n=" << x.n() << " t=" << x.t() << " t0=" << x.t0() << '\n';
            },
            d);
        return kYes;
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        io.out << "INVALID " << (raw.kind == DesignKind::spread ? "spread" : "star") << ": " << e.what() << '\n';
        return kNo;
    }
}

int cmd_equiv(Context& io, const std::string& p1, const std::string& p2, const std::string& repr_name, bool numeric) {
    const Repr repr = repr_name == "bitstring" ? Repr::bitstring : Repr::prime;
    const Design a = read_design_file(p1, numeric);
    const Design b = read_design_file(p2, numeric);
    if (a.index() != b.index()) throw Error("cannot compare a spread with a star");
    const Signature sa = std::visit([repr](const auto& x) { return signature(x, repr); }, a);
    const Signature sb = std::visit([repr](const auto& x) { return signature(x, repr); }, b);
    const bool same = std::visit(
        [&](const auto& x) {
            return equivalent(x, std::get<std::decay_t<decltype(x)>>(b), repr);
        },
        a);
    io.out << "Lambda(1) = " << to_string(sa) << '\n';
    io.out << "Lambda(2) = " << to_string(sb) << '\n';
    io.out << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
    return same ? kYes : kNo;
}

void print_relabelling(std::ostream& out, const RelabelIndex& idx) {
    out << "If = (";
    for (std::size_t i = 0; i < idx.target_flats.size(); ++i) out << (i ? ", " : "") << idx.target_flats[i] + 1;
    out << ")\nIC columns = (";
    for (std::size_t i = 0; i < idx.point_choice.size(); ++i) {
        out << (i ? ", " : "") << '(';
        for (std::size_t s = 0; s < idx.point_choice[i].size(); ++s) out << (s ? "," : "") << idx.point_choice[i][s] + 1;
        out << ')';
    }
    out << ")\n";
}

int cmd_iso(Context& io, const std::string& p1, const std::string& p2, const IsoOptions& options, bool numeric) {
    const Design a = read_design_file(p1, numeric);
    const Design b = read_design_file(p2, numeric);
    if (a.index() != b.index()) throw Error("cannot compare a spread with a star");

    const auto start = std::chrono::steady_clock::now();
    IsoResult result;
    bool verified = false;
    if (std::holds_alternative<Spread>(a)) {
        result = iso_spreads(std::get<Spread>(a), std::get<Spread>(b), options);
        verified = result.witness && verify_witness(*result.witness, std::get<Spread>(a), std::get<Spread>(b));
    } else {
        result = iso_stars(std::get<Star>(a), std::get<Star>(b), options);
        verified = result.witness && verify_witness(*result.witness, std::get<Star>(a), std::get<Star>(b));
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    io.out << to_string(result.verdict) << '\n';
    io.out << "relabellings tried: " << result.relabellings_tried << '\n';
    if (result.witness) {
        if (result.relabelling) print_relabelling(io.out, *result.relabelling);
        io.out << "witness (column j = image of factor j):\n" << to_grid(result.witness->matrix());
        io.out << "witness verified: " << (verified ? "yes" : "NO") << '\n';
    }
    io.out << "elapsed: " << elapsed << " s\n";
    return result.verdict == Verdict::isomorphic ? kYes : kNo;
}

int cmd_counts(Context& io, int n, int t, int t0) {
    if (t0 >= t) throw CLI::ValidationError("--t0", "t0 must be smaller than t");
    const int u = n - t0, h = t - t0;
    const BigInt e = count_equiv_class(n, t, t0);
    const BigInt cn = count_collineations(n);
    const BigInt cu = count_collineations(u);
    const BigInt d = count_search_space(u, h);
    const BigInt naive = count_naive(n, t, t0);
    io.out << "n=" << n << " t=" << t << " t0=" << t0 << "  (u=" << u << " h=" << h << " mu=" << flat_count(u, h)
           << ")\n";
    io.out << "|E|     = " << e << "  (~" << approx(e) << ")\n";
    io.out << "|C_n|   = " << cn << "  (~" << approx(cn) << ")\n";
    io.out << "|C_u|   = " << cu << '\n';
    io.out << "|D|     = " << d << '\n';
    io.out << "naive   = " << naive << "  (~" << approx(naive) << ")\n";
    return kYes;
}

int cmd_classify(Context& io, int u, int h, bool numeric) {
    const auto fact = find_fact(u, h);
    if (u > 4) {
        io.err << "classify: exhaustive enumeration is limited to u <= 4";
        if (fact) {
            io.err << "; known result for (u=" << u << ", h=" << h << "): ";
            if (fact->classes) io.err << *fact->classes << " isomorphism class(es), ";
            io.err << fact->note;
        }
        io.err << '\n';
        return kUsage;
    }
    const Classification c = classify_spreads(u, h);
    io.out << "u=" << u << " h=" << h << '\n';
    io.out << "spreads: " << c.spread_count << '\n';
    io.out << "isomorphism classes: " << c.representatives.size() << '\n';
    if (fact && fact->classes)
        io.out << "expected classes: " << *fact->classes << " (" << fact->note << ")\n";
    for (std::size_t k = 0; k < c.representatives.size(); ++k)
        io.out << "# class " << k + 1 << '\n' << write_design(c.representatives[k], numeric);
    return kYes;
}

int cmd_fixture(Context& io, const std::string& name, bool numeric) {
    const auto body = catalog::text(name);
    if (!body) throw Error("unknown fixture '" + name + "'");
    io.out << (numeric ? write_design(parse_design(*body), true) : std::string(*body));
    return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context io{out, err};
    CLI::App app{"Spreads and covering stars of PG(n-1,2): construction, equivalence and isomorphism"};
    app.require_subcommand(1);
    // -h would collide with the --h option; subcommands inherit this setting.
    app.set_help_flag("--help", "Print this help message and exit");

    bool numeric = false;
    auto add_numeric = [&](CLI::App* sub) {
        sub->add_flag("--numeric", numeric, "Points as decimal Yates indices instead of effect words");
    };

    int u = 0, h = 0, t0 = 0, conjugate = 0, n = 0, t = 0;
    std::string poly, file1, file2, repr = "prime", name;
    IsoOptions iso_options;
    bool no_prune = false;

    auto* construct = app.add_subcommand("construct", "Cyclic spread from a primitive polynomial");
    construct->add_option("--u", u, "Extension degree")->required();
    construct->add_option("--h", h, "Flat dimension (must divide u)")->required();
    construct->add_option("--poly", poly, "Primitive polynomial bitmask (decimal, 0b..., 0x...)")->required();
    construct->add_option("--conjugate", conjugate, "Use root w^(2^k)");
    construct->add_option("--t0", t0, "Lift to a covering star with a nucleus of this dimension");
    add_numeric(construct);

    auto* star = app.add_subcommand("star", "Lift a spread file to a covering star");
    star->add_option("file", file1)->required();
    star->add_option("--t0", t0, "Nucleus dimension")->required();
    add_numeric(star);

    auto* check = app.add_subcommand("check", "Validate a design file");
    check->add_option("file", file1)->required();
    add_numeric(check);

    auto* equiv = app.add_subcommand("equiv", "Equivalence via sorted flat signatures");
    equiv->add_option("file1", file1)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_option("--repr", repr, "prime or bitstring")->check(CLI::IsMember({"prime", "bitstring"}));
    add_numeric(equiv);

    auto* iso = app.add_subcommand("iso", "Isomorphism check with witness collineation");
    iso->add_option("file1", file1)->required();
    iso->add_option("file2", file2)->required();
    iso->add_flag("--deterministic", iso_options.deterministic, "Sequential canonical order; first witness");
    iso->add_option("--jobs", iso_options.jobs, "Search threads (0 = all cores)")->envname("PGISO_JOBS");
    iso->add_flag("--no-prune", no_prune, "Visit rank-deficient target choices too (exact |D| count)");
    add_numeric(iso);

    auto* counts = app.add_subcommand("counts", "Search-space sizes for St(n, mu, t, t0)");
    counts->add_option("--n", n)->required();
    counts->add_option("--t", t)->required();
    counts->add_option("--t0", t0)->required();

    auto* classify = app.add_subcommand("classify", "Enumerate and classify all spreads (u <= 4)");
    classify->add_option("--u", u)->required();
    classify->add_option("--h", h)->required();
    add_numeric(classify);

    auto* fixture = app.add_subcommand("fixture", "Print a reference design");
    fixture->add_option("name", name)->required()->description("one of: psi1 psi2 omega1 omega2 psi3 psi4");
    add_numeric(fixture);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    iso_options.prune = !no_prune;

    try {
        if (*construct) return cmd_construct(io, u, h, poly, conjugate, t0, numeric);
        if (*star) return cmd_star(io, file1, t0, numeric);
        if (*check) return cmd_check(io, file1, numeric);
        if (*equiv) return cmd_equiv(io, file1, file2, repr, numeric);
        if (*iso) return cmd_iso(io, file1, file2, iso_options, numeric);
        if (*counts) return cmd_counts(io, n, t, t0);
        if (*classify) return cmd_classify(io, u, h, numeric);
        if (*fixture) return cmd_fixture(io, name, numeric);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace pgiso::cli

#include "pgiso/design_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pgiso/error.hpp"

namespace pgiso {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    while (!(s = trim(s)).empty()) {
        const auto end = s.find_first_of(" \t");
        out.push_back(s.substr(0, end));
        if (end == std::string_view::npos) break;
        s.remove_prefix(end);
    }
    return out;
}

int to_int(std::string_view s, std::size_t line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw FormatError(line, "expected an integer, got '" + std::string(s) + "'");
    return value;
}

std::string point_text(Point p, bool numeric) { return numeric ? std::to_string(yates_index(p)) : to_label(p); }

std::string body(const std::vector<Flat>& flats, bool numeric) {
    std::string out;
    for (const Flat& f : flats) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ',';
            out += point_text(f.points()[i], numeric);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

RawDesign parse_raw_design(std::string_view text, bool numeric) {
    RawDesign raw;
    bool have_pg = false, have_kind = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!have_pg) {
            const auto w = words(line);
            if (w.size() != 2 || w[0] != "pg") throw FormatError(line_no, "expected 'pg <n>'");
            raw.n = to_int(w[1], line_no);
            if (raw.n < 1 || raw.n > kMaxFactors) throw FormatError(line_no, "n must lie in [1, 15]");
            have_pg = true;
            continue;
        }
        if (!have_kind) {
            const auto w = words(line);
            if (w.empty() || w[0] != "kind") throw FormatError(line_no, "expected 'kind spread|star ...'");
            if (w.size() >= 2 && w[1] == "spread") {
                raw.kind = DesignKind::spread;
                if (w.size() != 4) throw FormatError(line_no, "expected 'kind spread <u> <h>'");
            } else if (w.size() >= 2 && w[1] == "star") {
                raw.kind = DesignKind::star;
                if (w.size() != 5) throw FormatError(line_no, "expected 'kind star <n> <t> <t0>'");
            } else {
                throw FormatError(line_no, "unknown design kind");
            }
            for (std::size_t i = 2; i < w.size(); ++i) raw.params.push_back(to_int(w[i], line_no));
            if (raw.params[0] != raw.n) throw FormatError(line_no, "kind dimension differs from pg line");
            have_kind = true;
            continue;
        }

        std::vector<Point> flat;
        while (true) {
            const auto comma = line.find(',');
            const std::string_view item = trim(line.substr(0, comma));
            if (item.empty()) throw FormatError(line_no, "empty point");
            try {
                flat.push_back(numeric ? point_from_index(static_cast<std::size_t>(to_int(item, line_no)), raw.n)
                                       : parse_label(item, raw.n));
            } catch (const FormatError&) {
                throw;
            } catch (const Error& e) {
                throw FormatError(line_no, e.what());
            }
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        raw.flats.push_back(std::move(flat));
    }
    if (!have_pg) throw FormatError(line_no, "missing 'pg <n>' line");
    if (!have_kind) throw FormatError(line_no, "missing 'kind' line");
    if (raw.flats.empty()) throw FormatError(line_no, "design lists no flats");
    return raw;
}

Design build_design(const RawDesign& raw) {
    std::vector<Flat> flats;
    flats.reserve(raw.flats.size());
    for (std::size_t i = 0; i < raw.flats.size(); ++i) {
        try {
            flats.emplace_back(raw.flats[i]);
        } catch (const Error& e) {
            throw Error("flat " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (raw.kind == DesignKind::spread) return Spread(raw.params[0], raw.params[1], std::move(flats));
    if (raw.params[1] >= raw.n) throw Error("not a star: need t < n");
    return Star(raw.params[0], raw.params[1], raw.params[2], std::move(flats));
}

Design parse_design(std::string_view text, bool numeric) { return build_design(parse_raw_design(text, numeric)); }

Design read_design_file(const std::string& path, bool numeric) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_design(buf.str(), numeric);
}

std::string write_design(const Spread& s, bool numeric) {
    return "pg " + std::to_string(s.u()) + "\nkind spread " + std::to_string(s.u()) + " " + std::to_string(s.h()) +
           "\n" + body(s.flats(), numeric);
}

std::string write_design(const Star& s, bool numeric) {
    return "pg " + std::to_string(s.n()) + "\nkind star " + std::to_string(s.n()) + " " + std::to_string(s.t()) + " " +
           std::to_string(s.t0()) + "\n" + body(s.rays(), numeric);
}

std::string write_design(const Design& d, bool numeric) {
    return std::visit([numeric](const auto& x) { return write_design(x, numeric); }, d);
}

int dimension(const Design& d) {
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Spread>)
                return x.u();
            else
                return x.n();
        },
        d);
}

}  // namespace pgiso

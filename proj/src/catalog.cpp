#include "pgiso/catalog.hpp"

#include <array>
#include <utility>

#include "pgiso/error.hpp"

namespace pgiso::catalog {

namespace {

constexpr std::string_view kPsi1 = R"(pg 4
kind spread 4 2
D,BC,BCD
C,AB,ABC
B,ACD,ABCD
A,BD,ABD
CD,AC,AD
)";

constexpr std::string_view kPsi2 = R"(pg 4
kind spread 4 2
AB,AC,BC
AD,BCD,ABC
CD,D,C
A,BD,ABD
ABCD,B,ACD
)";

constexpr std::string_view kOmega1 = R"(pg 5
kind star 5 3 1
D,BC,BCD,E,DE,BCE,BCDE
C,AB,ABC,E,CE,ABE,ABCE
B,ACD,ABCD,E,BE,ACDE,ABCDE
A,BD,ABD,E,AE,BDE,ABDE
CD,AC,AD,E,CDE,ACE,ADE
)";

constexpr std::string_view kOmega2 = R"(pg 5
kind star 5 3 1
AB,AC,BC,E,ABE,ACE,BCE
AD,BCD,ABC,E,ADE,BCDE,ABCE
CD,D,C,E,CDE,DE,CE
A,BD,ABD,E,AE,BDE,ABDE
ABCD,B,ACD,E,ABCDE,BE,ACDE
)";

#define PSI3_COMMON \
    "F,ABCEF,ABCE\n"  \
    "E,ABDF,ABDEF\n"  \
    "D,ACF,ACDF\n"    \
    "C,BF,BCF\n"      \
    "B,AE,ABE\n"      \
    "A,DEF,ADEF\n"    \
    "EF,CDE,CDF\n"    \
    "DE,BCD,BCE\n"    \
    "CD,ABC,ABD\n"    \
    "BC,ABEF,ACEF\n"  \
    "AB,ADF,BDF\n"    \
    "DF,BE,BDEF\n"    \
    "CE,AD,ACDE\n"    \
    "AC,BDE,ABCDE\n"  \
    "BEF,ACD,ABCDEF\n" \
    "ADE,BCEF,ABCDF\n" \
    "CDEF,ABDE,ABCF\n" \
    "BCDE,ACDEF,ABF\n"

constexpr std::string_view kPsi3 =
    "pg 6\nkind spread 6 2\n" PSI3_COMMON
    "ABCD,BCDF,AF\n"
    "AEF,CF,ACE\n"
    "BD,CEF,BCDEF\n";

constexpr std::string_view kPsi4 =
    "pg 6\nkind spread 6 2\n" PSI3_COMMON
    "ACE,AF,CEF\n"
    "BCDF,CF,BD\n"
    "ABCD,AEF,BCDEF\n";

#undef PSI3_COMMON

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kFixtures = {{
    {"psi1", kPsi1},
    {"psi2", kPsi2},
    {"omega1", kOmega1},
    {"omega2", kOmega2},
    {"psi3", kPsi3},
    {"psi4", kPsi4},
}};

Spread spread_of(std::string_view text) { return std::get<Spread>(parse_design(text)); }
Star star_of(std::string_view text) { return std::get<Star>(parse_design(text)); }

}  // namespace

Spread psi1() { return spread_of(kPsi1); }
Spread psi2() { return spread_of(kPsi2); }
Star omega1() { return star_of(kOmega1); }
Star omega2() { return star_of(kOmega2); }
Spread psi3() { return spread_of(kPsi3); }
Spread psi4() { return spread_of(kPsi4); }

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [name, body] : kFixtures) out.emplace_back(name);
    return out;
}

std::optional<std::string_view> text(std::string_view name) {
    for (const auto& [key, body] : kFixtures)
        if (key == name) return body;
    return std::nullopt;
}

}  // namespace pgiso::catalog

#include "ghost/catalog.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <regex>

namespace ghost {

std::string_view to_string(LebesgueKind k) {
    switch (k) {
    case LebesgueKind::LebesgueMeasure: return "lebesgue";
    case LebesgueKind::AbsolutelyContinuous: return "absolutely-continuous";
    case LebesgueKind::SingularContinuous: return "singular-continuous";
    case LebesgueKind::PurePoint: return "pure-point";
    }
    return "?";
}

namespace {

// f(1) follows the value the named sequence actually takes at 1, except for the
// missing-digit family, which is seeded with f(1) = 1.
std::vector<CatalogEntry> fixed_entries() {
    using K = LebesgueKind;
    using C = CaseLabel;
    const auto half_n_plus_2 = [](unsigned n) -> mpz_class { return pow2(n - 1) * (n + 2); };
    return {
        {"constant", AffineParams::make(0, 0, 1, 1, 1), "f(n) = 1", C::k2A, K::LebesgueMeasure,
         "2^N", [](unsigned n) -> mpz_class { return pow2(n); }},
        {"identity", AffineParams::make(2, 2, 0, 1, 1), "f(n) = n; density (2+2x)/3", C::k2B,
         K::AbsolutelyContinuous, "(3*4^N - 2^N)/2",
         [](unsigned n) -> mpz_class { return (3 * ipow(4, n) - pow2(n)) / 2; }},
        {"gould_g", AffineParams::make(1, 1, 0, 1, 1), "number of 1s in the binary expansion",
         C::k2A, K::LebesgueMeasure, "2^(N-1)(N+2)", half_n_plus_2},
        {"gould_G", AffineParams::make(1, 2, 0, 0, 2),
         "2^(number of 1s); odd entries in row n of Pascal's triangle", C::k1B,
         K::SingularContinuous, "2*3^N", [](unsigned n) -> mpz_class { return 2 * ipow(3, n); }},
        {"ruler_r", AffineParams::make(1, 0, 1, 0, 0), "2-adic valuation of n", C::k2A,
         K::LebesgueMeasure, "2^N - 1", [](unsigned n) -> mpz_class { return pow2(n) - 1; }},
        {"ruler_R", AffineParams::make(2, 0, 0, 1, 1), "largest power of 2 dividing n", C::k2A,
         K::LebesgueMeasure, "2^(N-1)(N+2)", half_n_plus_2},
        {"cantor", AffineParams::make(3, 3, 0, 2, 1), "no digit 1 in ternary", C::k2B,
         K::AbsolutelyContinuous, "", {}},
        {"no_ap", AffineParams::make(3, 3, 0, 1, 1), "no three terms in arithmetic progression",
         C::k2B, K::AbsolutelyContinuous, "", {}},
        {"moser_de_bruijn", AffineParams::make(4, 4, 0, 1, 1), "sums of distinct powers of 4",
         C::k2B, K::AbsolutelyContinuous, "", {}},
        {"trivial_pp", AffineParams::make(1, 0, 0, 0, 1), "1 at powers of two, else 0", C::k1C,
         K::PurePoint, "1", [](unsigned) -> mpz_class { return mpz_class(1); }},
    };
}

CatalogEntry missing_digit(unsigned long d, unsigned long j) {
    if (d < 2 || j < 1 || j >= d) {
        throw LookupError("missing_digit(d,j) needs d >= 2 and 1 <= j <= d-1");
    }
    return {"missing_digit(" + std::to_string(d) + "," + std::to_string(j) + ")",
            AffineParams::make(d, d, 0, j, 1),
            "numbers with only digits 0 and " + std::to_string(j) + " in base " +
                std::to_string(d),
            CaseLabel::k2B, LebesgueKind::AbsolutelyContinuous, "", {}};
}

}  // namespace

CatalogEntry catalog_lookup(const std::string& name) {
    for (auto& e : fixed_entries()) {
        if (e.name == name) {
            return e;
        }
    }
    static const std::regex md(R"(missing_digit\((\d+),(\d+)\))");
    if (std::smatch m; std::regex_match(name, m, md)) {
        return missing_digit(std::stoul(m[1]), std::stoul(m[2]));
    }
    std::string valid;
    for (const auto& e : fixed_entries()) {
        valid += e.name + ", ";
    }
    valid += "missing_digit(d,j)";
    throw LookupError("unknown catalog entry '" + name + "'; valid names: " + valid);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : fixed_entries()) {
        names.push_back(e.name);
    }
    names.emplace_back("missing_digit(5,3)");
    return names;
}

}  // namespace ghost

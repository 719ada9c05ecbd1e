#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghost/approximant.hpp"
#include "ghost/catalog.hpp"
#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"
#include "oracles.hpp"

#include <random>

using namespace ghost;

namespace {

const AffineParams kIdentity = AffineParams::make(2, 2, 0, 1);

}  // namespace

TEST_CASE("bit strings") {
    CHECK(parse_bits("").empty());
    CHECK(parse_bits("0110") == Bits{0, 1, 1, 0});
    CHECK_THROWS_AS(parse_bits("012"), DomainError);
    CHECK(bits_to_string(parse_bits("10011")) == "10011");
    CHECK(bits_value(parse_bits("011")) == mpq_class(3, 8));
    CHECK(bits_of(0.375, 5) == Bits{0, 1, 1, 0, 0});
    CHECK(bits_of(0.0, 3) == Bits{0, 0, 0});
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        const double x = std::ldexp(static_cast<double>(rng() >> 12), -52);
        REQUIRE(bits_value(bits_of(x, 52)) == mpq_class(x));
    }
}

TEST_CASE("dyadic intervals") {
    const DyadicInterval e{parse_bits("101")};
    CHECK(e.left() == mpq_class(5, 8));
    CHECK(e.right() == mpq_class(3, 4));
    CHECK(e.length() == mpq_class(1, 8));
    CHECK(e.child(1).left() == mpq_class(11, 16));
    CHECK(DyadicInterval{}.length() == 1);
}

TEST_CASE("combs hold the region and its exact total") {
    const auto comb = build_comb(kIdentity, 2);
    CHECK(comb.weights() == std::vector<mpz_class>{4, 5, 6, 7});
    CHECK(comb.total() == 22);
    CHECK(comb.position(3) == mpq_class(3, 4));

    const auto flat = build_comb(AffineParams::make(2, 2, 0, 0), 3);
    for (const auto& w : flat.weights()) CHECK(w == 8);

    const auto delta = build_comb(catalog_lookup("trivial_pp").params, 5);
    CHECK(delta.weights()[0] == 1);
    for (std::size_t n = 1; n < delta.size(); ++n) CHECK(delta.weights()[n] == 0);

    RegionLimits small;
    small.max_level = 3;
    CHECK_THROWS_AS(build_comb(kIdentity, 4, small), ResourceError);
}

TEST_CASE("direct Fourier sum against a long-double DFT") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> coef(0, 4);
    for (int k = 0; k < 40; ++k) {
        oracle::Coeffs c{coef(rng), coef(rng), coef(rng), coef(rng), 1 + coef(rng)};
        if (c.a0 + c.a1 == 0) continue;
        const auto p = AffineParams::make(c.a0, c.a1, c.b0, c.b1, c.f1);
        const unsigned level = 9;
        const auto comb = build_comb(p, level);
        const auto w = oracle::region(c, level);
        for (std::int64_t t = -40; t <= 40; t += 3) {
            const auto ref = oracle::comb_dft(w, t);
            const auto got = direct_fourier(comb, t);
            REQUIRE(std::abs(got.real() - static_cast<double>(ref.real())) < 1e-12);
            REQUIRE(std::abs(got.imag() - static_cast<double>(ref.imag())) < 1e-12);
            // Hermitian symmetry.
            REQUIRE(std::abs(direct_fourier(comb, -t) - std::conj(got)) < 1e-14);
        }
        CHECK(direct_fourier(comb, 0) == std::complex<double>(1.0, 0.0));
    }
}

TEST_CASE("uniform comb has coefficients on 2^N Z only") {
    const auto comb = build_comb(AffineParams::make(2, 2, 0, 0), 4);
    CHECK(std::abs(direct_fourier(comb, 16) - 1.0) < 1e-15);
    CHECK(std::abs(direct_fourier(comb, 5)) < 1e-15);
}

TEST_CASE("cdf with closed right endpoint") {
    const auto comb = build_comb(kIdentity, 2);
    CHECK(cdf(comb, 0.5) == mpq_class(15, 22));
    CHECK(cdf(comb, 0.49) == mpq_class(9, 22));
    CHECK(cdf(comb, 0.0) == mpq_class(2, 11));
    CHECK(cdf(comb, 1.0) == 1);
    CHECK(cdf(comb, 0.8) == 1);
    CHECK_THROWS_AS(cdf(comb, 1.5), DomainError);
    CHECK_THROWS_AS(cdf(comb, -0.1), DomainError);
    CHECK(cdf(build_comb(catalog_lookup("trivial_pp").params, 7), 0.0) == 1);
}

TEST_CASE("cdf series") {
    const auto comb = build_comb(kIdentity, 6);
    const auto two = cdf_series(comb, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].value == mpq_class(comb.weights()[0]) / mpq_class(comb.total()));
    CHECK(two[1].value == 1);
    CHECK_THROWS_AS(cdf_series(comb, 1), DomainError);

    const auto g = cdf_series(build_comb(catalog_lookup("gould_G").params, 16), 1024);
    for (std::size_t k = 1; k < g.size(); ++k) REQUIRE(g[k].value > g[k - 1].value);
    CHECK(g.back().value == 1);

    // Uniform comb: F(x) stays within 2^-8 of x.
    const auto flat = cdf_series(build_comb(AffineParams::make(2, 2, 0, 0), 8), 256);
    for (const auto& s : flat) REQUIRE(std::abs(to_double(s.value) - s.x) <= std::ldexp(1.0, -8));

    // Identity: F(x) -> (2x + x^2)/3.
    for (const auto& s : cdf_series(build_comb(kIdentity, 16), 256)) {
        REQUIRE(std::abs(to_double(s.value) - (2 * s.x + s.x * s.x) / 3) <= 1e-4);
    }
    // Each sample equals the pointwise cdf.
    for (const auto& s : cdf_series(comb, 33)) REQUIRE(s.value == cdf(comb, s.x));
}

TEST_CASE("interval masses refine exactly") {
    std::mt19937 rng(2);
    for (const auto& name : catalog_names()) {
        const auto comb = build_comb(catalog_lookup(name).params, 10);
        CHECK(interval_mass(comb, DyadicInterval{}) == 1);
        for (int k = 0; k < 30; ++k) {
            Bits bits(rng() % 10);
            for (auto& b : bits) b = rng() % 2;
            const DyadicInterval e{bits};
            REQUIRE(interval_mass(comb, e) == interval_mass(comb, e.child(0)) + interval_mass(comb, e.child(1)));
        }
        CHECK_THROWS_AS(interval_mass(comb, DyadicInterval{Bits(11, 0)}), DomainError);
    }
}

TEST_CASE("interval masses approach their limits") {
    const auto id20 = build_comb(kIdentity, 20);
    CHECK(std::abs(to_double(interval_mass(id20, DyadicInterval{parse_bits("1")})) - 7.0 / 12) < 1e-5);
    // (3,0,0,1): mu({0}) = 1/2 and the dyadics in (0, 1/2) carry 1/6 between them.
    const auto pp = build_comb(AffineParams::make(3, 0, 0, 1), 16);
    CHECK(std::abs(to_double(interval_mass(pp, DyadicInterval{parse_bits("0")})) - 2.0 / 3) < 1e-3);
}

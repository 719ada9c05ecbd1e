#include "ghost/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ghost {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
    if (sgn(num) == 0) {
        return 0.0;
    }
    long en = 0;
    long ed = 0;
    const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
    // Both mantissas carry 53 bits; for operands that fit a double exactly
    // the division below is correctly rounded.
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
        return num.get_d() / den.get_d();
    }
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

double to_double(const mpq_class& q) {
    return ratio_to_double(q.get_num(), q.get_den());
}

double log_of(const mpz_class& z) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * std::numbers::ln2;
}

double log_of(const mpq_class& q) {
    return log_of(q.get_num()) - log_of(q.get_den());
}

unsigned two_adic_valuation(std::int64_t t) {
    auto u = static_cast<std::uint64_t>(t);
    unsigned a = 0;
    while ((u & 1U) == 0U) {
        u >>= 1U;
        ++a;
    }
    return a;
}

std::string to_string(const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace ghost

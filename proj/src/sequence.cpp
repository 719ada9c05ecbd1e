#include "ghost/sequence.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <cstdlib>
#include <string>

namespace ghost {

AffineParams AffineParams::make(mpz_class a0, mpz_class a1, mpz_class b0, mpz_class b1,
                                mpz_class f1) {
    if (sgn(a0) < 0 || sgn(a1) < 0 || sgn(b0) < 0 || sgn(b1) < 0) {
        throw DomainError("coefficients A0, A1, b0, b1 must be non-negative");
    }
    if (sgn(a0) == 0 && sgn(a1) == 0 && sgn(b0) == 0 && sgn(b1) == 0) {
        throw DomainError("coefficients A0, A1, b0, b1 must not all be zero");
    }
    if (sgn(f1) < 0) {
        throw DomainError("f(1) must be non-negative");
    }
    return AffineParams(std::move(a0), std::move(a1), std::move(b0), std::move(b1),
                        std::move(f1));
}

std::string AffineParams::to_string() const {
    return "(" + a0_.get_str() + "," + a1_.get_str() + "," + b0_.get_str() + "," +
           b1_.get_str() + ";" + f1_.get_str() + ")";
}

std::string_view to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::k1A: return "1A";
    case CaseLabel::k1B: return "1B";
    case CaseLabel::k1C: return "1C";
    case CaseLabel::k2A: return "2A";
    case CaseLabel::k2B: return "2B";
    case CaseLabel::k2C: return "2C";
    case CaseLabel::k2D: return "2D";
    }
    return "?";
}

CaseLabel case_of(const AffineParams& p) {
    const bool has_zero = sgn(p.a0()) == 0 || sgn(p.a1()) == 0;
    if (p.homogeneous()) {
        if (has_zero) {
            return CaseLabel::k1C;
        }
        return p.a0() == p.a1() ? CaseLabel::k1A : CaseLabel::k1B;
    }
    if (p.a_sum() <= 2) {
        return CaseLabel::k2A;
    }
    // From here A >= 3.
    if (p.a0() == p.a1()) {
        return CaseLabel::k2B;
    }
    return has_zero ? CaseLabel::k2D : CaseLabel::k2C;
}

RegionLimits RegionLimits::from_environment() {
    RegionLimits limits;
    if (const char* env = std::getenv("GHOST_MAX_LEVEL"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v > 40) {
            throw DomainError(std::string("GHOST_MAX_LEVEL must be an integer in [0, 40], got '") +
                              env + "'");
        }
        limits.max_level = static_cast<unsigned>(v);
    }
    return limits;
}

mpz_class eval_f(const AffineParams& p, const mpz_class& n) {
    if (sgn(n) <= 0) {
        throw DomainError("n must be >= 1");
    }
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class value = p.f1();
    for (std::size_t k = bits - 1; k-- > 0;) {
        const unsigned digit = mpz_tstbit(n.get_mpz_t(), k);
        value = p.a(digit) * value + p.b(digit);
    }
    return value;
}

mpz_class eval_f(const AffineParams& p, std::uint64_t n) {
    if (n == 0) {
        throw DomainError("n must be >= 1");
    }
    int k = 63 - __builtin_clzll(n);
    mpz_class value = p.f1();
    while (k-- > 0) {
        const unsigned digit = (n >> k) & 1U;
        value = p.a(digit) * value + p.b(digit);
    }
    return value;
}

std::vector<mpz_class> eval_region(const AffineParams& p, unsigned level,
                                   const RegionLimits& limits) {
    if (level > limits.max_level) {
        throw ResourceError("region level " + std::to_string(level) + " exceeds cap " +
                            std::to_string(limits.max_level));
    }
    std::vector<mpz_class> cur{p.f1()};
    std::vector<mpz_class> next;
    for (unsigned n = 0; n < level; ++n) {
        next.resize(cur.size() * 2);
        for (std::size_t m = 0; m < cur.size(); ++m) {
            next[2 * m] = p.a0() * cur[m] + p.b0();
            next[2 * m + 1] = p.a1() * cur[m] + p.b1();
        }
        cur.swap(next);
    }
    return cur;
}

mpz_class big_sigma(const AffineParams& p, unsigned level) {
    const mpz_class a = p.a_sum();
    const mpz_class b = p.b_sum();
    if (a == 0) {
        if (level == 0) {
            throw DomainError("Sigma(0) has no closed form when A0 + A1 = 0");
        }
        return b * pow2(level - 1);
    }
    if (a == 1) {
        return p.f1() + b * (pow2(level) - 1);
    }
    if (a == 2) {
        if (level == 0) {
            return p.f1();
        }
        return pow2(level) * p.f1() + b * level * pow2(level - 1);
    }
    const mpz_class an = ipow(a, level);
    mpz_class geometric = an - pow2(level);
    mpz_divexact(geometric.get_mpz_t(), geometric.get_mpz_t(), mpz_class(a - 2).get_mpz_t());
    return an * p.f1() + b * geometric;
}

mpq_class sigma_norm(const AffineParams& p, unsigned level) {
    const mpz_class a = p.a_sum();
    if (a == 0) {
        throw DomainError("sigma(N) requires A0 + A1 >= 1");
    }
    mpq_class q(big_sigma(p, level), ipow(a, level));
    q.canonicalize();
    return q;
}

mpq_class sigma_inf(const AffineParams& p) {
    const mpz_class a = p.a_sum();
    if (a <= 2) {
        throw DomainError("sigma(inf) requires A0 + A1 > 2 (got " + a.get_str() + ")");
    }
    mpq_class q(p.b_sum(), a - 2);
    q.canonicalize();
    return q + p.f1();
}

}  // namespace ghost

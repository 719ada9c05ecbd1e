#pragma once

// Exact evaluation of affine 2-regular sequences
//
//     f(2n)   = A0 f(n) + b0
//     f(2n+1) = A1 f(n) + b1,      n >= 1, f(1) given,
//
// and of their sums over the fundamental regions [2^N, 2^(N+1)).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghost {

/// Coefficients (A0, A1, b0, b1) and the seed value f(1).
class AffineParams {
public:
    /// Validates non-negativity and that A0, A1, b0, b1 are not all zero.
    static AffineParams make(mpz_class a0, mpz_class a1, mpz_class b0, mpz_class b1,
                             mpz_class f1 = 1);

    const mpz_class& a0() const { return a0_; }
    const mpz_class& a1() const { return a1_; }
    const mpz_class& b0() const { return b0_; }
    const mpz_class& b1() const { return b1_; }
    const mpz_class& f1() const { return f1_; }

    const mpz_class& a(unsigned digit) const { return digit == 0 ? a0_ : a1_; }
    const mpz_class& b(unsigned digit) const { return digit == 0 ? b0_ : b1_; }

    /// A = A0 + A1.
    mpz_class a_sum() const { return a0_ + a1_; }
    /// b = b0 + b1.
    mpz_class b_sum() const { return b0_ + b1_; }

    bool homogeneous() const { return sgn(b0_) == 0 && sgn(b1_) == 0; }

    /// "(A0,A1,b0,b1;f1)".
    std::string to_string() const;

    friend bool operator==(const AffineParams&, const AffineParams&) = default;

private:
    AffineParams(mpz_class a0, mpz_class a1, mpz_class b0, mpz_class b1, mpz_class f1)
        : a0_(std::move(a0)), a1_(std::move(a1)), b0_(std::move(b0)), b1_(std::move(b1)),
          f1_(std::move(f1)) {}

    mpz_class a0_, a1_, b0_, b1_, f1_;
};

/// The seven cases partitioning the parameter space.
enum class CaseLabel { k1A, k1B, k1C, k2A, k2B, k2C, k2D };

std::string_view to_string(CaseLabel c);

/// Determines which of the seven cases the parameters fall into.
CaseLabel case_of(const AffineParams& p);

/// Upper bound on the level N of a materialised fundamental region.
struct RegionLimits {
    static constexpr unsigned kDefaultMaxLevel = 26;
    unsigned max_level = kDefaultMaxLevel;

    /// Defaults, overridden by the GHOST_MAX_LEVEL environment variable when set.
    static RegionLimits from_environment();
};

/// f(n) by descending the binary digits of n from the leading 1 down to f(1).
mpz_class eval_f(const AffineParams& p, const mpz_class& n);
mpz_class eval_f(const AffineParams& p, std::uint64_t n);

/// [f(2^N), ..., f(2^(N+1)-1)], each level spawned from the previous one.
std::vector<mpz_class> eval_region(const AffineParams& p, unsigned level,
                                   const RegionLimits& limits = {});

/// Sigma(N), the sum of f over the N-th fundamental region, in closed form.
mpz_class big_sigma(const AffineParams& p, unsigned level);

/// sigma(N) = Sigma(N) / A^N. Requires A >= 1.
mpq_class sigma_norm(const AffineParams& p, unsigned level);

/// sigma(inf) = f(1) + b/(A-2). Requires A > 2.
mpq_class sigma_inf(const AffineParams& p);

}  // namespace ghost

#pragma once

// Fourier coefficients of the approximants mu_N and of the ghost measure mu.

#include "ghost/sequence.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>

namespace ghost {

/// A coefficient together with a bound on its truncation error.
struct CoeffValue {
    std::complex<double> value;
    double tail_bound = 0.0;
    /// Number of factors kept from each infinite product (0 for closed forms).
    unsigned depth = 0;
};

/// hat(mu_N)(t) from the recursion over levels:
///     sigma(0)/sigma(N) prod_{n<=N} P_n
///   + 1/sigma(N) sum_{n<=N} 2^(n-1) [2^(n-1) | t] (b0 + b1 e_n)/A^n prod_{n<j<=N} P_j
/// with e_n = exp(-2 pi i t/2^n) and P_n = (A0 + A1 e_n)/A. A = 0 uses
/// ((b0 + b1 e_N)/b) [2^(N-1) | t].
std::complex<double> coeff_recursive(const AffineParams& p, unsigned level, std::int64_t t);

/// hat(mu)(t), dispatching to the closed forms for cases 2A and 2B.
CoeffValue coeff_limit(const AffineParams& p, std::int64_t t, double tol = 1e-12);

/// hat(mu)(t) as the N -> infinity limit of coeff_recursive, products truncated
/// once the tail bound drops below tol. Needs A > 2 or b0 = b1 = 0.
CoeffValue coeff_limit_series(const AffineParams& p, std::int64_t t, double tol = 1e-12);

/// Case 2B, t = 2^a b with b odd:
///     (b0 - b1)/(2 sigma(inf) A^(a+1)) prod_{j>=1} (1 + exp(-pi i b/2^j))/2,
/// where the product equals -2i/(pi b).
CoeffValue coeff_limit_2B(const AffineParams& p, std::int64_t t);

/// prod_{n>=1} (A0 + A1 e_n)/A, the coefficient of the homogeneous comparison measure nu.
CoeffValue comparison_coefficient(const AffineParams& p, std::int64_t t, double tol = 1e-12);

/// |hat(mu)(t)|^2 = prod_{k<=depth} (A0^2 + A1^2 + 2 A0 A1 cos(2 pi t/2^k))/A^2 at real t.
double magnitude_sq_1B(const AffineParams& p, double t, unsigned depth = 64);

/// max_{s in [0,2/5]} |hat(mu)(1-s)|^2 / min_{s in [0,2/5]} |hat(mu)(s)|^2 on a uniform grid.
double kappa_1B(const AffineParams& p, std::size_t grid_size = 512);

struct WienerLimits {
    static constexpr unsigned kDefaultMaxLevel = 14;
    unsigned max_level = kDefaultMaxLevel;

    /// Defaults, overridden by GHOST_MAX_WIENER_LEVEL when set.
    static WienerLimits from_environment();
};

/// W_N = 2^-N sum_{n=1}^{2^N} |hat(mu)(n)|^2.
double wiener_average(const AffineParams& p, unsigned level, unsigned threads = 1,
                      const WienerLimits& limits = {});

/// ||g||_2^2 = 1 + (b0 - b1)^2 / (4 sigma(inf)^2 (A^2 - 1)) in case 2B.
mpq_class l2_norm_2B(const AffineParams& p);

struct SeriesEstimate {
    double partial;
    double tail_bound;
};

/// sum_{c < terms} prod_{j<=depth} cos^2(pi (c + 1/2)/2^j), which tends to 1/2.
SeriesEstimate viete_half_sum(std::size_t terms, unsigned depth = 80);

/// Upper bound on sum_{|t| > T} |hat(mu)(t)|^2 in case 2B.
double parseval_tail_bound_2B(const AffineParams& p, std::int64_t T);

/// K with |hat(mu)(t)| <= K |hat(nu)(t)| for every t, in case 2C:
///     K = 1 + (b0 + b1) / (|A0 - A1| sigma(inf)).
double domination_constant_2C(const AffineParams& p);

}  // namespace ghost

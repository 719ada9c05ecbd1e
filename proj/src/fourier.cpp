#include "ghost/fourier.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

namespace ghost {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kMaxAbsT = std::int64_t{1} << 53;

// t / 2^j reduced into (-1/2, 1/2].
double phase_fraction(std::int64_t t, unsigned j) {
    if (j < 63) {
        const std::uint64_t modulus = std::uint64_t{1} << j;
        auto r = static_cast<std::int64_t>(static_cast<std::uint64_t>(t) & (modulus - 1));
        if (r > static_cast<std::int64_t>(modulus / 2)) {
            r -= static_cast<std::int64_t>(modulus);
        }
        return std::ldexp(static_cast<double>(r), -static_cast<int>(j));
    }
    return std::ldexp(static_cast<double>(t), -static_cast<int>(j));
}

cplx unit(double fraction) {
    const double angle = -2.0 * kPi * fraction;
    return {std::cos(angle), std::sin(angle)};
}

// (A0 + A1 e^{-i theta}) / A in log-magnitude/phase form.
struct LogFactor {
    double log_mag = 0.0;
    double arg = 0.0;
    bool zero = false;
};

struct Digits {
    double a0, a1, a;
};

Digits digit_weights(const AffineParams& p) {
    return {p.a0().get_d(), p.a1().get_d(), p.a_sum().get_d()};
}

LogFactor factor(const Digits& d, double fraction) {
    if (d.a0 == d.a1 && fraction == 0.5) {
        return {0.0, 0.0, true};
    }
    const double theta = 2.0 * kPi * fraction;
    const double s = std::sin(0.5 * theta);
    LogFactor f;
    f.log_mag = 0.5 * std::log1p(-4.0 * d.a0 * d.a1 * s * s / (d.a * d.a));
    f.arg = std::atan2(-d.a1 * std::sin(theta), d.a0 + d.a1 * std::cos(theta));
    return f;
}

// suffix[k] = prod_{j=k+1}^{depth} P_j for k = 0..depth.
std::vector<cplx> suffix_products(const Digits& d, std::int64_t t, unsigned depth) {
    std::vector<cplx> out(depth + 1);
    double log_mag = 0.0;
    double arg = 0.0;
    bool zero = false;
    out[depth] = 1.0;
    for (unsigned j = depth; j >= 1; --j) {
        const LogFactor f = factor(d, phase_fraction(t, j));
        zero = zero || f.zero;
        log_mag += f.log_mag;
        arg += f.arg;
        out[j - 1] = zero ? cplx(0.0, 0.0) : std::polar(std::exp(log_mag), arg);
    }
    return out;
}

void check_t(std::int64_t t) {
    if (t > kMaxAbsT || t < -kMaxAbsT) {
        throw DomainError("|t| must not exceed 2^53");
    }
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Infinite-product evaluation shared by the series limit and the comparison
// measure. `with_sum` selects the inhomogeneous form.
CoeffValue product_series(const AffineParams& p, std::int64_t t, double tol, bool with_sum) {
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    check_t(t);
    if (t == 0) {
        return {{1.0, 0.0}, 0.0, 0};
    }
    if (sgn(p.a_sum()) == 0) {
        throw DomainError("infinite product needs A0 + A1 > 0");
    }
    const Digits d = digit_weights(p);
    const unsigned a = two_adic_valuation(t);
    const mpz_class big_a = p.a_sum();

    // Coefficients of the sum: 2^(n-1) / (A^n sigma(inf)), n = 1..a+1, and f1/sigma(inf).
    std::vector<double> coef;
    double head = 1.0;
    double multiplier = 1.0;
    if (with_sum) {
        const mpq_class s_inf = sigma_inf(p);
        head = to_double(mpq_class(p.f1()) / s_inf);
        multiplier = head;
        for (unsigned n = 1; n <= a + 1; ++n) {
            const mpq_class c = make_q(pow2(n - 1), ipow(big_a, n)) / s_inf;
            coef.push_back(to_double(c));
            multiplier += to_double(c * mpq_class(p.b_sum()));
        }
    }

    const double a_max = std::max(d.a0, d.a1);
    const double abs_t = std::abs(static_cast<double>(t));
    unsigned depth = std::max(a + 8, 8U);
    double tail = 0.0;
    for (;; ++depth) {
        const double e = a_max * kPi * abs_t / (d.a * std::ldexp(1.0, static_cast<int>(depth) - 1));
        tail = std::expm1(e) * multiplier;
        if (tail < tol) {
            break;
        }
        if (depth > 2000) {
            throw ResourceError("product depth needed for tolerance exceeds 2000");
        }
    }

    const auto suffix = suffix_products(d, t, depth);
    cplx value = head * suffix[0];
    for (unsigned n = 1; n <= coef.size(); ++n) {
        const cplx bterm = p.b0().get_d() + p.b1().get_d() * unit(phase_fraction(t, n));
        value += coef[n - 1] * bterm * suffix[n];
    }
    return {value, tail, depth};
}

}  // namespace

std::complex<double> coeff_recursive(const AffineParams& p, unsigned level, std::int64_t t) {
    if (level == 0) {
        throw DomainError("coeff_recursive needs N >= 1");
    }
    check_t(t);
    if (t == 0) {
        return {1.0, 0.0};
    }
    const unsigned a = two_adic_valuation(t);
    if (sgn(p.a_sum()) == 0) {
        if (a + 1 < level) {
            return {0.0, 0.0};
        }
        const cplx num = p.b0().get_d() + p.b1().get_d() * unit(phase_fraction(t, level));
        return num / p.b_sum().get_d();
    }
    const mpz_class total = big_sigma(p, level);
    if (sgn(total) == 0) {
        throw DomainError("Sigma(" + std::to_string(level) + ") = 0");
    }
    const Digits d = digit_weights(p);
    const mpz_class big_a = p.a_sum();
    const auto suffix = suffix_products(d, t, level);

    cplx value = ratio_to_double(p.f1() * ipow(big_a, level), total) * suffix[0];
    if (!p.homogeneous()) {
        const unsigned last = std::min(level, a + 1);
        for (unsigned n = 1; n <= last; ++n) {
            const double c = ratio_to_double(pow2(n - 1) * ipow(big_a, level - n), total);
            const cplx bterm = p.b0().get_d() + p.b1().get_d() * unit(phase_fraction(t, n));
            value += c * bterm * suffix[n];
        }
    }
    return value;
}

CoeffValue coeff_limit_series(const AffineParams& p, std::int64_t t, double tol) {
    if (p.homogeneous()) {
        if (sgn(p.f1()) == 0) {
            throw DomainError("f(1) = 0 with b0 = b1 = 0 gives the zero sequence");
        }
        return product_series(p, t, tol, false);
    }
    if (p.a_sum() <= 2) {
        throw DomainError("sigma(inf) diverges for A0 + A1 <= 2; the limit is Lebesgue measure");
    }
    return product_series(p, t, tol, true);
}

CoeffValue coeff_limit(const AffineParams& p, std::int64_t t, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    check_t(t);
    if (t == 0) {
        return {{1.0, 0.0}, 0.0, 0};
    }
    switch (case_of(p)) {
    case CaseLabel::k2A: return {{0.0, 0.0}, 0.0, 0};
    case CaseLabel::k2B: return coeff_limit_2B(p, t);
    default: return coeff_limit_series(p, t, tol);
    }
}

CoeffValue coeff_limit_2B(const AffineParams& p, std::int64_t t) {
    if (case_of(p) != CaseLabel::k2B) {
        throw DomainError("coeff_limit_2B needs case 2B, got " + std::string(to_string(case_of(p))));
    }
    if (t == 0) {
        throw DomainError("coeff_limit_2B needs t != 0");
    }
    check_t(t);
    const unsigned a = two_adic_valuation(t);
    const std::int64_t odd = t / (std::int64_t{1} << a);
    const mpq_class scale =
        mpq_class(p.b0() - p.b1()) / (sigma_inf(p) * mpq_class(ipow(p.a0(), a + 1)));
    // prod_{j>=1} (1 + e^{-pi i b/2^j})/2 = e^{-pi i b/2} sin(pi b/2)/(pi b/2) = -2i/(pi b)
    const double im = -to_double(scale) / (kPi * static_cast<double>(odd));
    return {{0.0, im}, 0.0, 0};
}

CoeffValue comparison_coefficient(const AffineParams& p, std::int64_t t, double tol) {
    return product_series(p, t, tol, false);
}

double magnitude_sq_1B(const AffineParams& p, double t, unsigned depth) {
    if (sgn(p.a0()) == 0 || sgn(p.a1()) == 0) {
        throw DomainError("magnitude_sq_1B needs A0 > 0 and A1 > 0");
    }
    const Digits d = digit_weights(p);
    double log_sum = 0.0;
    for (unsigned k = 1; k <= depth; ++k) {
        const double s = std::sin(kPi * std::ldexp(t, -static_cast<int>(k)));
        log_sum += std::log1p(-4.0 * d.a0 * d.a1 * s * s / (d.a * d.a));
    }
    return std::exp(log_sum);
}

double kappa_1B(const AffineParams& p, std::size_t grid_size) {
    if (sgn(p.a0()) == 0 || sgn(p.a1()) == 0 || p.a0() == p.a1()) {
        throw DomainError("kappa needs A0 != A1, both > 0 (case 1B), got " + p.to_string());
    }
    if (grid_size < 2) {
        throw DomainError("kappa grid needs at least 2 points");
    }
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid_size; ++k) {
        const double s = 0.4 * static_cast<double>(k) / static_cast<double>(grid_size - 1);
        hi = std::max(hi, magnitude_sq_1B(p, 1.0 - s));
        lo = std::min(lo, magnitude_sq_1B(p, s));
    }
    return hi / lo;
}

WienerLimits WienerLimits::from_environment() {
    WienerLimits limits;
    if (const char* env = std::getenv("GHOST_MAX_WIENER_LEVEL"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v > 30) {
            throw DomainError(std::string("GHOST_MAX_WIENER_LEVEL must be an integer in [0, 30], got '") +
                              env + "'");
        }
        limits.max_level = static_cast<unsigned>(v);
    }
    return limits;
}

double wiener_average(const AffineParams& p, unsigned level, unsigned threads,
                      const WienerLimits& limits) {
    if (level > limits.max_level) {
        throw ResourceError("Wiener level " + std::to_string(level) + " exceeds cap " +
                            std::to_string(limits.max_level));
    }
    const std::size_t count = std::size_t{1} << level;
    std::vector<double> sq(count);
    const auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            sq[k] = std::norm(coeff_limit(p, static_cast<std::int64_t>(k + 1), 1e-13).value);
        }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        fill(0, count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t begin = std::min(count, w * chunk);
            const std::size_t end = std::min(count, begin + chunk);
            pool.emplace_back(fill, begin, end);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    // Summed in index order so the result does not depend on the thread count.
    double sum = 0.0;
    for (double v : sq) {
        sum += v;
    }
    return sum / static_cast<double>(count);
}

mpq_class l2_norm_2B(const AffineParams& p) {
    if (case_of(p) != CaseLabel::k2B) {
        throw DomainError("l2_norm_2B needs case 2B, got " + std::string(to_string(case_of(p))));
    }
    const mpq_class s = sigma_inf(p);
    const mpz_class diff = p.b0() - p.b1();
    const mpz_class a = p.a0();
    return 1 + mpq_class(diff * diff) / (4 * s * s * mpq_class(a * a - 1));
}

SeriesEstimate viete_half_sum(std::size_t terms, unsigned depth) {
    double sum = 0.0;
    for (std::size_t c = 0; c < terms; ++c) {
        const double x = kPi * (static_cast<double>(c) + 0.5);
        double prod = 1.0;
        for (unsigned j = 1; j <= depth; ++j) {
            const double v = std::cos(std::ldexp(x, -static_cast<int>(j)));
            prod *= v * v;
        }
        sum += prod;
    }
    const double n = static_cast<double>(terms);
    const double missing = terms == 0 ? 0.5 : 1.0 / (kPi * kPi * n);
    const double truncation = kPi * kPi * n * n * n / (9.0 * std::ldexp(1.0, 2 * static_cast<int>(depth)));
    return {sum, missing + truncation};
}

double parseval_tail_bound_2B(const AffineParams& p, std::int64_t T) {
    if (case_of(p) != CaseLabel::k2B) {
        throw DomainError("parseval_tail_bound_2B needs case 2B");
    }
    if (T < 0) {
        throw DomainError("T must be non-negative");
    }
    const double s = to_double(sigma_inf(p));
    const double diff = mpz_class(p.b0() - p.b1()).get_d();
    const double c = diff * diff / (4.0 * s * s);
    const double a = p.a0().get_d();
    const double a2 = a * a;
    double total = 0.0;
    double weight = 1.0 / a2;  // A^(-2a-2)
    unsigned k = 0;
    for (; std::ldexp(1.0, static_cast<int>(k)) <= static_cast<double>(T); ++k) {
        auto m = static_cast<double>((T >> k) + 1);
        if (std::fmod(m, 2.0) == 0.0) {
            m += 1.0;
        }
        total += weight * (1.0 / (m * m) + 1.0 / (2.0 * m));
        weight /= a2;
    }
    total += weight * (kPi * kPi / 8.0) / (1.0 - 1.0 / a2);
    return 2.0 * c * (4.0 / (kPi * kPi)) * total;
}

double domination_constant_2C(const AffineParams& p) {
    if (case_of(p) != CaseLabel::k2C) {
        throw DomainError("domination constant needs case 2C");
    }
    const mpz_class gap = abs(p.a0() - p.a1());
    return 1.0 + to_double(mpq_class(p.b_sum()) / (mpq_class(gap) * sigma_inf(p)));
}

}  // namespace ghost

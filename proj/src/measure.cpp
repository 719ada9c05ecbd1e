#include "ghost/measure.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ghost {

LebesgueClass classify(const AffineParams& p) {
    const CaseLabel c = case_of(p);
    switch (c) {
    case CaseLabel::k1A:
    case CaseLabel::k2A: return {LebesgueKind::LebesgueMeasure, c, std::nullopt};
    case CaseLabel::k2B: return {LebesgueKind::AbsolutelyContinuous, c, std::nullopt};
    case CaseLabel::k1B:
    case CaseLabel::k2C: return {LebesgueKind::SingularContinuous, c, std::nullopt};
    case CaseLabel::k1C: return {LebesgueKind::PurePoint, c, "delta-at-0"};
    case CaseLabel::k2D: return {LebesgueKind::PurePoint, c, "dyadic-rationals"};
    }
    throw std::logic_error("unreachable case label");
}

namespace {

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpz_class prefix_value(const Bits& bits) {
    mpz_class v = 1;  // the leading 1 of (1 x_1 ... x_i)_2
    for (auto b : bits) {
        v = 2 * v + b;
    }
    return v;
}

void require_nonvanishing(const AffineParams& p) {
    if (p.homogeneous() && sgn(p.f1()) == 0) {
        throw DomainError("f(1) = 0 with b0 = b1 = 0 gives the zero sequence");
    }
}

void require_positive_digits(const AffineParams& p, const char* what) {
    if (sgn(p.a0()) == 0 || sgn(p.a1()) == 0) {
        throw DomainError(std::string(what) + " needs A0 > 0 and A1 > 0 (got " + p.to_string() +
                          ")");
    }
    if (p.a_sum() < 3) {
        throw DomainError(std::string(what) + " needs A0 + A1 >= 3 (got " + p.to_string() + ")");
    }
}

}  // namespace

mpq_class interval_measure(const AffineParams& p, const DyadicInterval& e) {
    const CaseLabel c = case_of(p);
    const auto depth = static_cast<unsigned long>(e.depth());
    switch (c) {
    case CaseLabel::k2A: return e.length();
    case CaseLabel::k1A:
    case CaseLabel::k1B: {
        require_nonvanishing(p);
        mpz_class prod = 1;
        for (auto b : e.bits) {
            prod *= p.a(b);
        }
        return make_q(prod, ipow(p.a_sum(), depth));
    }
    case CaseLabel::k2B:
    case CaseLabel::k2C: {
        const mpz_class a = p.a_sum();
        const mpz_class f = eval_f(p, prefix_value(e.bits));
        // (f + b/(A-2)) / (A^i sigma(inf)) with sigma(inf) = (f1 (A-2) + b)/(A-2)
        return make_q(f * (a - 2) + p.b_sum(), ipow(a, depth) * (p.f1() * (a - 2) + p.b_sum()));
    }
    case CaseLabel::k1C:
    case CaseLabel::k2D: require_positive_digits(p, "interval_measure"); break;
    }
    throw std::logic_error("unreachable case label");
}

mpq_class interval_remainder(const AffineParams& p, const DyadicInterval& e, unsigned c) {
    const CaseLabel label = case_of(p);
    if (label != CaseLabel::k2B && label != CaseLabel::k2C) {
        require_positive_digits(p, "interval_remainder");
        throw DomainError("interval_remainder needs case 2B or 2C");
    }
    const mpz_class a = p.a_sum();
    const auto i = static_cast<unsigned>(e.depth());
    const mpq_class mu = interval_measure(p, e);
    const mpq_class two_over_a_pow_c = make_q(pow2(c), ipow(a, c));
    const mpq_class one_minus = 1 - mu * mpq_class(pow2(i));
    return make_q(p.b_sum(), a - 2) * two_over_a_pow_c * one_minus /
           (sigma_norm(p, i + c) * mpq_class(ipow(a, i)));
}

namespace {

struct DensityCase {
    mpz_class a;            // common value A0 = A1
    mpq_class denominator;  // f(1) + (b0 + b1)/(2A - 2)
};

DensityCase density_case(const AffineParams& p) {
    if (case_of(p) != CaseLabel::k2B) {
        throw DomainError("density needs case 2B (A0 = A1 > 1, b0 + b1 > 0), got " +
                          std::string(to_string(case_of(p))));
    }
    const mpz_class a = p.a0();
    return {a, mpq_class(p.f1()) + make_q(p.b_sum(), 2 * a - 2)};
}

}  // namespace

DensityValue density(const AffineParams& p, const Bits& digits_of_x) {
    const DensityCase dc = density_case(p);
    // sum_j b_{x_j} A^(d-j), then divide by A^d once.
    mpz_class weighted = 0;
    for (auto b : digits_of_x) {
        weighted = weighted * dc.a + p.b(b);
    }
    const auto d = static_cast<unsigned long>(digits_of_x.size());
    const mpz_class ad = ipow(dc.a, d);
    const mpq_class numerator = mpq_class(p.f1()) + make_q(weighted, ad);
    const mpq_class value = numerator / dc.denominator;
    const mpq_class tail = make_q(std::max(p.b0(), p.b1()), (dc.a - 1) * ad) / dc.denominator;
    return {to_double(value), to_double(tail), value};
}

DensityValue density_at(const AffineParams& p, double x, unsigned depth) {
    return density(p, bits_of(x, depth));
}

std::vector<double> density_grid(const AffineParams& p, unsigned depth,
                                 const RegionLimits& limits) {
    const DensityCase dc = density_case(p);
    if (depth > limits.max_level) {
        throw ResourceError("density grid depth " + std::to_string(depth) + " exceeds cap " +
                            std::to_string(limits.max_level));
    }
    // Same spawning pattern as a fundamental region: each level multiplies by A
    // and appends b_0 or b_1.
    std::vector<mpz_class> cur{mpz_class(0)};
    std::vector<mpz_class> next;
    for (unsigned level = 0; level < depth; ++level) {
        next.resize(cur.size() * 2);
        for (std::size_t m = 0; m < cur.size(); ++m) {
            next[2 * m] = cur[m] * dc.a + p.b0();
            next[2 * m + 1] = cur[m] * dc.a + p.b1();
        }
        cur.swap(next);
    }
    const mpz_class ad = ipow(dc.a, depth);
    // value = (f1 A^d + S) / (A^d * den), den = num_den / den_den
    const mpz_class scale_num = ad * dc.denominator.get_num();
    std::vector<double> out;
    out.reserve(cur.size());
    for (const auto& s : cur) {
        out.push_back(ratio_to_double((p.f1() * ad + s) * dc.denominator.get_den(), scale_num));
    }
    return out;
}

ConcentrationThreshold lambda_threshold(const AffineParams& p) {
    if (sgn(p.a0()) == 0 || sgn(p.a1()) == 0) {
        throw DomainError("lambda threshold needs A0 > 0 and A1 > 0");
    }
    if (p.a0() == p.a1()) {
        throw DomainError("lambda threshold needs A0 != A1");
    }
    const double a0 = p.a0().get_d();
    const double a1 = p.a1().get_d();
    const double hi = std::max(a0, a1);
    const double lo = std::min(a0, a1);
    const double cap = std::log(2.0 * hi / (a0 + a1)) / std::log(hi / lo);
    return {cap, p.a0() < p.a1() ? 0U : 1U};
}

std::vector<RatioPoint> ratio_sequence(const AffineParams& p, const Bits& digits_of_x) {
    const CaseLabel c = case_of(p);
    std::vector<RatioPoint> out;
    out.reserve(digits_of_x.size());
    if (c == CaseLabel::k2A) {
        for (unsigned j = 1; j <= digits_of_x.size(); ++j) {
            out.push_back({j, 0.0, 1.0});
        }
        return out;
    }
    if (c != CaseLabel::k1A && c != CaseLabel::k1B && c != CaseLabel::k2B &&
        c != CaseLabel::k2C) {
        require_positive_digits(p, "ratio_sequence");
    }
    require_nonvanishing(p);
    const mpz_class a = p.a_sum();
    const double log_a = log_of(a);
    // Constant part: -log(normaliser) where the measure is
    //   homogeneous:   F_j / (f1 A^j)
    //   inhomogeneous: (F_j (A-2) + b) / (A^j (f1 (A-2) + b))
    const bool homog = p.homogeneous();
    const double log_norm = homog ? log_of(p.f1()) : log_of(mpz_class(p.f1() * (a - 2) + p.b_sum()));
    mpz_class f = p.f1();
    unsigned j = 0;
    for (auto bit : digits_of_x) {
        ++j;
        f = p.a(bit) * f + p.b(bit);
        const mpz_class numerator = homog ? f : mpz_class(f * (a - 2) + p.b_sum());
        const double lr = sgn(numerator) == 0
                              ? -std::numeric_limits<double>::infinity()
                              : log_of(numerator) - log_norm +
                                    static_cast<double>(j) * (std::numbers::ln2 - log_a);
        out.push_back({j, lr, std::exp(lr)});
    }
    return out;
}

namespace {

// Case 2D normalised so that the vanishing coefficient belongs to the digit 1:
// A is the non-zero A_i, b_keep the b of the same digit, b_reset the other.
struct PurePointForm {
    mpz_class a;
    mpz_class b_keep;
    mpz_class b_reset;
    bool mirrored;
    mpq_class sigma_inf;
};

PurePointForm pure_point_form(const AffineParams& p) {
    if (case_of(p) != CaseLabel::k2D) {
        throw DomainError("point masses need case 2D (one A_i = 0, the other >= 3, b0 + b1 > 0), got " +
                          std::string(to_string(case_of(p))));
    }
    const bool mirrored = sgn(p.a0()) == 0;
    if (!mirrored) {
        return {p.a0(), p.b0(), p.b1(), false, sigma_inf(p)};
    }
    return {p.a1(), p.b1(), p.b0(), true, sigma_inf(p)};
}

// Mass of x = 0 and of each dyadic whose last 1-bit is at position n >= 1.
mpq_class mass_of_zero(const PurePointForm& f, const mpz_class& f1) {
    return (mpq_class(f1) + make_q(f.b_keep, f.a - 1)) / f.sigma_inf;
}

mpq_class mass_at_position(const PurePointForm& f, unsigned long n) {
    return (mpq_class(f.b_reset) + make_q(f.b_keep, f.a - 1)) /
           (mpq_class(ipow(f.a, n)) * f.sigma_inf);
}

// In the mirrored case the atoms of mu_N approach each dyadic y from the left,
// sitting at y - 2^-N. Compare the claimed mass with that comb weight.
void validate_mirrored(const AffineParams& p, const PurePointForm& f, const Bits& expansion,
                       unsigned n, const mpq_class& mass) {
    const double a = f.a.get_d();
    const double gap = p.b_sum().get_d() / ((a - 2.0) * to_double(f.sigma_inf));
    unsigned level = std::max(16U, n + 16U);
    while (std::pow(2.0 / a, level) * gap > 2.5e-4 && level < 4096) {
        ++level;
    }
    // index of y - 2^-level among the 2^level atoms, modulo 1
    mpz_class index = 0;
    for (unsigned k = 0; k < n; ++k) {
        index = 2 * index + expansion[k];
    }
    index = index * pow2(level - n) - 1;
    if (sgn(index) < 0) {
        index += pow2(level);
    }
    const mpq_class weight = make_q(eval_f(p, pow2(level) + index), big_sigma(p, level));
    const double m = to_double(mass);
    const double w = to_double(weight);
    const double err = m > 0.0 ? std::abs(w - m) / m : std::abs(w);
    if (err > 1e-3) {
        throw std::logic_error("mirrored point mass disagrees with the level-" +
                               std::to_string(level) + " approximant");
    }
}

}  // namespace

mpq_class point_mass(const AffineParams& p, const Bits& expansion) {
    const PurePointForm form = pure_point_form(p);
    unsigned n = 0;
    for (unsigned k = 0; k < expansion.size(); ++k) {
        if (expansion[k] == 1) {
            n = k + 1;
        }
    }
    const mpq_class mass = n == 0 ? mass_of_zero(form, p.f1()) : mass_at_position(form, n);
    if (form.mirrored) {
        validate_mirrored(p, form, expansion, n, mass);
    }
    return mass;
}

PointMassTotal point_mass_total(const AffineParams& p, unsigned n_max) {
    const PurePointForm form = pure_point_form(p);
    PointMassTotal out;
    out.partial = mass_of_zero(form, p.f1());
    for (unsigned n = 1; n <= n_max; ++n) {
        out.partial += mpq_class(pow2(n - 1)) * mass_at_position(form, n);
    }
    // sum_{n > n_max} 2^(n-1) m_n with m_n = c / A^n
    const mpq_class c = (mpq_class(form.b_reset) + make_q(form.b_keep, form.a - 1)) / form.sigma_inf;
    out.tail = c * make_q(pow2(n_max), ipow(form.a, n_max)) / mpq_class(form.a - 2);
    out.closed_total = mass_of_zero(form, p.f1()) + c / mpq_class(form.a - 2);
    return out;
}

}  // namespace ghost

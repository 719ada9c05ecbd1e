#include "ghost/approximant.hpp"

#include "ghost/errors.hpp"
#include "ghost/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghost {

Bits parse_bits(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw DomainError("bit string may only contain 0 and 1, got '" + std::string(s) + "'");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string bits_to_string(const Bits& bits) {
    std::string s;
    for (auto b : bits) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

Bits bits_of(double x, unsigned depth) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("point must lie in [0, 1)");
    }
    Bits out;
    out.reserve(depth);
    for (unsigned k = 0; k < depth; ++k) {
        x *= 2.0;  // exact in binary floating point
        if (x >= 1.0) {
            out.push_back(1);
            x -= 1.0;
        } else {
            out.push_back(0);
        }
    }
    return out;
}

mpq_class bits_value(const Bits& bits) {
    mpz_class num = 0;
    for (auto b : bits) {
        num = 2 * num + b;
    }
    mpq_class q(num, pow2(bits.size()));
    q.canonicalize();
    return q;
}

mpq_class DyadicInterval::left() const { return bits_value(bits); }
mpq_class DyadicInterval::right() const { return left() + length(); }

mpq_class DyadicInterval::length() const {
    mpq_class q(1, pow2(bits.size()));
    q.canonicalize();
    return q;
}

DyadicInterval DyadicInterval::child(std::uint8_t bit) const {
    DyadicInterval c{bits};
    c.bits.push_back(bit);
    return c;
}

Approximant::Approximant(unsigned level, std::vector<mpz_class> weights, mpz_class total)
    : level_(level), weights_(std::move(weights)), total_(std::move(total)) {
    if (weights_.size() != (std::size_t{1} << level_)) {
        throw std::invalid_argument("approximant needs 2^N weights");
    }
    if (sgn(total_) <= 0) {
        throw DomainError("Sigma(" + std::to_string(level_) +
                          ") = 0: the sequence vanishes on this fundamental region");
    }
    probabilities_.reserve(weights_.size());
    for (const auto& w : weights_) {
        if (sgn(w) < 0) {
            throw std::invalid_argument("approximant weights must be non-negative");
        }
        probabilities_.push_back(ratio_to_double(w, total_));
    }
}

mpq_class Approximant::position(std::size_t n) const {
    mpq_class q(static_cast<unsigned long>(n), pow2(level_));
    q.canonicalize();
    return q;
}

Approximant build_comb(const AffineParams& p, unsigned level, const RegionLimits& limits) {
    auto weights = eval_region(p, level, limits);
    mpz_class total = big_sigma(p, level);
    mpz_class direct = 0;
    for (const auto& w : weights) {
        direct += w;
    }
    if (direct != total) {
        throw std::logic_error("closed-form Sigma(N) disagrees with the region sum");
    }
    return Approximant(level, std::move(weights), std::move(total));
}

std::complex<double> direct_fourier(const Approximant& comb, std::int64_t t) {
    if (t == 0) {
        return {1.0, 0.0};
    }
    const std::uint64_t modulus = std::uint64_t{1} << comb.level();
    const std::uint64_t mask = modulus - 1;
    const auto t_mod = static_cast<std::uint64_t>(t) & mask;  // two's complement == t mod 2^N
    const auto& prob = comb.probabilities();
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(modulus);

    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
    const auto kahan = [](double& sum, double& comp, double term) {
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };
    for (std::size_t n = 0; n < prob.size(); ++n) {
        if (prob[n] == 0.0) {
            continue;
        }
        // Reduce the phase exactly before converting to an angle.
        auto r = static_cast<std::int64_t>((t_mod * n) & mask);
        if (r > static_cast<std::int64_t>(modulus / 2)) {
            r -= static_cast<std::int64_t>(modulus);
        }
        const double angle = -scale * static_cast<double>(r);
        kahan(re, re_c, prob[n] * std::cos(angle));
        kahan(im, im_c, prob[n] * std::sin(angle));
    }
    return {re, im};
}

namespace {

// Number of atoms with position n / 2^N <= x.
std::size_t atoms_up_to(const Approximant& comb, double x) {
    const double scaled = std::ldexp(x, static_cast<int>(comb.level()));
    const auto k = static_cast<std::size_t>(std::floor(scaled)) + 1;
    return std::min(k, comb.size());
}

}  // namespace

mpq_class cdf(const Approximant& comb, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("cdf argument must lie in [0, 1]");
    }
    const std::size_t k = atoms_up_to(comb, x);
    mpz_class s = 0;
    for (std::size_t n = 0; n < k; ++n) {
        s += comb.weights()[n];
    }
    mpq_class q(s, comb.total());
    q.canonicalize();
    return q;
}

std::vector<CdfSample> cdf_series(const Approximant& comb, std::size_t grid_size) {
    if (grid_size < 2) {
        throw DomainError("cdf grid needs at least 2 points");
    }
    std::vector<CdfSample> out;
    out.reserve(grid_size);
    mpz_class running = 0;
    std::size_t consumed = 0;
    for (std::size_t k = 0; k < grid_size; ++k) {
        const double x = k + 1 == grid_size ? 1.0
                                            : static_cast<double>(k) /
                                                  static_cast<double>(grid_size - 1);
        const std::size_t upto = atoms_up_to(comb, x);
        for (; consumed < upto; ++consumed) {
            running += comb.weights()[consumed];
        }
        mpq_class q(running, comb.total());
        q.canonicalize();
        out.push_back({x, std::move(q)});
    }
    return out;
}

mpq_class interval_mass(const Approximant& comb, const DyadicInterval& e) {
    if (e.depth() > comb.level()) {
        throw DomainError("interval depth " + std::to_string(e.depth()) +
                          " exceeds approximant level " + std::to_string(comb.level()));
    }
    const unsigned shift = comb.level() - static_cast<unsigned>(e.depth());
    std::size_t prefix = 0;
    for (auto b : e.bits) {
        prefix = 2 * prefix + b;
    }
    const std::size_t first = prefix << shift;
    const std::size_t last = (prefix + 1) << shift;
    mpz_class s = 0;
    for (std::size_t n = first; n < last; ++n) {
        s += comb.weights()[n];
    }
    mpq_class q(s, comb.total());
    q.canonicalize();
    return q;
}

}  // namespace ghost

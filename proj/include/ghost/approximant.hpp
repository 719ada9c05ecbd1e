#pragma once

// The N-th approximant mu_N: atoms at n/2^N with weights f(2^N + n), normalised
// by Sigma(N). Weights are exact; normalisation happens at the last step.

#include "ghost/sequence.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghost {

/// A finite binary word x_1 ... x_i.
using Bits = std::vector<std::uint8_t>;

/// Parses a word over {0,1}; the empty string is the empty word.
Bits parse_bits(std::string_view s);
std::string bits_to_string(const Bits& bits);

/// First `depth` binary digits of x in [0,1), choosing the terminating
/// expansion for dyadic rationals.
Bits bits_of(double x, unsigned depth);

/// The value 0.x_1...x_i as an exact rational.
mpq_class bits_value(const Bits& bits);

/// E_i(x) = [0.x_1..x_i000..., 0.x_1..x_i111...), of length 2^-i.
struct DyadicInterval {
    Bits bits;

    std::size_t depth() const { return bits.size(); }
    mpq_class left() const;
    mpq_class right() const;
    mpq_class length() const;
    DyadicInterval child(std::uint8_t bit) const;
};

class Approximant {
public:
    Approximant(unsigned level, std::vector<mpz_class> weights, mpz_class total);

    unsigned level() const { return level_; }
    std::size_t size() const { return weights_.size(); }
    const std::vector<mpz_class>& weights() const { return weights_; }
    const mpz_class& total() const { return total_; }
    /// weights[n] / total, rounded once.
    const std::vector<double>& probabilities() const { return probabilities_; }

    /// Position n / 2^N of atom n.
    mpq_class position(std::size_t n) const;

private:
    unsigned level_;
    std::vector<mpz_class> weights_;
    mpz_class total_;
    std::vector<double> probabilities_;
};

Approximant build_comb(const AffineParams& p, unsigned level, const RegionLimits& limits = {});

/// (1/Sigma(N)) sum_n f(2^N+n) exp(-2 pi i t n / 2^N), compensated summation.
std::complex<double> direct_fourier(const Approximant& comb, std::int64_t t);

/// F_N(x) = mu_N([0, x]); the atom at x counts.
mpq_class cdf(const Approximant& comb, double x);

struct CdfSample {
    double x;
    mpq_class value;
};

/// F_N at grid_size equally spaced points of [0, 1], endpoints included.
std::vector<CdfSample> cdf_series(const Approximant& comb, std::size_t grid_size);

/// mu_N(E) for a dyadic interval with depth <= N.
mpq_class interval_mass(const Approximant& comb, const DyadicInterval& e);

}  // namespace ghost

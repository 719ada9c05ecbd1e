#pragma once

// Exact properties of the ghost measure mu = lim mu_N.

#include "ghost/approximant.hpp"
#include "ghost/catalog.hpp"
#include "ghost/sequence.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ghost {

struct LebesgueClass {
    LebesgueKind kind;
    CaseLabel label;
    /// Support of the pure point measure: "delta-at-0" (1C) or "dyadic-rationals" (2D).
    std::optional<std::string> detail;
};

/// The Lebesgue type of mu, a function of the case alone.
LebesgueClass classify(const AffineParams& p);

/// mu(E_i(x)).
///
/// Cases 2B and 2C use
///     mu(E_i) = (f((1 x_1..x_i)_2) + b/(A-2)) / (A^i sigma(inf)),
/// case 2A gives Lebesgue measure 2^-i, and the homogeneous cases 1A/1B give the
/// convolution-product value prod_j A_{x_j} / A^i. Cases 1C and 2D are rejected.
mpq_class interval_measure(const AffineParams& p, const DyadicInterval& e);

/// mu(E_i) - mu_{i+c}(E_i) for cases 2B/2C:
///     (b/(A-2)) (2/A)^c (1 - 2^i mu(E_i)) / (sigma(i+c) A^i).
mpq_class interval_remainder(const AffineParams& p, const DyadicInterval& e, unsigned c);

struct DensityValue {
    double value;
    /// Bound on |g(x) - value| from truncating the digit series.
    double tail_bound;
    /// The truncated series as an exact rational.
    mpq_class truncated;
};

/// Radon-Nikodym derivative in case 2B, truncated after the given digits of x.
DensityValue density(const AffineParams& p, const Bits& digits_of_x);
DensityValue density_at(const AffineParams& p, double x, unsigned depth);

/// Truncated density at the left endpoints k/2^depth, k = 0..2^depth-1.
std::vector<double> density_grid(const AffineParams& p, unsigned depth,
                                 const RegionLimits& limits = {});

struct ConcentrationThreshold {
    double lambda_cap;
    /// Digit whose density above lambda_cap forces mu(E_i)/lambda(E_i) -> 0.
    unsigned minority_digit;
};

/// Lambda = log(2 A_max / (A0 + A1)) / log(A_max / A_min). Requires A0 != A1, both > 0.
ConcentrationThreshold lambda_threshold(const AffineParams& p);

struct RatioPoint {
    unsigned depth;
    double log_ratio;
    double ratio;
};

/// mu(E_j(x)) / lambda(E_j(x)) for j = 1..i, evaluated through logarithms.
std::vector<RatioPoint> ratio_sequence(const AffineParams& p, const Bits& digits_of_x);

/// mu({x}) for a dyadic x = 0.x_1...x_n in case 2D.
mpq_class point_mass(const AffineParams& p, const Bits& expansion);

struct PointMassTotal {
    /// mu({0}) plus the mass of every dyadic whose last 1-bit sits at position <= n_max.
    mpq_class partial;
    /// Mass of the remaining dyadics (geometric tail).
    mpq_class tail;
    /// mu({0}) plus the full geometric series; equals 1.
    mpq_class closed_total;
};

PointMassTotal point_mass_total(const AffineParams& p, unsigned n_max);

}  // namespace ghost

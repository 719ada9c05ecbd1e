#pragma once

#include "ghost/sequence.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace ghost {

/// Base-k digits of n, most significant first. Requires k >= 2.
std::vector<unsigned> digits(const mpz_class& n, unsigned base);

/// Square matrix of dimension 1 or 2 with big-integer entries, row-major.
struct SmallMatrix {
    unsigned dim = 1;
    std::array<mpz_class, 4> e{};

    const mpz_class& at(unsigned r, unsigned c) const { return e[r * dim + c]; }
    mpz_class& at(unsigned r, unsigned c) { return e[r * dim + c]; }

    friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
};

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y);

/// Linear representation (C0, C1, L, M) of an affine sequence.
///
/// Homogeneous sequences use d = 1 with C_i = [A_i], L = 1, M = f(1).
/// Otherwise d = 2 with C_i = [[A_i, b_i], [0, 1]], L = (1, 0), M = (f(1), 1).
/// For n = (1 x_1 ... x_k)_2 the value is L^T C_{x_k} ... C_{x_1} M: the leading
/// 1 is absorbed into M and the digit read last sits leftmost in the product.
struct LinearRepresentation {
    unsigned dim = 1;
    SmallMatrix c0;
    SmallMatrix c1;
    std::array<mpz_class, 2> left{};
    std::array<mpz_class, 2> right{};

    const SmallMatrix& c(unsigned digit) const { return digit == 0 ? c0 : c1; }
};

LinearRepresentation build_linrep(const AffineParams& p);

mpz_class eval_via_linrep(const LinearRepresentation& rep, const mpz_class& n);

/// Where log2(rho/rho*) falls relative to {0} and {1}.
enum class RatioBand { Zero, Between, One };

/// Spectral radius of C0 + C1, joint spectral radius of {C0, C1} and log2 of their ratio.
struct SpectralDiagnostic {
    mpz_class rho;
    mpz_class rho_star;
    double log_ratio = 0.0;
    RatioBand band = RatioBand::Zero;
};

/// Closed forms: the C_i are upper triangular, so both radii come from the diagonals.
SpectralDiagnostic spectral_diagnostic(const AffineParams& p);

}  // namespace ghost

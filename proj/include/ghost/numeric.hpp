#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ghost {

/// Exact 2^e.
mpz_class pow2(unsigned long e);

/// Exact base^e.
mpz_class ipow(const mpz_class& base, unsigned long e);

/// num/den rounded to double without overflowing on huge operands.
double ratio_to_double(const mpz_class& num, const mpz_class& den);

double to_double(const mpq_class& q);

/// Natural logarithm of a positive big integer.
double log_of(const mpz_class& z);

/// Natural logarithm of a positive rational.
double log_of(const mpq_class& q);

/// 2-adic valuation of a non-zero integer.
unsigned two_adic_valuation(std::int64_t t);

/// Renders a rational as "p/q" (or "p" when the denominator is 1).
std::string to_string(const mpq_class& q);

/// Shortest "%.17g" rendering; round-trips through strtod.
std::string format_double(double x);

}  // namespace ghost

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace recip {

// mpq_class keeps every value in lowest terms with a positive denominator,
// and zero is stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Scales `v` in place to coprime integers whose first nonzero entry is
/// positive. The zero vector is left untouched.
void normalize_primitive(std::span<Rational> v);

/// Least common multiple of the denominators in `v`.
Integer common_denominator(std::span<const Rational> v);

bool is_zero_vector(std::span<const Rational> v);

}  // namespace recip

#ifndef COXDP_RATIONAL_HPP
#define COXDP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "coxdp/errors.hpp"

namespace coxdp {

// Exact arithmetic throughout: GMP rationals kept in canonical form
// (coprime numerator/denominator, positive denominator).
using Integer  = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-'). Throws input_error on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view s);

// Canonical text form, inverse of parse_rational on its own output.
std::string to_string(const Rational& q);

// Bit length of |z|; 0 for z = 0. Pivot-selection metric.
std::size_t bit_length(const Integer& z);

} // namespace coxdp

#endif

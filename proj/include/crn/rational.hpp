#ifndef CRN_RATIONAL_HPP
#define CRN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace crn {

using Integer = mpz_class;
using Rational = mpq_class;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

/// Parses "3", "-2", "3/4", "0.25" or "2e-3" into an exact rational.
/// Decimal and scientific literals convert losslessly (0.1 -> 1/10).
Rational parse_rational(const std::string& text);

/// Canonical form: "p" or "p/q" with q > 1.
std::string rational_to_string(const Rational& q);

double to_double(const Rational& q);

/// base^e by repeated squaring; e >= 0. 0^0 = 1.
Rational pow_rational(const Rational& base, unsigned long e);

} // namespace crn

#endif

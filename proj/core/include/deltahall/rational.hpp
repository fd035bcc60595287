#pragma once

#include <gmpxx.h>

#include <string>

namespace deltahall {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant the
// coefficient field needs.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical string form "num/den", always with an explicit denominator:
// "3/2", "0/1", "-1/6".
std::string rational_to_string(const Rational& x);

// Accepts "num/den" or a bare integer "num". Throws config_error on junk.
Rational rational_from_string(const std::string& s);

// q^e for integer e of either sign.
Rational rational_qpow(long q, long e);

}  // namespace deltahall

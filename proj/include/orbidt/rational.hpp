#ifndef ORBIDT_RATIONAL_HPP
#define ORBIDT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "orbidt/error.hpp"

namespace orbidt {

using Int = mpz_class;
using Rational = mpq_class;

// den != 0; result is canonicalized.
Rational make_rational(const Int& num, const Int& den);

// base^e for integer e; base != 0 when e < 0.
Rational pow_rational(const Rational& base, long e);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);

// "p" or "p/q", canonical form.
std::string rational_str(const Rational& x);

}  // namespace orbidt

#endif

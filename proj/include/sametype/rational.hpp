#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace sametype {

// Exact rational scalar. All geometric predicates run on these; no floating
// point anywhere in a decision path.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p/q" or "p" (base 10, optional leading '-'). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical form: "p/q" with gcd(p,q)=1, q>0, or just "p" when q==1.
std::string to_string(const Rational& x);

inline int sign_of(const Rational& x) { return x.sign(); }

Integer binomial(long n, long k);

}  // namespace sametype

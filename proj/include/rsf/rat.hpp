#pragma once

#include <gmpxx.h>

#include <string>

namespace rsf {

// Exact rationals. gmpxx keeps results of arithmetic in lowest terms with a
// positive denominator; make_rat canonicalizes explicitly constructed values.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rat& r)
{
    Rat c(r);
    c.canonicalize();
    return c.get_str();
}

// Parses "p/q", "p", or a decimal integer string.
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// True when the reduced denominator of r divides d.
inline bool denominator_divides(const Rat& r, long d)
{
    return mpz_divisible_p(Int(d).get_mpz_t(), r.get_den_mpz_t()) != 0;
}

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

}  // namespace rsf

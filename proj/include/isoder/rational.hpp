#ifndef ISODER_RATIONAL_HPP
#define ISODER_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace isoder {

// Exact rational scalar. GMP keeps the canonical form (reduced, positive
// denominator) for every arithmetic result; raw num/den constructors go
// through rat() below so canonicalization is never skipped.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" with an optional leading sign.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// r^e for e >= 0; negative exponents are rejected like every other power
// in the library.
inline Rat rat_pow(const Rat& r, long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Rat acc(1), base(r);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace isoder

#endif

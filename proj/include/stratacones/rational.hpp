#ifndef STRATACONES_RATIONAL_HPP
#define STRATACONES_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace strata {

// Arbitrary-precision exact arithmetic. mpq_class keeps values canonical
// (reduced, positive denominator); nothing here ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

[[nodiscard]] inline std::string rat_string(const Rat& r) { return r.get_str(); }

// Accepts "n" or "n/d".
[[nodiscard]] inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

[[nodiscard]] inline int sign(const Rat& r) { return sgn(r); }

} // namespace strata

#endif

#ifndef SL2Q_RATIONAL_HPP
#define SL2Q_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "sl2q/errors.hpp"

namespace sl2q {

/// Exact rational coefficients. GMP keeps intermediate polynomial
/// arithmetic (gcds, Gram products) from overflowing.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". The result is canonicalized.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw UsageError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw UsageError("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rational& r) { return r.get_d(); }

} // namespace sl2q

#endif // SL2Q_RATIONAL_HPP

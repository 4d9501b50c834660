#ifndef LRCW_RATIONAL_HPP
#define LRCW_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrcw {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalize(), which is exactly the normal form we need.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Rejects zero denominators and garbage.
Rational parse_rational(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

} // namespace lrcw

#endif

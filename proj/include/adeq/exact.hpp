#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace adeq {

// Arbitrary-precision integers and rationals. All counting and series
// arithmetic in this library runs on these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a cross-checked computation disagrees with itself
// (dual-route count mismatch, non-integer projected coefficient, ...).
// The CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (q * d != n && ((n < 0) != (d < 0))) --q;
    return q;
}

// Fractional part in [0, 1).
inline Rat mod1(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    return x - Rat(floor_div(n, d));
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int to_int(const Rat& x) {
    if (!is_integer(x)) throw internal_error("expected integer rational, got " + x.str());
    return numerator(x);
}

} // namespace adeq

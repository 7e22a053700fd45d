#pragma once

// Exact rational arithmetic for the density calculus. Square (and general
// k-th) roots are the only inexact operations; they are enclosed by outward
// rounding to rationals with denominator at most 10^12.

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/errors.hpp"

namespace turan {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int binomial_int(int n, int k);

// floor(x^(1/k)) for x >= 0, k >= 1.
Int iroot_floor(const Int& x, int k);

// Denominator used when rounding irrational roots outward.
inline const Int& root_denominator() {
    static const Int d = Int(1000000000000LL);  // 10^12
    return d;
}

// Encloses x^(1/k) in [lo, hi]. Exact (lo == hi) when x is a perfect k-th
// power of a rational; otherwise outward-rounded with denominator <= 10^12.
std::pair<Rational, Rational> kth_root_enclosure(const Rational& x, int k);

// "p/q" with q >= 1 and gcd(p, q) = 1.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

// Exact [lo, hi] enclosure of an asymptotic density; 0 <= lo <= hi <= 1.
struct DensityInterval {
    Rational lo;
    Rational hi;

    DensityInterval(Rational lo_, Rational hi_);
    static DensityInterval point(const Rational& v) { return DensityInterval(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains(const DensityInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool operator==(const DensityInterval&) const = default;

    std::string to_string() const;
};

}

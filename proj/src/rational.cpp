#include "turan/rational.hpp"

namespace turan {

Int binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

Int iroot_floor(const Int& x, int k) {
    if (x < 0) throw std::invalid_argument("iroot_floor requires x >= 0");
    if (k < 1) throw std::invalid_argument("iroot_floor requires k >= 1");
    if (x == 0 || x == 1 || k == 1) return x;

    // Newton from a strict upper bound; the iterate decreases monotonically
    // and the first non-decrease lands on floor(x^(1/k)).
    unsigned bits = boost::multiprecision::msb(x) + 1;
    Int cur = Int(1) << (bits / k + 1);
    for (;;) {
        Int p = boost::multiprecision::pow(cur, static_cast<unsigned>(k - 1));
        Int next = ((k - 1) * cur + x / p) / k;
        if (next >= cur) break;
        cur = next;
    }
    while (boost::multiprecision::pow(cur, static_cast<unsigned>(k)) > x) --cur;
    while (boost::multiprecision::pow(cur + 1, static_cast<unsigned>(k)) <= x) ++cur;
    return cur;
}

std::pair<Rational, Rational> kth_root_enclosure(const Rational& x, int k) {
    if (x < 0) throw std::invalid_argument("kth_root_enclosure requires x >= 0");
    if (k < 1) throw std::invalid_argument("kth_root_enclosure requires k >= 1");
    if (k == 1 || x == 0) return {x, x};

    Int p = boost::multiprecision::numerator(x);
    Int q = boost::multiprecision::denominator(x);

    // exact when both parts are perfect k-th powers (x is canonical)
    Int rp = iroot_floor(p, k);
    Int rq = iroot_floor(q, k);
    if (boost::multiprecision::pow(rp, static_cast<unsigned>(k)) == p &&
        boost::multiprecision::pow(rq, static_cast<unsigned>(k)) == q) {
        Rational exact(rp, rq);
        return {exact, exact};
    }

    // largest a with a^k * q <= p * D^k, i.e. a/D <= x^(1/k)
    const Int& d = root_denominator();
    Int target = p * boost::multiprecision::pow(d, static_cast<unsigned>(k));
    Int a = iroot_floor(target / q, k);
    while (boost::multiprecision::pow(a, static_cast<unsigned>(k)) * q > target) --a;
    while (boost::multiprecision::pow(a + 1, static_cast<unsigned>(k)) * q <= target) ++a;
    return {Rational(a, d), Rational(a + 1, d)};
}

std::string rational_to_string(const Rational& x) {
    Int p = boost::multiprecision::numerator(x);
    Int q = boost::multiprecision::denominator(x);
    return p.str() + "/" + q.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw ParseError("zero denominator: " + s);
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

DensityInterval::DensityInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo < 0 || lo > hi || hi > 1) {
        throw std::invalid_argument("density interval must satisfy 0 <= lo <= hi <= 1");
    }
}

std::string DensityInterval::to_string() const {
    return "[" + rational_to_string(lo) + ", " + rational_to_string(hi) + "]";
}

}

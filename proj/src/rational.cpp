#include "hgtrace/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hgtrace {

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    thread_local std::vector<BigInt> cache{1};
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt int_pow(const BigInt& base, long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow with negative exponent");
    BigInt r = 1, b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational r = 1, b = base;
        long e = exp;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    if (base == 0) throw std::invalid_argument("rat_pow: negative power of zero");
    return rat_pow(Rational(denominator(base), numerator(base)), -exp);
}

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, int digits, Rounding dir) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
    const BigInt scale = int_pow(10, digits);
    BigInt num = numerator(r) * scale;
    const BigInt den = denominator(r); // > 0 by invariant
    // Floor or ceil of num/den.
    BigInt q = num / den;
    const BigInt rem = num - q * den;
    if (rem != 0) {
        if (dir == Rounding::down && num < 0) --q;
        if (dir == Rounding::up && num > 0) ++q;
    }
    bool neg = q < 0;
    if (neg) q = -q;
    BigInt ip = q / scale, fp = q % scale;
    std::string frac = fp.str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = ip.str();
    if (digits > 0) out += "." + frac;
    if (neg && (ip != 0 || fp != 0)) out.insert(0, "-");
    return out;
}

} // namespace hgtrace

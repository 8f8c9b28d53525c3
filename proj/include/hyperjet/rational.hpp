#ifndef HYPERJET_RATIONAL_HPP
#define HYPERJET_RATIONAL_HPP

// Exact arithmetic base layer: arbitrary-precision integers and rationals
// (GNU MP), factorials, and the two binomial conventions used throughout.
//
// Two binomials are deliberately kept apart:
//   binom_ff : falling-factorial binomial, valid at negative arguments.
//              Every Euler characteristic formula needs this one,
//              e.g. binom_ff(-2,3) = -4.
//   binom_nn : combinatorial binomial, zero outside 0 <= k <= x.
//              Dimension formulas (h^0, h^q) need this one.
// Mixing them up produces silently wrong cohomology; do not "unify".

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjet {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not reduce fractions built from raw num/den; route
// construction through here so every Rat is in lowest terms, den > 0.
inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(long k)
{
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Falling-factorial binomial x(x-1)...(x-k+1)/k! for any integer x.
inline Int binom_ff(const Int& x, long k)
{
    if (k < 0) return Int(0);
    Int num(1);
    for (long j = 0; j < k; ++j) num *= x - j;
    Int den = factorial(k);
    Int q = num / den;   // always divisible: k! divides any k consecutive integers
    return q;
}

inline Int binom_ff(long x, long k) { return binom_ff(Int(x), k); }

// Combinatorial binomial, zero whenever x < 0, k < 0 or x < k.
inline Int binom_nn(const Int& x, long k)
{
    if (k < 0 || x < 0 || x < k) return Int(0);
    return binom_ff(x, k);
}

inline Int binom_nn(long x, long k) { return binom_nn(Int(x), k); }

inline Int int_pow(const Int& b, long e)
{
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;   // 0^0 = 1 under mpz_pow_ui, which is the convention wanted here
}

inline Rat rat_pow(const Rat& b, long e)
{
    if (e < 0) {
        if (b == 0) throw std::invalid_argument("rat_pow: 1/0");
        return make_rat(int_pow(b.get_den(), -e), int_pow(b.get_num(), -e));
    }
    return Rat(int_pow(b.get_num(), e), int_pow(b.get_den(), e));
}

// Canonical serialization: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

// Deterministic sampler for random rational evaluation points.
// Numerators in [-bound, bound] \ {0} unless zero_ok, denominators in [1, bound].
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed, long bound = 12)
        : gen_(seed), num_(-bound, bound), den_(1, bound) {}

    Rat next(bool zero_ok = false)
    {
        long n = num_(gen_);
        while (!zero_ok && n == 0) n = num_(gen_);
        return make_rat(Int(n), Int(den_(gen_)));
    }

    long next_int(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

private:
    std::mt19937_64 gen_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

}  // namespace hyperjet

#endif

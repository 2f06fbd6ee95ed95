#pragma once

// Exact integer and quadratic-surd arithmetic. Every comparison against an
// irrational quantity in this project is decided here, over unbounded
// integers, by sign-aware squaring; no floating point result ever crosses a
// module boundary.

#include <gmpxx.h>

#include "jacext/errors.hpp"

namespace jacext {

using Integer = mpz_class;

enum class Ordering { Less, Equal, Greater };

// A prime power q = p^e together with m = floor(2*sqrt(q)), the quantity
// around which all of the bounds are organized.
struct PrimePower {
    Integer q;
    Integer p;
    unsigned e = 0;
    Integer m;  // floor(2*sqrt(q))

    bool square() const { return e % 2 == 0; }
};

// floor(sqrt(n)); n must be >= 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

// Trial-division factorization of q as p^e. Throws NotPrimePowerError for
// anything else (including q < 2).
PrimePower factor_prime_power(const Integer& q);

// Thresholds the fractional part {2*sqrt(q)} is compared against:
//   GOLDEN  = (sqrt(5)-1)/2,  SQRT2M1 = sqrt(2)-1,  SQRT3M1 = sqrt(3)-1.
enum class SurdThreshold { GOLDEN, SQRT2M1, SQRT3M1 };

// Exact three-way comparison of {2*sqrt(q)} = 2*sqrt(q) - m with the chosen
// threshold. Decided entirely over Z by squaring; see sign_a_plus_b_sqrt.
Ordering cmp_frac_2sqrtq(const PrimePower& pp, SurdThreshold theta);

// floor(k*sqrt(q)) and ceil(k*sqrt(q)) for k >= 0, exact.
Integer floor_k_sqrt_q(const Integer& k, const PrimePower& pp);
Integer ceil_k_sqrt_q(const Integer& k, const PrimePower& pp);

namespace detail {

// sign of a + b*sqrt(q) for integers a, b and q >= 0: -1, 0, or +1.
int sign_a_plus_b_sqrt(const Integer& a, const Integer& b, const Integer& q);

// Element a + b*sqrt(q) of Z[sqrt(q)]. Enough structure to expand
// (x + y*sqrt(q))^n exactly and take exact floors; used for the Weil interval
// (sqrt(q) +/- 1)^(2g) and the Lachaud--Martin-Deschamps lower bound.
struct QuadSurd {
    Integer a;
    Integer b;
};

QuadSurd mul(const QuadSurd& x, const QuadSurd& y, const Integer& q);
QuadSurd pow(QuadSurd base, unsigned long n, const Integer& q);

// Exact floor/ceil of a + b*sqrt(q) (b of either sign).
Integer floor_surd(const QuadSurd& x, const Integer& q);
Integer ceil_surd(const QuadSurd& x, const Integer& q);

// Exact floor of (a + b*sqrt(q)) / c for c > 0.
Integer floor_surd_div(const QuadSurd& x, const Integer& q, const Integer& c);

}  // namespace detail

}  // namespace jacext

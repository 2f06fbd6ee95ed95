#include "jacext/exact_arith.hpp"

namespace jacext {

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

PrimePower factor_prime_power(const Integer& q) {
    if (q < 2) throw NotPrimePowerError("not a prime power: " + q.get_str());
    // Smallest prime factor by trial division; q is desk-scale by contract.
    Integer p = q;
    const Integer root = isqrt(q);
    for (Integer d = 2; d <= root; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    Integer rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw NotPrimePowerError("not a prime power: " + q.get_str());
    return PrimePower{q, p, e, isqrt(4 * q)};
}

namespace detail {

int sign_a_plus_b_sqrt(const Integer& a, const Integer& b, const Integer& q) {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2*q on the positive side.
    const Integer lhs = a * a, rhs = b * b * q;
    if (lhs == rhs) return 0;
    // a > 0, b < 0: a + b*sqrt(q) > 0  <=>  a^2 > b^2 q.
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

QuadSurd mul(const QuadSurd& x, const QuadSurd& y, const Integer& q) {
    return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a};
}

QuadSurd pow(QuadSurd base, unsigned long n, const Integer& q) {
    QuadSurd acc{1, 0};
    while (n != 0) {
        if (n & 1) acc = mul(acc, base, q);
        base = mul(base, base, q);
        n >>= 1;
    }
    return acc;
}

Integer floor_surd(const QuadSurd& x, const Integer& q) {
    // floor(a + b*sqrt(q)) = a + floor(b*sqrt(q)).
    if (x.b == 0) return x.a;
    Integer s = isqrt(x.b * x.b * q);
    if (x.b > 0) return x.a + s;
    // b < 0: floor(-|b|sqrt(q)) = -ceil(|b|sqrt(q)).
    if (!is_perfect_square(x.b * x.b * q)) ++s;
    return x.a - s;
}

Integer ceil_surd(const QuadSurd& x, const Integer& q) {
    return -floor_surd({-x.a, -x.b}, q);
}

Integer floor_surd_div(const QuadSurd& x, const Integer& q, const Integer& c) {
    if (c <= 0) throw std::domain_error("floor_surd_div: denominator must be positive");
    // With F = floor(a + b*sqrt(q)), any integer multiple k*c <= a + b*sqrt(q)
    // iff k*c <= F, so the floor of the quotient is fdiv(F, c).
    Integer f;
    const Integer num = floor_surd(x, q);
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
    return f;
}

}  // namespace detail

Ordering cmp_frac_2sqrtq(const PrimePower& pp, SurdThreshold theta) {
    // Compare 2*sqrt(q) - m against (sqrt(r) - 1)/d:
    //   d*(2*sqrt(q) - m) + 1  vs  sqrt(r),   L := 2d*sqrt(q) + (1 - d*m) >= 1,
    // so L vs sqrt(r) has the sign of L^2 - r = (B^2 q + A^2 - r) + 2AB*sqrt(q)
    // with A = 1 - d*m, B = 2d.
    Integer r, d;
    switch (theta) {
        case SurdThreshold::GOLDEN: r = 5; d = 2; break;
        case SurdThreshold::SQRT2M1: r = 2; d = 1; break;
        case SurdThreshold::SQRT3M1: r = 3; d = 1; break;
    }
    const Integer A = 1 - d * pp.m;
    const Integer B = 2 * d;
    const int s = detail::sign_a_plus_b_sqrt(B * B * pp.q + A * A - r, 2 * A * B, pp.q);
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

Integer floor_k_sqrt_q(const Integer& k, const PrimePower& pp) {
    if (k < 0) throw std::domain_error("floor_k_sqrt_q: k must be nonnegative");
    return isqrt(k * k * pp.q);
}

Integer ceil_k_sqrt_q(const Integer& k, const PrimePower& pp) {
    if (k < 0) throw std::domain_error("ceil_k_sqrt_q: k must be nonnegative");
    const Integer t = k * k * pp.q;
    Integer r = isqrt(t);
    if (r * r != t) ++r;
    return r;
}

}  // namespace jacext

#include "jacext/av_bounds.hpp"

#include <cmath>

namespace jacext {

namespace {

constexpr unsigned kMaxGenus = 64;

void check_genus(unsigned g) {
    if (g < 1 || g > kMaxGenus) throw std::domain_error("genus must be in [1, 64]");
}

Integer ipow(const Integer& base, unsigned long n) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
    return r;
}

// floor(num^g / den^g) with den > 0; num may be negative.
Integer floor_ratio_pow(const Integer& num, const Integer& den, unsigned g) {
    Integer r;
    const Integer a = ipow(num, g), b = ipow(den, g);
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

IntegerInterval serre_sandwich(const PrimePower& pp, unsigned g) {
    check_genus(g);
    return {ipow(pp.q + 1 - pp.m, g), ipow(pp.q + 1 + pp.m, g)};
}

IntegerInterval weil_sandwich(const PrimePower& pp, unsigned g) {
    check_genus(g);
    using detail::QuadSurd;
    const QuadSurd lo = detail::pow(QuadSurd{-1, 1}, 2ul * g, pp.q);  // (sqrt(q)-1)^2g
    const QuadSurd hi = detail::pow(QuadSurd{1, 1}, 2ul * g, pp.q);   // (sqrt(q)+1)^2g
    return {detail::floor_surd(lo, pp.q), detail::ceil_surd(hi, pp.q)};
}

Integer pq_upper(const CurveProfile& c) {
    check_genus(c.g);
    if (!c.n_points) throw std::invalid_argument("pq_upper: n_points is required");
    // (q + 1 + (N-q-1)/g)^g = (N + (g-1)(q+1))^g / g^g
    const Integer num = *c.n_points + Integer(c.g - 1) * (c.pp.q + 1);
    return floor_ratio_pow(num, c.g, c.g);
}

Integer lmd_lower(const CurveProfile& c) {
    check_genus(c.g);
    if (!c.n_points) throw std::invalid_argument("lmd_lower: n_points is required");
    // (sqrt(q)-1)^2 * K / (g(q-1)) with K = (q^(g-1)-1)(N+q-1)
    //   = ((q+1)K - 2K*sqrt(q)) / (g(q-1)).
    const Integer k = (ipow(c.pp.q, c.g - 1) - 1) * (*c.n_points + c.pp.q - 1);
    const Integer den = Integer(c.g) * (c.pp.q - 1);
    return detail::floor_surd_div({(c.pp.q + 1) * k, -2 * k}, c.pp.q, den);
}

Integer lmd_gonality_upper(const CurveProfile& c) {
    check_genus(c.g);
    if (!c.gonality || *c.gonality < 1)
        throw std::invalid_argument("lmd_gonality_upper: gonality >= 1 is required");
    const double e = std::exp(1.0);
    const double qg = ipow(c.pp.q, c.g).get_d();
    const double d = c.gonality->get_d();
    double v = e * std::pow(2.0 * c.g * std::sqrt(e), d - 1.0) * qg;
    v = std::nextafter(v, std::numeric_limits<double>::infinity());  // one-ulp safety
    return Integer(std::ceil(v));
}

Integer prop4_upper(const CurveProfile& c) {
    check_genus(c.g);
    if (!c.n_max) throw std::invalid_argument("prop4_upper: n_max is required");
    CurveProfile at_max = c;
    at_max.n_points = c.n_max;
    return pq_upper(at_max);
}

Integer serre_curve_upper(const PrimePower& pp, unsigned g) {
    check_genus(g);
    return pp.q + 1 + Integer(g) * pp.m;
}

std::pair<double, double> asymptotic_window(const PrimePower& pp) {
    const double q = pp.q.get_d();
    return {q, q + std::sqrt(q)};
}

double vladut_lower(const Integer& q) {
    if (q < 4 || !is_perfect_square(q))
        throw std::domain_error("vladut_lower: q must be a perfect square >= 4");
    const double qd = q.get_d();
    const double root = isqrt(q).get_d();
    return qd * std::pow(qd / (qd - 1.0), root - 1.0);
}

double vladut_lower(const PrimePower& pp) { return vladut_lower(pp.q); }

}  // namespace jacext

#pragma once

// Upper and lower bounds for the number of rational points on abelian
// varieties and jacobians over F_q. All integer-valued bounds are exact
// (floors/ceilings computed over Z[sqrt(q)]); the two asymptotic helpers are
// documented binary64 approximations.

#include <optional>
#include <utility>

#include "jacext/exact_arith.hpp"

namespace jacext {

// Inputs for the bound formulas: a (would-be) curve of genus g over F_q,
// optionally with its point count N, its gonality d, and the maximum point
// count Nmax over all genus-g curves.
struct CurveProfile {
    PrimePower pp;
    unsigned g = 1;
    std::optional<Integer> n_points;  // #X(F_q)
    std::optional<Integer> gonality;  // d >= 1
    std::optional<Integer> n_max;     // N_q(g)
};

struct IntegerInterval {
    Integer lower;
    Integer upper;
};

// (q+1-m)^g <= #A <= (q+1+m)^g.
IntegerInterval serre_sandwich(const PrimePower& pp, unsigned g);

// Outward integer enclosure of [(sqrt(q)-1)^(2g), (sqrt(q)+1)^(2g)].
IntegerInterval weil_sandwich(const PrimePower& pp, unsigned g);

// floor((q + 1 + (N - (q+1))/g)^g): arithmetic-geometric upper bound on #J
// for a curve with N points. Requires n_points.
Integer pq_upper(const CurveProfile& c);

// floor((sqrt(q)-1)^2 * (q^(g-1)-1)/g * (N+q-1)/(q-1)): lower bound on #J.
// Requires n_points.
Integer lmd_lower(const CurveProfile& c);

// ceil(e * (2g*sqrt(e))^(d-1) * q^g) for a curve of gonality d; evaluated in
// binary64 and inflated by one ulp before the ceiling, so the result is an
// upper bound for the binary64 value but only approximately tight.
// Requires gonality.
Integer lmd_gonality_upper(const CurveProfile& c);

// pq_upper evaluated at N = Nmax. Requires n_max.
Integer prop4_upper(const CurveProfile& c);

// q + 1 + g*m: upper bound for the number of points of the curve itself.
Integer serre_curve_upper(const PrimePower& pp, unsigned g);

// (q, q + sqrt(q)) in binary64: the window squeezing the g -> infinity limits
// of J_q(g)^(1/g) and j_q(g)^(1/g).
std::pair<double, double> asymptotic_window(const PrimePower& pp);

// q * (q/(q-1))^(sqrt(q)-1) in binary64; q must be a perfect square >= 4.
// Takes a plain Integer so non-prime-power squares (e.g. 10^6) are usable.
double vladut_lower(const Integer& q);
double vladut_lower(const PrimePower& pp);

}  // namespace jacext

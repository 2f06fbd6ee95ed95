#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacext/errors.hpp"
#include "jacext/exact_arith.hpp"
#include "jacext/surface_enum.hpp"

namespace jacext {

enum class SpecialCondition {
    P_DIVIDES_M,       // p | m
    X2_PLUS_1,         // m^2 - 4q = -4, i.e. q = x^2 + 1
    X2_PLUS_X_PLUS_1,  // m^2 - 4q = -3, i.e. q = x^2 + x + 1
    X2_PLUS_X_PLUS_2,  // m^2 - 4q = -7, i.e. q = x^2 + x + 2
};

std::string to_string(SpecialCondition c);

struct SpecialVerdict {
    bool special = false;
    std::vector<SpecialCondition> conditions;  // in enum order
    Integer disc4;                             // m^2 - 4q
};

// One extremal value with its provenance: the clause that produced it, the
// realizing isogeny class (a (a1, a2) pair for surfaces, a Frobenius trace for
// elliptic curves) and where {2*sqrt(q)} sits against the two branch thresholds.
struct ExtremalReport {
    Integer value;
    std::string branch;
    std::optional<SurfacePair> realizing;  // dimension 2
    std::optional<Integer> trace;          // dimension 1: value = q + 1 + trace
    std::string type;                      // numeric type string, e.g. "[4, 4]"
    Ordering vs_golden = Ordering::Less;
    Ordering vs_sqrt2m1 = Ordering::Less;
};

// The four special-q conditions, evaluated for odd prime powers only.
SpecialVerdict is_special(const PrimePower& pp);  // even e: NotOddPowerError

// Maximum and minimum number of points on an elliptic curve over F_q:
// (q+1+m, q+1-m) unless e is odd, e > 1 and p | m, where (q+m, q+2-m).
std::pair<ExtremalReport, ExtremalReport> extremal_g1(const PrimePower& pp);

// J_q(2) and j_q(2): exact case splits over squareness, specialness, the
// GOLDEN / SQRT2M1 fractional thresholds and the characteristic.
ExtremalReport extremal_g2_max(const PrimePower& pp);
ExtremalReport extremal_g2_min(const PrimePower& pp);

// Every prime power with odd e in [lo, hi], with its verdict.
std::vector<std::pair<Integer, SpecialVerdict>> special_scan(const Integer& lo,
                                                             const Integer& hi);

}  // namespace jacext

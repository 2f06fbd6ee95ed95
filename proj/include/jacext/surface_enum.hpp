#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacext/errors.hpp"
#include "jacext/exact_arith.hpp"

namespace jacext {

// An isogeny class of abelian surfaces over F_q, identified by the two free
// coefficients of its Frobenius characteristic polynomial
//   f_A(t) = t^4 + a1*t^3 + a2*t^2 + q*a1*t + q^2.
struct SurfacePair {
    Integer a1;
    Integer a2;

    bool operator==(const SurfacePair& o) const { return a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const SurfacePair& o) const { return !(*this == o); }
    bool operator<(const SurfacePair& o) const {
        if (a1 != o.a1) return a1 < o.a1;
        return a2 < o.a2;
    }
};

// t^2 + a1*t + c0 with c0 = a2 - 2q; its roots are -x1, -x2 where [x1, x2]
// is the type of the class (x1 + x2 = a1, x1*x2 = c0).
struct RealWeilPoly {
    Integer a1;
    Integer c0;

    Integer disc() const { return a1 * a1 - 4 * c0; }
};

// Quartic coefficients [1, a1, a2, q*a1, q^2], highest degree first.
struct CharPoly {
    Integer coeffs[5];

    Integer eval_at_one() const {
        return coeffs[0] + coeffs[1] + coeffs[2] + coeffs[3] + coeffs[4];
    }
};

struct TableRow {
    SurfacePair pair;
    Integer count;
    std::string type;  // human-readable type string, e.g. "[m, m-1]"
};

// Rows of Table 1 (descending counts) or Table 2 (ascending counts).
using RankedTable = std::vector<TableRow>;

enum class EnumOrder { Ascending, Descending };

enum class Realizability { Yes, No, Unknown };

enum class ObstructionRule {
    ConsecutiveIntegerSplit,  // disc is a perfect square, integer roots differ by 1
    SerreMM1,                 // type [m, m-1] or its twist [-m, -(m-1)]
    AlmostOrdinarySqfree,     // the two literal almost-ordinary instances (q = 4, 9)
};

std::string to_string(ObstructionRule rule);

// Exact admissibility test: |a1| <= 2m and
// ceil(2|a1|*sqrt(q)) - 2q <= a2 <= floor(a1^2/4) + 2q.
bool weil_admissible(const PrimePower& pp, const Integer& a1, const Integer& a2);

// #A(F_q) = f_A(1) = q^2 + 1 + (q+1)*a1 + a2. Defined for every integer pair.
Integer point_count(const PrimePower& pp, const Integer& a1, const Integer& a2);
Integer point_count(const PrimePower& pp, const SurfacePair& pair);

// All Weil-admissible pairs, sorted by point count in the requested order.
// Ties break lexicographically by (a1, a2) in the same direction.
std::vector<std::pair<SurfacePair, Integer>> enumerate_admissible(const PrimePower& pp,
                                                                  EnumOrder order);

// The seven formal rows of Table 1 (point-count maximizers, counts strictly
// decreasing) and Table 2 (minimizers, counts ascending). The rows are formal:
// the three surd rows are Weil-admissible iff {2*sqrt(q)} clears the matching
// threshold ((sqrt(5)-1)/2 for the [.. +- sqrt(5)..]/2 row, sqrt(2)-1 and
// sqrt(3)-1 for the last two rows), so for some q a listed row names no actual
// isogeny class. Requires m >= 2 (true for every prime power).
RankedTable table1(const PrimePower& pp);
RankedTable table2(const PrimePower& pp);

// Exhaustive replacement for the analytic dominance chains following the two
// tables. Verifies:
//  - every admissible pair that is not a formal Table-1 row has point count
//    strictly below (q+m)^2 - 3, the smallest Table-1 value (all q);
//  - dually for Table 2 against (q+2-m)^2 when q >= 7; for q < 7 the strict
//    form is false (e.g. q=2 admits (-1,-1) with count 1), so the check relaxes
//    to the Theorem-2 floor: no count below (q+1-m)^2 and the ascending
//    enumeration starts exactly at (-2m, m^2+2q).
bool verify_dominance(const PrimePower& pp);

// No if not admissible; Yes if admissible and p does not divide a2 (sufficient
// criterion); Unknown otherwise.
Realizability realizable_surface(const PrimePower& pp, const Integer& a1, const Integer& a2);

// Every obstruction rule matching the class, in enum order. Requires an
// admissible pair. Note SerreMM1 classes have disc = 1, so they always carry
// ConsecutiveIntegerSplit as well; AlmostOrdinarySqfree fires only on the two
// literal instances (q=4, a1=+-5, a2=12) and (q=9, a1=+-10, a2=42). An empty
// result proves nothing.
std::vector<ObstructionRule> jacobian_obstructions(const PrimePower& pp, const Integer& a1,
                                                   const Integer& a2);

// #X(F_{q^k}) for a curve with jacobian in the class: q^k + 1 - s_k, where s_k
// is the k-th power sum of the quartic's roots (Newton recurrence, then the
// degree-4 linear recurrence for k > 4). Requires an admissible pair, 1 <= k <= 8.
Integer predict_Nk(const PrimePower& pp, const Integer& a1, const Integer& a2, unsigned k);

CharPoly char_poly(const PrimePower& pp, const Integer& a1, const Integer& a2);
RealWeilPoly real_weil_poly(const PrimePower& pp, const Integer& a1, const Integer& a2);

// Numeric type string: "[x1, x2]" with the x_i written exactly, e.g. "[7, 6]",
// "[6+sqrt(2), 6-sqrt(2)]", "[(13+sqrt(5))/2, (13-sqrt(5))/2]".
std::string type_string(const PrimePower& pp, const Integer& a1, const Integer& a2);

}  // namespace jacext

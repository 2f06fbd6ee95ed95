#include "jacext/surface_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jacext {

namespace {

// Largest s with s^2 | d, and the squarefree cofactor r = d / s^2.
void square_part(const Integer& d, Integer& s, Integer& r) {
    s = 1;
    r = d;
    for (Integer f = 2; f * f <= r; ++f) {
        while (r % (f * f) == 0) {
            r /= f * f;
            s *= f;
        }
    }
}

std::string surd_str(const Integer& coef, const Integer& radicand) {
    std::string out;
    if (coef != 1) out += coef.get_str() + "*";
    out += "sqrt(" + radicand.get_str() + ")";
    return out;
}

void require_admissible(const PrimePower& pp, const Integer& a1, const Integer& a2,
                        const char* op) {
    if (!weil_admissible(pp, a1, a2)) {
        throw std::invalid_argument(std::string(op) + ": pair (" + a1.get_str() + ", " +
                                    a2.get_str() + ") is not Weil-admissible for q = " +
                                    pp.q.get_str());
    }
}

}  // namespace

std::string to_string(ObstructionRule rule) {
    switch (rule) {
        case ObstructionRule::ConsecutiveIntegerSplit: return "CONSECUTIVE_INTEGER_SPLIT";
        case ObstructionRule::SerreMM1: return "SERRE_M_M1";
        case ObstructionRule::AlmostOrdinarySqfree: return "ALMOST_ORDINARY_SQFREE";
    }
    throw std::logic_error("unreachable obstruction rule");
}

bool weil_admissible(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    Integer abs_a1 = abs(a1);
    if (abs_a1 > 2 * pp.m) return false;
    Integer lower = ceil_k_sqrt_q(2 * abs_a1, pp) - 2 * pp.q;
    if (a2 < lower) return false;
    Integer upper;
    mpz_fdiv_q_ui(upper.get_mpz_t(), Integer(a1 * a1).get_mpz_t(), 4);
    upper += 2 * pp.q;
    return a2 <= upper;
}

Integer point_count(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    return pp.q * pp.q + 1 + (pp.q + 1) * a1 + a2;
}

Integer point_count(const PrimePower& pp, const SurfacePair& pair) {
    return point_count(pp, pair.a1, pair.a2);
}

std::vector<std::pair<SurfacePair, Integer>> enumerate_admissible(const PrimePower& pp,
                                                                  EnumOrder order) {
    std::vector<std::pair<SurfacePair, Integer>> out;
    for (Integer a1 = -2 * pp.m; a1 <= 2 * pp.m; ++a1) {
        Integer lower = ceil_k_sqrt_q(2 * abs(a1), pp) - 2 * pp.q;
        Integer upper;
        mpz_fdiv_q_ui(upper.get_mpz_t(), Integer(a1 * a1).get_mpz_t(), 4);
        upper += 2 * pp.q;
        for (Integer a2 = lower; a2 <= upper; ++a2) {
            out.push_back({SurfacePair{a1, a2}, point_count(pp, a1, a2)});
        }
    }
    auto asc = [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    };
    if (order == EnumOrder::Ascending) {
        std::sort(out.begin(), out.end(), asc);
    } else {
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return asc(y, x); });
    }
    return out;
}

namespace {

RankedTable build_table(const PrimePower& pp, bool maximizing) {
    if (pp.m < 2) {
        throw TableUndefinedError("tables need m >= 2, got m = " + pp.m.get_str() +
                                  " for q = " + pp.q.get_str());
    }
    const Integer m = pp.m;
    const Integer two_q = 2 * pp.q;
    // a2 offsets shared by both tables, listed against |a1| = 2m, 2m-1, 2m-2.
    const std::vector<SurfacePair> maximizers = {
        {2 * m, m * m + two_q},
        {2 * m - 1, m * m - m + two_q},
        {2 * m - 1, m * m - m - 1 + two_q},
        {2 * m - 2, (m - 1) * (m - 1) + two_q},
        {2 * m - 2, m * m - 2 * m + two_q},
        {2 * m - 2, m * m - 2 * m - 1 + two_q},
        {2 * m - 2, m * m - 2 * m - 2 + two_q},
    };
    std::vector<SurfacePair> pairs;
    if (maximizing) {
        pairs = maximizers;
    } else {
        // Mirrored pairs, reordered so the formal counts ascend:
        // (q+1-m)^2, (q+1-m)^2+(q+1-m)-1, (q+1-m)(q+2-m), (q+2-m)^2-3,
        // (q+2-m)^2-2, (q+1-m)(q+3-m), (q+2-m)^2.
        const int order[7] = {0, 2, 1, 6, 5, 4, 3};
        for (int i : order) pairs.push_back({-maximizers[i].a1, maximizers[i].a2});
    }
    RankedTable table;
    for (const auto& pr : pairs) {
        table.push_back({pr, point_count(pp, pr), type_string(pp, pr.a1, pr.a2)});
    }
    return table;
}

}  // namespace

RankedTable table1(const PrimePower& pp) { return build_table(pp, true); }
RankedTable table2(const PrimePower& pp) { return build_table(pp, false); }

bool verify_dominance(const PrimePower& pp) {
    const RankedTable t1 = table1(pp);
    const RankedTable t2 = table2(pp);
    std::set<SurfacePair> rows1, rows2;
    for (const auto& row : t1) rows1.insert(row.pair);
    for (const auto& row : t2) rows2.insert(row.pair);
    const Integer bound1 = t1.back().count;   // (q+m)^2 - 3
    const Integer bound2 = t2.back().count;   // (q+2-m)^2
    const Integer floor2 = t2.front().count;  // (q+1-m)^2

    const auto all = enumerate_admissible(pp, EnumOrder::Ascending);
    const bool strict_min_side = pp.q >= 7;
    for (const auto& [pair, count] : all) {
        if (!rows1.count(pair) && count >= bound1) return false;
        if (strict_min_side) {
            if (!rows2.count(pair) && count <= bound2) return false;
        } else if (count < floor2) {
            return false;
        }
    }
    if (!strict_min_side) {
        const SurfacePair theorem2_min{-2 * pp.m, pp.m * pp.m + 2 * pp.q};
        if (all.empty() || all.front().first != theorem2_min || all.front().second != floor2) {
            return false;
        }
    }
    return true;
}

Realizability realizable_surface(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    if (!weil_admissible(pp, a1, a2)) return Realizability::No;
    if (a2 % pp.p != 0) return Realizability::Yes;
    return Realizability::Unknown;
}

std::vector<ObstructionRule> jacobian_obstructions(const PrimePower& pp, const Integer& a1,
                                                   const Integer& a2) {
    require_admissible(pp, a1, a2, "jacobian_obstructions");
    std::vector<ObstructionRule> rules;
    const Integer disc = real_weil_poly(pp, a1, a2).disc();
    if (disc == 1) rules.push_back(ObstructionRule::ConsecutiveIntegerSplit);
    if (abs(a1) == 2 * pp.m - 1 && a2 == pp.m * pp.m - pp.m + 2 * pp.q) {
        rules.push_back(ObstructionRule::SerreMM1);
    }
    if ((pp.q == 4 && abs(a1) == 5 && a2 == 12) || (pp.q == 9 && abs(a1) == 10 && a2 == 42)) {
        rules.push_back(ObstructionRule::AlmostOrdinarySqfree);
    }
    return rules;
}

Integer predict_Nk(const PrimePower& pp, const Integer& a1, const Integer& a2, unsigned k) {
    require_admissible(pp, a1, a2, "predict_Nk");
    if (k < 1 || k > 8) {
        throw std::domain_error("predict_Nk: k must be in [1, 8], got " + std::to_string(k));
    }
    const Integer& q = pp.q;
    std::vector<Integer> s(k + 1);
    s[1] = -a1;
    if (k >= 2) s[2] = -a1 * s[1] - 2 * a2;
    if (k >= 3) s[3] = -a1 * s[2] - a2 * s[1] - 3 * q * a1;
    if (k >= 4) s[4] = -a1 * s[3] - a2 * s[2] - q * a1 * s[1] - 4 * q * q;
    for (unsigned i = 5; i <= k; ++i) {
        s[i] = -(a1 * s[i - 1] + a2 * s[i - 2] + q * a1 * s[i - 3] + q * q * s[i - 4]);
    }
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    return qk + 1 - s[k];
}

CharPoly char_poly(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    return CharPoly{{Integer(1), a1, a2, pp.q * a1, pp.q * pp.q}};
}

RealWeilPoly real_weil_poly(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    return RealWeilPoly{a1, a2 - 2 * pp.q};
}

std::string type_string(const PrimePower& pp, const Integer& a1, const Integer& a2) {
    const Integer disc = real_weil_poly(pp, a1, a2).disc();
    if (disc < 0) {
        throw std::invalid_argument("type_string: negative real-Weil discriminant (pair not "
                                    "admissible)");
    }
    if (disc == 0) {
        Integer x = a1 / 2;
        return "[" + x.get_str() + ", " + x.get_str() + "]";
    }
    Integer s, r;
    square_part(disc, s, r);
    if (r == 1) {  // integer types: x = (a1 +- s)/2, parities always match
        Integer x1 = (a1 + s) / 2, x2 = (a1 - s) / 2;
        return "[" + x1.get_str() + ", " + x2.get_str() + "]";
    }
    if (a1 % 2 == 0 && s % 2 == 0) {
        Integer half = a1 / 2;
        std::string surd = surd_str(s / 2, r);
        std::string base = half == 0 ? "" : half.get_str() + "+";
        std::string base_minus = half == 0 ? "-" : half.get_str() + "-";
        return "[" + base + surd + ", " + base_minus + surd + "]";
    }
    std::string surd = surd_str(s, r);
    return "[(" + a1.get_str() + "+" + surd + ")/2, (" + a1.get_str() + "-" + surd + ")/2]";
}

}  // namespace jacext

#include "jacext/extremal.hpp"

namespace jacext {

namespace {

ExtremalReport make_g2_report(const PrimePower& pp, std::string branch, SurfacePair realizing) {
    ExtremalReport r;
    r.value = point_count(pp, realizing);
    r.branch = std::move(branch);
    r.realizing = realizing;
    r.type = type_string(pp, realizing.a1, realizing.a2);
    r.vs_golden = cmp_frac_2sqrtq(pp, SurdThreshold::GOLDEN);
    r.vs_sqrt2m1 = cmp_frac_2sqrtq(pp, SurdThreshold::SQRT2M1);
    return r;
}

ExtremalReport make_g1_report(const PrimePower& pp, std::string branch, Integer trace) {
    ExtremalReport r;
    r.value = pp.q + 1 + trace;
    r.branch = std::move(branch);
    r.trace = trace;
    r.type = "[" + trace.get_str() + "]";
    r.vs_golden = cmp_frac_2sqrtq(pp, SurdThreshold::GOLDEN);
    r.vs_sqrt2m1 = cmp_frac_2sqrtq(pp, SurdThreshold::SQRT2M1);
    return r;
}

}  // namespace

std::string to_string(SpecialCondition c) {
    switch (c) {
        case SpecialCondition::P_DIVIDES_M: return "P_DIVIDES_M";
        case SpecialCondition::X2_PLUS_1: return "X2_PLUS_1";
        case SpecialCondition::X2_PLUS_X_PLUS_1: return "X2_PLUS_X_PLUS_1";
        case SpecialCondition::X2_PLUS_X_PLUS_2: return "X2_PLUS_X_PLUS_2";
    }
    throw std::logic_error("unreachable special condition");
}

SpecialVerdict is_special(const PrimePower& pp) {
    if (pp.square()) {
        throw NotOddPowerError("is_special is defined for odd powers only, got q = " +
                               pp.q.get_str());
    }
    SpecialVerdict v;
    v.disc4 = pp.m * pp.m - 4 * pp.q;
    if (pp.m % pp.p == 0) v.conditions.push_back(SpecialCondition::P_DIVIDES_M);
    if (v.disc4 == -4) v.conditions.push_back(SpecialCondition::X2_PLUS_1);
    if (v.disc4 == -3) v.conditions.push_back(SpecialCondition::X2_PLUS_X_PLUS_1);
    if (v.disc4 == -7) v.conditions.push_back(SpecialCondition::X2_PLUS_X_PLUS_2);
    v.special = !v.conditions.empty();
    return v;
}

std::pair<ExtremalReport, ExtremalReport> extremal_g1(const PrimePower& pp) {
    const bool generic = pp.e == 1 || pp.e % 2 == 0 || pp.m % pp.p != 0;
    if (generic) {
        return {make_g1_report(pp, "G1_GENERIC", pp.m), make_g1_report(pp, "G1_GENERIC", -pp.m)};
    }
    return {make_g1_report(pp, "G1_EXCEPTIONAL", pp.m - 1),
            make_g1_report(pp, "G1_EXCEPTIONAL", -(pp.m - 1))};
}

ExtremalReport extremal_g2_max(const PrimePower& pp) {
    const Integer m = pp.m, two_q = 2 * pp.q;
    if (pp.square()) {
        if (pp.q == 4) return make_g2_report(pp, "SQUARE_Q4", {5, 13});
        if (pp.q == 9) return make_g2_report(pp, "SQUARE_Q9", {2 * m - 2, (m - 1) * (m - 1) + two_q});
        return make_g2_report(pp, "SQUARE_GENERAL", {2 * m, m * m + two_q});
    }
    if (!is_special(pp).special) {
        return make_g2_report(pp, "NOT_SPECIAL", {2 * m, m * m + two_q});
    }
    if (cmp_frac_2sqrtq(pp, SurdThreshold::GOLDEN) != Ordering::Less) {
        return make_g2_report(pp, "SPECIAL_GOLDEN", {2 * m - 1, m * m - m - 1 + two_q});
    }
    if (pp.p != 2 || m % pp.p == 0) {
        return make_g2_report(pp, "SPECIAL_PM", {2 * m - 2, (m - 1) * (m - 1) + two_q});
    }
    return make_g2_report(pp, "SPECIAL_CHAR2", {2 * m - 2, m * m - 2 * m + two_q});
}

ExtremalReport extremal_g2_min(const PrimePower& pp) {
    const Integer m = pp.m, two_q = 2 * pp.q;
    if (pp.square()) {
        if (pp.q == 4) return make_g2_report(pp, "SQUARE_Q4", {-5, 13});
        if (pp.q == 9) {
            return make_g2_report(pp, "SQUARE_Q9", {-2 * m + 2, (m - 1) * (m - 1) + two_q});
        }
        return make_g2_report(pp, "SQUARE_GENERAL", {-2 * m, m * m + two_q});
    }
    if (!is_special(pp).special) {
        return make_g2_report(pp, "NOT_SPECIAL", {-2 * m, m * m + two_q});
    }
    if (cmp_frac_2sqrtq(pp, SurdThreshold::GOLDEN) != Ordering::Less) {
        return make_g2_report(pp, "SPECIAL_GOLDEN", {-2 * m + 1, m * m - m - 1 + two_q});
    }
    if (cmp_frac_2sqrtq(pp, SurdThreshold::SQRT2M1) != Ordering::Less) {
        return make_g2_report(pp, "SPECIAL_SQRT2", {-2 * m + 2, m * m - 2 * m - 1 + two_q});
    }
    if (m % pp.p != 0 && pp.q != 343) {
        return make_g2_report(pp, "SPECIAL_PNOTDIVM", {-2 * m + 2, m * m - 2 * m + two_q});
    }
    return make_g2_report(pp, "OTHERWISE", {-2 * m + 2, (m - 1) * (m - 1) + two_q});
}

std::vector<std::pair<Integer, SpecialVerdict>> special_scan(const Integer& lo,
                                                             const Integer& hi) {
    std::vector<std::pair<Integer, SpecialVerdict>> out;
    for (Integer q = lo; q <= hi; ++q) {
        PrimePower pp;
        try {
            pp = factor_prime_power(q);
        } catch (const NotPrimePowerError&) {
            continue;
        }
        if (pp.square()) continue;
        out.push_back({q, is_special(pp)});
    }
    return out;
}

}  // namespace jacext

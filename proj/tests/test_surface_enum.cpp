#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "jacext/surface_enum.hpp"

using namespace jacext;

namespace {

std::vector<PrimePower> prime_powers_upto(long hi) {
    std::vector<PrimePower> out;
    for (long q = 2; q <= hi; ++q) {
        try {
            out.push_back(factor_prime_power(q));
        } catch (const NotPrimePowerError&) {
        }
    }
    return out;
}

std::vector<Integer> counts_of(const RankedTable& t) {
    std::vector<Integer> out;
    for (const auto& row : t) out.push_back(row.count);
    return out;
}

// Independent oracle for power sums when the real Weil polynomial splits over Z:
// f_A = (t^2 + x1 t + q)(t^2 + x2 t + q), so s_k is the sum of two quadratic
// power-sum recurrences instead of the quartic Newton identities.
Integer split_power_sum(const Integer& q, const Integer& x1, const Integer& x2, unsigned k) {
    auto quad = [&](const Integer& x) {
        Integer prev = 2, cur = -x;  // p_0, p_1
        for (unsigned i = 2; i <= k; ++i) {
            Integer next = -x * cur - q * prev;
            prev = cur;
            cur = next;
        }
        return k == 0 ? Integer(2) : cur;
    };
    return quad(x1) + quad(x2);
}

}  // namespace

TEST_CASE("weil_admissible") {
    CHECK(weil_admissible(factor_prime_power(4), 5, 14));
    CHECK_FALSE(weil_admissible(factor_prime_power(2), 4, 7));  // floor at a1=4 is a2=8
    CHECK_FALSE(weil_admissible(factor_prime_power(2), 5, 0));  // |a1| > 2m
    // twist symmetry of the admissible region
    for (const auto& pp : prime_powers_upto(9)) {
        for (long a1 = -10; a1 <= 10; ++a1) {
            for (long a2 = -30; a2 <= 30; ++a2) {
                REQUIRE(weil_admissible(pp, a1, a2) == weil_admissible(pp, -a1, a2));
            }
        }
    }
}

TEST_CASE("point_count") {
    CHECK(point_count(factor_prime_power(4), 5, 13) == 55);
    CHECK(point_count(factor_prime_power(4), -5, 13) == 5);
    CHECK(point_count(factor_prime_power(2), 0, 0) == 5);
}

TEST_CASE("point_count equals the characteristic polynomial at 1") {
    for (const auto& pp : prime_powers_upto(13)) {
        for (const auto& [pair, count] : enumerate_admissible(pp, EnumOrder::Ascending)) {
            REQUIRE(char_poly(pp, pair.a1, pair.a2).eval_at_one() == count);
        }
    }
}

TEST_CASE("enumerate_admissible at q=2") {
    auto pp = factor_prime_power(2);
    auto desc = enumerate_admissible(pp, EnumOrder::Descending);
    auto asc = enumerate_admissible(pp, EnumOrder::Ascending);
    CHECK(desc.size() == 35);
    CHECK(asc.size() == 35);
    CHECK(desc.front().first == SurfacePair{4, 8});
    CHECK(desc.front().second == 25);
    CHECK(asc.front().first == SurfacePair{-4, 8});
    CHECK(asc.front().second == 1);
    for (const auto& [pair, count] : asc) {
        REQUIRE(weil_admissible(pp, pair.a1, pair.a2));
        REQUIRE(count == point_count(pp, pair));
    }
    for (size_t i = 1; i < asc.size(); ++i) {
        REQUIRE(asc[i - 1].second <= asc[i].second);
        REQUIRE(desc[i - 1].second >= desc[i].second);
    }
}

TEST_CASE("tables at q=13") {
    auto pp = factor_prime_power(13);
    auto t1 = table1(pp);
    auto t2 = table2(pp);
    CHECK(counts_of(t1) == std::vector<Integer>{441, 420, 419, 400, 399, 398, 397});
    CHECK(counts_of(t2) == std::vector<Integer>{49, 55, 56, 61, 62, 63, 64});
    CHECK(t1[0].type == "[7, 7]");
    CHECK(t1[1].type == "[7, 6]");
    CHECK(t1[2].type == "[(13+sqrt(5))/2, (13-sqrt(5))/2]");
    CHECK(t1[3].type == "[6, 6]");
    CHECK(t1[4].type == "[7, 5]");
    CHECK(t1[5].type == "[6+sqrt(2), 6-sqrt(2)]");
    CHECK(t1[6].type == "[6+sqrt(3), 6-sqrt(3)]");
    CHECK(t2[0].pair == SurfacePair{-14, 75});
    CHECK(t2[0].type == "[-7, -7]");
}

TEST_CASE("tables at small q") {
    CHECK(table1(factor_prime_power(4))[0].count == 81);
    CHECK(counts_of(table1(factor_prime_power(2))) ==
          std::vector<Integer>{25, 20, 19, 16, 15, 14, 13});
    // formal Table-2 counts collide below q=7
    CHECK(counts_of(table2(factor_prime_power(2))) == std::vector<Integer>{1, 1, 2, 1, 2, 3, 4});
    PrimePower tiny{2, 2, 1, 1};  // synthetic: no prime power has m < 2
    CHECK_THROWS_AS(table1(tiny), TableUndefinedError);
}

TEST_CASE("table rows: closed forms, point_count consistency, monotonicity domains") {
    for (const auto& pp : prime_powers_upto(49)) {
        const Integer S = pp.q + 1 + pp.m, B = pp.q + pp.m;
        const Integer T = pp.q + 1 - pp.m, U = pp.q + 2 - pp.m;
        auto t1 = table1(pp);
        auto t2 = table2(pp);
        CHECK(counts_of(t1) == std::vector<Integer>{S * S, S * B, S * S - S - 1, B * B,
                                                    S * (pp.q - 1 + pp.m), B * B - 2, B * B - 3});
        CHECK(counts_of(t2) == std::vector<Integer>{T * T, T * T + T - 1, T * (T + 1), U * U - 3,
                                                    U * U - 2, T * (T + 2), U * U});
        for (const auto& row : t1) REQUIRE(row.count == point_count(pp, row.pair));
        for (const auto& row : t2) REQUIRE(row.count == point_count(pp, row.pair));
        for (size_t i = 1; i < t1.size(); ++i) REQUIRE(t1[i - 1].count > t1[i].count);
        if (pp.q >= 7) {
            for (size_t i = 1; i < t2.size(); ++i) REQUIRE(t2[i - 1].count < t2[i].count);
        }
    }
}

TEST_CASE("surd table rows are admissible exactly when the threshold clears") {
    for (const auto& pp : prime_powers_upto(100)) {
        auto t1 = table1(pp);
        auto t2 = table2(pp);
        auto adm = [&](const TableRow& row) {
            return weil_admissible(pp, row.pair.a1, row.pair.a2);
        };
        auto clears = [&](SurdThreshold t) {
            return cmp_frac_2sqrtq(pp, t) != Ordering::Less;
        };
        // integer-type rows are unconditionally admissible
        for (int i : {0, 1, 3, 4}) REQUIRE(adm(t1[i]));
        for (int i : {0, 2, 5, 6}) REQUIRE(adm(t2[i]));
        CHECK(adm(t1[2]) == clears(SurdThreshold::GOLDEN));
        CHECK(adm(t1[5]) == clears(SurdThreshold::SQRT2M1));
        CHECK(adm(t1[6]) == clears(SurdThreshold::SQRT3M1));
        CHECK(adm(t2[1]) == clears(SurdThreshold::GOLDEN));
        CHECK(adm(t2[4]) == clears(SurdThreshold::SQRT2M1));
        CHECK(adm(t2[3]) == clears(SurdThreshold::SQRT3M1));
    }
}

TEST_CASE("verify_dominance") {
    CHECK(verify_dominance(factor_prime_power(13)));
    CHECK(verify_dominance(factor_prime_power(4)));
    CHECK(verify_dominance(factor_prime_power(3)));
    for (const auto& pp : prime_powers_upto(49)) {
        CAPTURE(pp.q.get_str());
        REQUIRE(verify_dominance(pp));
    }
}

TEST_CASE("sandwich bounds with exact equality sets") {
    for (const auto& pp : prime_powers_upto(13)) {
        const Integer lo = (pp.q + 1 - pp.m) * (pp.q + 1 - pp.m);
        const Integer hi = (pp.q + 1 + pp.m) * (pp.q + 1 + pp.m);
        std::set<SurfacePair> at_lo, at_hi;
        for (const auto& [pair, count] : enumerate_admissible(pp, EnumOrder::Ascending)) {
            REQUIRE(count >= lo);
            REQUIRE(count <= hi);
            if (count == lo) at_lo.insert(pair);
            if (count == hi) at_hi.insert(pair);
        }
        REQUIRE(at_hi == std::set<SurfacePair>{{2 * pp.m, pp.m * pp.m + 2 * pp.q}});
        if (pp.q == 2) {
            // the lower equality class is NOT unique at q=2: five classes have 1 point
            REQUIRE(at_lo ==
                    std::set<SurfacePair>{{-4, 8}, {-3, 5}, {-2, 2}, {-1, -1}, {0, -4}});
        } else {
            REQUIRE(at_lo == std::set<SurfacePair>{{-2 * pp.m, pp.m * pp.m + 2 * pp.q}});
        }
    }
}

TEST_CASE("realizable_surface") {
    CHECK(realizable_surface(factor_prime_power(4), 5, 13) == Realizability::Yes);
    CHECK(realizable_surface(factor_prime_power(4), 5, 14) == Realizability::Unknown);
    CHECK(realizable_surface(factor_prime_power(2), 5, 0) == Realizability::No);
}

TEST_CASE("jacobian_obstructions") {
    using O = ObstructionRule;
    auto rules = [](const Integer& q, long a1, long a2) {
        return jacobian_obstructions(factor_prime_power(q), a1, a2);
    };
    CHECK(rules(4, 5, 14) == std::vector<O>{O::ConsecutiveIntegerSplit});
    CHECK(rules(4, -5, 12) == std::vector<O>{O::AlmostOrdinarySqfree});
    CHECK(rules(4, 5, 12) == std::vector<O>{O::AlmostOrdinarySqfree});
    CHECK(rules(9, -10, 42) == std::vector<O>{O::AlmostOrdinarySqfree});
    // the [m, m-1] class has disc 1, so the consecutive-integer rule fires too
    CHECK(rules(13, 13, 68) == std::vector<O>{O::ConsecutiveIntegerSplit, O::SerreMM1});
    CHECK(rules(13, -13, 68) == std::vector<O>{O::ConsecutiveIntegerSplit, O::SerreMM1});
    CHECK(rules(2, 3, 5).empty());
    CHECK(to_string(O::SerreMM1) == "SERRE_M_M1");
    CHECK_THROWS_AS(rules(2, 5, 0), std::invalid_argument);
}

TEST_CASE("predict_Nk examples and recurrences") {
    auto pp2 = factor_prime_power(2);
    CHECK(predict_Nk(pp2, 3, 5, 1) == 6);
    CHECK(predict_Nk(pp2, 3, 5, 2) == 6);
    CHECK(predict_Nk(pp2, 3, 5, 3) == 9);
    CHECK(predict_Nk(factor_prime_power(4), 5, 14, 5) == 1000);  // split type [3, 2]
    CHECK_THROWS_AS(predict_Nk(pp2, 3, 5, 0), std::domain_error);
    CHECK_THROWS_AS(predict_Nk(pp2, 3, 5, 9), std::domain_error);
    CHECK_THROWS_AS(predict_Nk(pp2, 5, 0, 1), std::invalid_argument);
}

TEST_CASE("predict_Nk agrees with the split-type power-sum oracle") {
    for (const auto& pp : prime_powers_upto(9)) {
        for (const auto& [pair, count] : enumerate_admissible(pp, EnumOrder::Ascending)) {
            Integer disc = real_weil_poly(pp, pair.a1, pair.a2).disc();
            if (!is_perfect_square(disc)) continue;
            Integer s = isqrt(disc);
            if ((pair.a1 + s) % 2 != 0) continue;  // same parity always holds, but be safe
            Integer x1 = (pair.a1 + s) / 2, x2 = (pair.a1 - s) / 2;
            for (unsigned k = 1; k <= 8; ++k) {
                Integer qk;
                mpz_pow_ui(qk.get_mpz_t(), pp.q.get_mpz_t(), k);
                REQUIRE(predict_Nk(pp, pair.a1, pair.a2, k) ==
                        qk + 1 - split_power_sum(pp.q, x1, x2, k));
            }
        }
    }
}

TEST_CASE("N1/N2 reconstruction identities") {
    for (const auto& pp : prime_powers_upto(13)) {
        for (const auto& [pair, count] : enumerate_admissible(pp, EnumOrder::Ascending)) {
            Integer n1 = predict_Nk(pp, pair.a1, pair.a2, 1);
            Integer n2 = predict_Nk(pp, pair.a1, pair.a2, 2);
            REQUIRE(n1 - (pp.q + 1) == pair.a1);
            Integer num = pair.a1 * pair.a1 + n2 - pp.q * pp.q - 1 - 4 * pp.q;
            REQUIRE(num % 2 == 0);  // parity invariant
            REQUIRE(2 * pp.q + num / 2 == pair.a2);
            // jacobian-order identity used by the curve census
            REQUIRE((n1 * n1 + n2) / 2 - pp.q == count);
        }
    }
}

TEST_CASE("type_string") {
    auto pp13 = factor_prime_power(13);
    CHECK(type_string(pp13, 13, 68) == "[7, 6]");
    CHECK(type_string(pp13, 12, 60) == "[6+sqrt(2), 6-sqrt(2)]");  // formal row, inadmissible
    CHECK(type_string(factor_prime_power(2), 3, 5) == "[(3+sqrt(5))/2, (3-sqrt(5))/2]");
    CHECK(type_string(factor_prime_power(2), 0, -4) == "[2*sqrt(2), -2*sqrt(2)]");
    CHECK(type_string(factor_prime_power(4), 8, 24) == "[4, 4]");
    CHECK_THROWS_AS(type_string(factor_prime_power(2), 0, 5), std::invalid_argument);
}

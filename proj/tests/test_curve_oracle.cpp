#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "jacext/curve_oracle.hpp"
#include "jacext/extremal.hpp"

using namespace jacext;

namespace {

Genus2Model model_from_labels(long q, long h_label, long f_label) {
    Genus2Model m;
    for (int i = 0; i < 4; ++i) {
        m.h[i] = static_cast<int>(h_label % q);
        h_label /= q;
    }
    for (int i = 0; i < 7; ++i) {
        m.f[i] = static_cast<int>(f_label % q);
        f_label /= q;
    }
    return m;
}

// All accepted genus-2 invariants, by the public per-model API (independently
// of the sweep driver).
std::vector<CurveInvariants> walk_genus2(const OracleContext& ctx) {
    const long q = ctx.base().order();
    std::vector<CurveInvariants> out;
    long f_space = 1;
    for (int i = 0; i < 7; ++i) f_space *= q;
    const bool char2 = ctx.base().p() == 2;
    long h_space = 1;
    if (char2) {
        for (int i = 0; i < 4; ++i) h_space *= q;
    }
    for (long h = char2 ? 1 : 0; h < h_space; ++h) {
        for (long f = 0; f < f_space; ++f) {
            Genus2Model m = model_from_labels(q, h, f);
            if (!ctx.accept_genus2(m)) continue;
            out.push_back(ctx.invariants_genus2(m));
        }
    }
    return out;
}

struct EnvThreads {
    explicit EnvThreads(const char* v) { setenv("EXTREMAL_THREADS", v, 1); }
    ~EnvThreads() { unsetenv("EXTREMAL_THREADS"); }
};

bool extrema_equal(const EmpiricalExtrema& a, const EmpiricalExtrema& b) {
    return a.model_count == b.model_count && a.min_jac == b.min_jac && a.max_jac == b.max_jac &&
           a.min_n1 == b.min_n1 && a.max_n1 == b.max_n1 && a.min_jac_row == b.min_jac_row &&
           a.max_jac_row == b.max_jac_row && a.min_n1_row == b.min_n1_row &&
           a.max_n1_row == b.max_n1_row;
}

}  // namespace

TEST_CASE("census header and CSV round trip") {
    CHECK(census_header() == "q,h,f,N1,N2,a1,a2,jac");
    CensusRow row;
    row.q = 4;
    row.h = {2, 0, 0, 1};
    row.f = {0, 3, 1, 0, 0, 0, 0};
    row.n1 = 10;
    row.n2 = 18;
    row.a1 = 5;
    row.a2 = 13;
    row.jac = 55;
    std::string line = to_csv_line(row);
    CHECK(line == "4,2;0;0;1,0;3;1;0;0;0;0,10,18,5,13,55");
    CHECK(parse_census_line(line) == row);
    CHECK_THROWS_AS(parse_census_line("1,2,3"), std::invalid_argument);
}

TEST_CASE("elliptic counts and discriminant vs brute force") {
    auto spec2 = canonical_field_spec(2);
    // y^2 + y = x^3 + x + 1 and y^2 + y = x^3 + x
    CHECK(count_points_elliptic(spec2, EllipticModel{0, 0, 1, 1, 1}, CountingField::Base) == 1);
    CHECK(count_points_elliptic(spec2, EllipticModel{0, 0, 1, 1, 0}, CountingField::Base) == 5);
    CHECK(count_points_elliptic(spec2, EllipticModel{0, 0, 1, 1, 0},
                                CountingField::QuadraticExtension) == 5);
    CHECK_THROWS_AS(count_points_elliptic(spec2, EllipticModel{0, 0, 0, 0, 0}, CountingField::Base),
                    std::invalid_argument);

    // The b-quantity discriminant and the rational-singular-point scan agree
    // on every one of the q^5 models.
    for (long q : {2L, 3L}) {
        OracleContext ctx(canonical_field_spec(q));
        long singular = 0;
        for (int a1 = 0; a1 < q; ++a1)
            for (int a2 = 0; a2 < q; ++a2)
                for (int a3 = 0; a3 < q; ++a3)
                    for (int a4 = 0; a4 < q; ++a4)
                        for (int a6 = 0; a6 < q; ++a6) {
                            EllipticModel m{a1, a2, a3, a4, a6};
                            bool ns = ctx.elliptic_nonsingular(m);
                            REQUIRE(ns == !ctx.elliptic_singular_bruteforce(m));
                            singular += !ns;
                        }
        // exactly 1/q of all long Weierstrass models are singular
        REQUIRE(singular * q == q * q * q * q * q);
    }
}

TEST_CASE("genus-2 acceptance and per-model invariants") {
    auto spec2 = canonical_field_spec(2);
    auto spec3 = canonical_field_spec(3);
    auto spec4 = canonical_field_spec(4);

    // y^2 + y = x^5 over F2: affine 2 points, one at infinity
    Genus2Model x5{{1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}};
    CHECK(count_points_genus2(spec2, x5, CountingField::Base) == 3);
    CHECK(curve_invariants(spec2, x5).a1 == 0);

    // the F2-maximal class: (N1, N2) = (6, 6) -> (a1, a2, jac) = (3, 5, 19)
    Genus2Model max2{{1, 1, 0, 1}, {0, 1, 1, 0, 0, 0, 0}};
    CHECK(count_points_genus2(spec2, max2, CountingField::Base) == 6);
    CHECK(count_points_genus2(spec2, max2, CountingField::QuadraticExtension) == 6);
    auto inv2 = curve_invariants(spec2, max2);
    CHECK(inv2.a1 == 3);
    CHECK(inv2.a2 == 5);
    CHECK(inv2.jac == 19);
    PrimePower pp2 = factor_prime_power(2);
    CHECK(predict_Nk(pp2, 3, 5, 2) == 6);

    // a q=4 model in the class (a1, a2) = (5, 13), jacobian order 55
    Genus2Model max4{{2, 0, 0, 1}, {0, 3, 1, 0, 0, 0, 0}};
    CHECK(count_points_genus2(spec4, max4, CountingField::Base) == 10);
    CHECK(count_points_genus2(spec4, max4, CountingField::QuadraticExtension) == 18);
    auto inv4 = curve_invariants(spec4, max4);
    CHECK(inv4.a1 == 5);
    CHECK(inv4.a2 == 13);
    CHECK(inv4.jac == 55);

    OracleContext ctx2(spec2);
    OracleContext ctx3(spec3);
    // odd characteristic: h must be zero, f squarefree of degree 5 or 6
    CHECK_FALSE(ctx3.accept_genus2(Genus2Model{{1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}}));
    CHECK_FALSE(ctx3.accept_genus2(Genus2Model{{0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}}));  // deg 4
    CHECK_FALSE(ctx3.accept_genus2(Genus2Model{{0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1}}));  // x^6
    CHECK_FALSE(ctx3.accept_genus2(Genus2Model{{0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}}));  // x^5
    CHECK(ctx3.accept_genus2(Genus2Model{{0, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0}}));  // x^5 + x
    // characteristic 2: h = 0 never admissible, and the genus filter needs
    // max(2 deg h, deg f) in {5, 6}
    CHECK_FALSE(ctx2.accept_genus2(Genus2Model{{0, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0}}));
    CHECK_FALSE(ctx2.accept_genus2(Genus2Model{{1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}}));
    // second chart at u = 0: h3 = 0, h2 != 0 and f5^2 = f6 h2^2 is singular
    CHECK_FALSE(ctx2.accept_genus2(Genus2Model{{0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 1}}));
    // y^2 + x^2 y = x^5 is rejected too: (0, 0) is an affine singularity
    // (h, h', f' all vanish at x = 0); adding an x term clears it.
    CHECK_FALSE(ctx2.accept_genus2(Genus2Model{{0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0}}));
    CHECK(ctx2.accept_genus2(Genus2Model{{0, 0, 1, 0}, {0, 1, 0, 0, 0, 1, 0}}));

    Genus2Model bad{{0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1}};
    CHECK_THROWS_AS(count_points_genus2(spec3, bad, CountingField::Base), std::invalid_argument);
    CHECK_THROWS_AS(curve_invariants(spec3, bad), std::invalid_argument);
}

TEST_CASE("q=2 and q=3 sweeps match the closed forms") {
    for (long q : {2L, 3L}) {
        auto spec = canonical_field_spec(q);
        PrimePower pp = factor_prime_power(q);
        auto g2 = empirical_extrema(spec, 2);
        CHECK(g2.max_jac == extremal_g2_max(pp).value);
        CHECK(g2.min_jac == extremal_g2_min(pp).value);
        auto g1 = empirical_extrema(spec, 1);
        auto [j_max, j_min] = extremal_g1(pp);
        CHECK(g1.max_jac == j_max.value);
        CHECK(g1.min_jac == j_min.value);
        for (const CensusRow* row : {&g2.min_jac_row, &g2.max_jac_row, &g2.min_n1_row,
                                     &g2.max_n1_row}) {
            CHECK(row->jac == point_count(pp, row->a1, row->a2));
            CHECK(row->n1 == pp.q + 1 + row->a1);
            CHECK(parse_census_line(to_csv_line(*row)) == *row);
        }
    }

    auto e2 = empirical_extrema(canonical_field_spec(2), 2);
    CHECK(e2.model_count == 768);
    CHECK(e2.min_n1 == 0);
    CHECK(e2.max_n1 == 6);
    CHECK(to_csv_line(e2.max_jac_row) == "2,1;1;0;1,0;1;1;0;0;0;0,6,6,3,5,19");
    CHECK(to_csv_line(e2.min_jac_row) == "2,1;0;0;0,1;0;0;1;0;1;0,1,5,-2,2,1");

    auto e3 = empirical_extrema(canonical_field_spec(3), 2);
    CHECK(e3.model_count == 1296);
    CHECK(e3.min_n1 == 0);
    CHECK(e3.max_n1 == 8);
    CHECK(to_csv_line(e3.max_jac_row) == "3,0;0;0;0,1;0;1;0;1;0;1,8,14,4,10,36");
    CHECK(to_csv_line(e3.min_jac_row) == "3,0;0;0;0,2;1;1;1;0;1;2,0,10,-4,8,2");
}

TEST_CASE("q=3 jacobian orders among the optimal curves") {
    OracleContext ctx(canonical_field_spec(3));
    std::set<long> jacs;
    std::map<std::pair<long, long>, long> classes;
    for (const auto& inv : walk_genus2(ctx)) {
        ++classes[{inv.a1.get_si(), inv.a2.get_si()}];
        if (inv.n1 == 8) jacs.insert(inv.jac.get_si());
    }
    // N1 = 8 forces a1 = 4, where the admissible a2 are exactly {8, 9, 10}:
    // all three classes are realized and nothing else is (in particular no
    // curve reaches 33 = 26 + 7, since a2 = 7 would put a real Weil root at
    // -2 - sqrt(3), outside [-2*sqrt(3), 2*sqrt(3)]).
    CHECK(jacs == std::set<long>{34, 35, 36});

    // quadratic-twist symmetry of the attained class multiset (odd q)
    for (const auto& [pair, count] : classes) {
        auto it = classes.find({-pair.first, pair.second});
        REQUIRE(it != classes.end());
        REQUIRE(it->second == count);
    }
    // no attained class matches a non-jacobian obstruction rule
    PrimePower pp = factor_prime_power(3);
    for (const auto& [pair, count] : classes) {
        CHECK(jacobian_obstructions(pp, pair.first, pair.second).empty());
    }
}

TEST_CASE("q=4 sweep: extrema, attained classes, twists") {
    auto spec = canonical_field_spec(4);
    PrimePower pp = factor_prime_power(4);
    auto e4 = empirical_extrema(spec, 2);
    CHECK(e4.model_count == 2949120);
    CHECK(e4.max_jac == 55);
    CHECK(e4.min_jac == 5);
    CHECK(e4.max_jac == extremal_g2_max(pp).value);
    CHECK(e4.min_jac == extremal_g2_min(pp).value);
    CHECK(e4.min_n1 == 0);
    CHECK(e4.max_n1 == 10);
    CHECK(to_csv_line(e4.max_jac_row) == "4,2;0;0;1,0;3;1;0;0;0;0,10,18,5,13,55");
    CHECK(e4.max_jac_row.a1 == 5);
    CHECK(e4.max_jac_row.a2 == 13);

    OracleContext ctx(spec);
    std::map<std::pair<long, long>, long> classes;
    for (const auto& inv : walk_genus2(ctx)) ++classes[{inv.a1.get_si(), inv.a2.get_si()}];
    CHECK(classes.size() == 65);
    CHECK(classes.count({5, 13}) == 1);
    CHECK(classes.count({-5, 13}) == 1);  // the Artin-Schreier twist of the maximal class
    for (const auto& [pair, count] : classes) {
        auto it = classes.find({-pair.first, pair.second});
        REQUIRE(it != classes.end());
        REQUIRE(it->second == count);
        REQUIRE(jacobian_obstructions(pp, pair.first, pair.second).empty());
    }
}

TEST_CASE("q=5 sweep: extrema and attained classes") {
    auto spec = canonical_field_spec(5);
    PrimePower pp = factor_prime_power(5);
    auto e5 = empirical_extrema(spec, 2);
    CHECK(e5.model_count == 60000);
    CHECK(e5.max_jac == 81);
    CHECK(e5.min_jac == 7);
    CHECK(e5.max_jac == extremal_g2_max(pp).value);
    CHECK(e5.min_jac == extremal_g2_min(pp).value);
    CHECK(e5.max_n1 == 12);
    CHECK(to_csv_line(e5.max_jac_row) == "5,0;0;0;0,4;0;3;0;1;0;1,12,28,6,19,81");
    CHECK(to_csv_line(e5.min_jac_row) == "5,0;0;0;0,3;1;4;1;1;0;2,0,24,-6,17,7");
    CHECK(e5.max_jac_row.a1 == 6);   // (2m-2, (m-1)^2 + 2q) = (6, 19)
    CHECK(e5.max_jac_row.a2 == 19);
    CHECK(e5.min_jac_row.a1 == -6);  // (-2m+2, m^2 - 2m - 1 + 2q) = (-6, 17)
    CHECK(e5.min_jac_row.a2 == 17);

    OracleContext ctx(spec);
    std::map<std::pair<long, long>, long> classes;
    for (const auto& inv : walk_genus2(ctx)) ++classes[{inv.a1.get_si(), inv.a2.get_si()}];
    for (const auto& [pair, count] : classes) {
        auto it = classes.find({-pair.first, pair.second});
        REQUIRE(it != classes.end());
        REQUIRE(it->second == count);
        REQUIRE(jacobian_obstructions(pp, pair.first, pair.second).empty());
    }
}

TEST_CASE("q=7 sweep matches the closed forms") {
    PrimePower pp = factor_prime_power(7);
    auto e7 = empirical_extrema(canonical_field_spec(7), 2);
    CHECK(e7.model_count == 691488);
    CHECK(e7.max_jac == extremal_g2_max(pp).value);  // 144
    CHECK(e7.min_jac == extremal_g2_min(pp).value);  // 15
    CHECK(e7.max_jac == 144);
    CHECK(e7.min_jac == 15);
    CHECK(e7.max_n1 == 16);
}

TEST_CASE("genus-1 sweeps: censuses, extrema, attained traces") {
    std::ostringstream oss;
    CHECK(emit_census(canonical_field_spec(2), 1, oss) == 16);
    CHECK(oss.str() ==
          "q,h,f,N1,N2,a1,a2,jac\n"
          "2,1;0,0;0;0;1,3,9,0,2,3\n"
          "2,1;0,1;0;0;1,3,9,0,2,3\n"
          "2,1;0,0;1;0;1,5,5,2,2,5\n"
          "2,1;0,1;1;0;1,1,5,-2,2,1\n"
          "2,1;0,0;0;1;1,5,5,2,2,5\n"
          "2,1;0,1;0;1;1,1,5,-2,2,1\n"
          "2,1;0,0;1;1;1,3,9,0,2,3\n"
          "2,1;0,1;1;1;1,3,9,0,2,3\n"
          "2,0;1,1;0;0;1,4,8,1,2,4\n"
          "2,0;1,0;1;0;1,4,8,1,2,4\n"
          "2,0;1,1;0;1;1,2,8,-1,2,2\n"
          "2,0;1,0;1;1;1,2,8,-1,2,2\n"
          "2,1;1,1;0;0;1,2,8,-1,2,2\n"
          "2,1;1,1;1;0;1,2,8,-1,2,2\n"
          "2,1;1,0;0;1;1,4,8,1,2,4\n"
          "2,1;1,0;1;1;1,4,8,1,2,4\n");

    for (long q : {2L, 3L, 4L, 5L, 8L, 9L}) {
        auto spec = canonical_field_spec(q);
        PrimePower pp = factor_prime_power(q);
        auto g1 = empirical_extrema(spec, 1);
        auto [j_max, j_min] = extremal_g1(pp);
        REQUIRE(g1.max_jac == j_max.value);
        REQUIRE(g1.min_jac == j_min.value);
        REQUIRE(g1.max_n1 == g1.max_jac);
        REQUIRE(g1.min_n1 == g1.min_jac);
        // q + 1 +/- m are both attained for these q (each satisfies e = 1,
        // e even, or p not dividing m; the first excluded case is q = 128,
        // far beyond enumeration range)
        Integer m = pp.m;
        REQUIRE(g1.max_jac == pp.q + 1 + m);
        REQUIRE(g1.min_jac == pp.q + 1 - m);
    }
    auto g1_5 = empirical_extrema(canonical_field_spec(5), 1);
    CHECK(g1_5.model_count == 2500);
    CHECK(to_csv_line(g1_5.max_jac_row) == "5,0;0,0;3;0;1,10,20,4,5,10");
}

TEST_CASE("thread count never changes the results") {
    for (long q : {2L, 3L}) {
        auto spec = canonical_field_spec(q);
        std::ostringstream base_census;
        EmpiricalExtrema base_ex;
        unsigned long long base_rows = 0;
        {
            EnvThreads env("1");
            base_rows = emit_census(spec, 2, base_census);
            base_ex = empirical_extrema(spec, 2);
        }
        for (const char* setting : {"5", "3", "not-a-number"}) {
            EnvThreads env(setting);
            std::ostringstream census;
            CHECK(emit_census(spec, 2, census) == base_rows);
            CHECK(census.str() == base_census.str());
            CHECK(extrema_equal(empirical_extrema(spec, 2), base_ex));
        }
    }
    {
        auto spec = canonical_field_spec(3);
        EnvThreads one("1");
        auto g1_seq = empirical_extrema(spec, 1);
        EnvThreads many("7");
        CHECK(extrema_equal(empirical_extrema(spec, 1), g1_seq));
    }
}

TEST_CASE("domain errors and sink failures") {
    auto spec2 = canonical_field_spec(2);
    CHECK_THROWS_AS(empirical_extrema(spec2, 3), std::domain_error);
    CHECK_THROWS_AS(empirical_extrema(spec2, 0), std::domain_error);
    CHECK_THROWS_AS(empirical_extrema(canonical_field_spec(8), 2), std::domain_error);
    CHECK_THROWS_AS(empirical_extrema(canonical_field_spec(9), 2), std::domain_error);
    std::ostringstream sink;
    CHECK_THROWS_AS(emit_census(spec2, 4, sink), std::domain_error);

    std::ostringstream bad;
    bad.setstate(std::ios::failbit);
    CHECK_THROWS_AS(emit_census(spec2, 1, bad), std::ios_base::failure);

    // census row count matches the sweep's model count
    std::ostringstream census;
    CHECK(emit_census(spec2, 2, census) == empirical_extrema(spec2, 2).model_count);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "turan/bounds.hpp"

using namespace turan;

namespace {

Rational rat(long p, long q) { return Rational(p, q); }

DensityInterval random_interval(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 400);
    long a = num(rng), b = num(rng);
    Rational lo(std::min(a, b), 401);
    Rational hi(std::max(a, b), 401);
    return DensityInterval(lo, hi);
}

}  // namespace

TEST_CASE("kth root enclosure") {
    auto [lo, hi] = kth_root_enclosure(rat(4, 9), 2);
    CHECK(lo == rat(2, 3));
    CHECK(hi == rat(2, 3));

    auto [l2, h2] = kth_root_enclosure(Rational(2), 2);
    CHECK(l2 < h2);
    CHECK(l2 * l2 <= 2);
    CHECK(h2 * h2 >= 2);
    CHECK(h2 - l2 <= Rational(1, 1000000000000LL));

    auto [l3, h3] = kth_root_enclosure(rat(27, 8), 3);
    CHECK(l3 == rat(3, 2));
    CHECK(h3 == rat(3, 2));

    CHECK_THROWS_AS(kth_root_enclosure(Rational(-1), 2), std::invalid_argument);
}

TEST_CASE("combine_sequence point values") {
    DensityInterval one = DensityInterval::point(1);
    DensityInterval quarter = combine_sequence({one, one}, 3);
    CHECK(quarter.lo == rat(1, 4));
    CHECK(quarter.hi == rat(1, 4));

    DensityInterval x(rat(1, 3), rat(1, 2));
    CHECK(combine_sequence({x}, 3) == x);  // one-term identity

    // m copies of [1,1] collapse to 1/m^2
    for (int m = 1; m <= 6; ++m) {
        std::vector<DensityInterval> parts(m, point_t3_of_2());
        DensityInterval out = combine_sequence(parts, 3);
        CHECK(out.lo == Rational(1, Int(m) * m));
        CHECK(out.hi == out.lo);
    }

    CHECK_THROWS_AS(combine_sequence({DensityInterval(0, 1)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(combine_sequence({x}, 2), std::invalid_argument);
}

TEST_CASE("combine_sequence is monotone: widening inputs widens the output") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4);
        int r = 3 + static_cast<int>(rng() % 2);
        std::vector<DensityInterval> narrow, wide;
        for (int i = 0; i < m; ++i) {
            DensityInterval iv = random_interval(rng);
            narrow.push_back(iv);
            Rational lo = iv.lo * rat(9, 10);
            Rational hi = iv.hi + (Rational(1) - iv.hi) / 7;
            wide.push_back(DensityInterval(lo, hi));
        }
        DensityInterval a = combine_sequence(narrow, r);
        DensityInterval b = combine_sequence(wide, r);
        CAPTURE(trial);
        CHECK(b.lo <= a.lo);
        CHECK(a.hi <= b.hi);
    }
}

TEST_CASE("combine_sequence associativity") {
    // exact on perfect powers
    DensityInterval one = DensityInterval::point(1);
    DensityInterval quarter = DensityInterval::point(rat(1, 4));
    DensityInterval direct = combine_sequence({one, one, quarter}, 3);
    DensityInterval two_step = combine_sequence({combine_sequence({one, one}, 3), quarter}, 3);
    CHECK(direct == two_step);

    // within outward rounding otherwise
    std::mt19937 rng(11);
    Rational slack(1, 1000000000);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<DensityInterval> parts{random_interval(rng), random_interval(rng),
                                           random_interval(rng)};
        DensityInterval d = combine_sequence(parts, 3);
        DensityInterval t = combine_sequence(
            {combine_sequence({parts[0], parts[1]}, 3), parts[2]}, 3);
        CAPTURE(trial);
        CHECK(boost::multiprecision::abs(d.lo - t.lo) <= slack);
        CHECK(boost::multiprecision::abs(d.hi - t.hi) <= slack);
    }
}

TEST_CASE("de Caen lower bound") {
    CHECK(de_caen_lower(3, 4) == rat(1, 6));
    CHECK(de_caen_lower(3, 2) == 1);
    CHECK(de_caen_lower(4, 6) == rat(1, 20));
    CHECK_THROWS_AS(de_caen_lower(3, 1), std::invalid_argument);
}

TEST_CASE("Sidorenko upper bound") {
    CHECK(sidorenko_upper(3, 4).value == rat(1, 4));
    CHECK(sidorenko_upper(3, 4).constructive);
    CHECK(sidorenko_upper(3, 2).value == 1);
    CHECK(sidorenko_upper(3, 6).value == rat(1, 9));
    CHECK(sidorenko_upper(3, 6).constructive);
    CHECK_FALSE(sidorenko_upper(3, 5).constructive);
    CHECK_FALSE(sidorenko_upper(4, 7).constructive);
    CHECK(sidorenko_upper(4, 9).constructive);
}

TEST_CASE("sandwich consistency up to l = 1000") {
    for (int l = 2; l <= 1000; ++l) {
        CHECK(de_caen_lower(3, l) <= sidorenko_upper(3, l).value);
    }
}

TEST_CASE("t_interval") {
    DensityInterval t35 = t_interval(3, 5);
    CHECK(t35.lo == rat(1, 6));
    CHECK(t35.hi == rat(1, 4));

    DensityInterval t34 = t_interval(3, 4);
    CHECK(t34.lo == rat(438334, 1000000));
    CHECK(t34.hi == rat(4, 9));

    DensityInterval t33 = t_interval(3, 3);
    CHECK(t33.lo == 1);
    CHECK(t33.hi == 1);

    CHECK_THROWS_AS(t_interval(3, 2), std::invalid_argument);
}

TEST_CASE("3-graph limit closed forms") {
    CHECK(t3_limit_odd(1) == 1);
    CHECK(t3_limit_odd(2) == rat(1, 4));
    CHECK(t3_limit_odd(3) == rat(1, 9));

    DensityInterval t34 = t_interval(3, 4);
    CHECK(t3_limit_even(1, t34) == t34);

    DensityInterval even2 = t3_limit_even(2, DensityInterval::point(rat(4, 9)));
    CHECK(even2.lo == rat(4, 25));
    CHECK(even2.hi == rat(4, 25));

    DensityInterval enc = t3_limit_even(2, t34);
    CHECK(enc.lo >= rat(158, 1000));
    CHECK(enc.hi <= rat(161, 1000));
    CHECK(enc.lo < enc.hi);
}

TEST_CASE("t_limit_components all-2 sequences are uniquely optimal") {
    for (int m = 1; m <= 6; ++m) {
        int k = 2 * m + 1;
        BoundReport rep = t_limit_components(3, k, m, default_density_table(3, k - 1));
        CAPTURE(m);
        CHECK(rep.interval.lo == Rational(1, Int(m) * m));
        CHECK(rep.interval.hi == rep.interval.lo);
        REQUIRE(rep.minimizers.size() == 1);
        CHECK(rep.minimizers[0].entries() == std::vector<int>(m, 2));
    }
}

TEST_CASE("t_limit_components even case goes through {3, 2, ..., 2}") {
    BoundReport rep = t_limit_components(3, 6, 2, default_density_table(3, 5));
    DensityInterval expect = t3_limit_even(2, t_interval(3, 4));
    CHECK(rep.interval.lo == expect.lo);
    CHECK(rep.interval.hi == expect.hi);
    REQUIRE(rep.minimizers.size() == 1);
    CHECK(rep.minimizers[0].entries() == std::vector<int>{2, 3});
}

TEST_CASE("t_limit_components reports overlapping candidates as intervals") {
    // r = 4, k = 7, m = 2: {3,3} gives exactly 1/8 but {1,5} cannot be
    // excluded, so the result stays an interval with two candidates.
    BoundReport rep = t_limit_components(4, 7, 2, default_density_table(4, 6));
    CHECK(rep.interval.lo == rat(1, 10));
    CHECK(rep.interval.hi == rat(1, 8));
    REQUIRE(rep.minimizers.size() == 2);
    CHECK(rep.minimizers[0].entries() == std::vector<int>{1, 5});
    CHECK(rep.minimizers[1].entries() == std::vector<int>{3, 3});
}

TEST_CASE("average lemma chain") {
    for (int l = 2; l <= 50; ++l) {
        CAPTURE(l);
        CHECK(average_lemma_check(l).pass);
    }
    CHECK_THROWS_AS(average_lemma_check(1), std::invalid_argument);
}

TEST_CASE("max components") {
    CHECK(max_components(5, 3) == 2);
    CHECK(max_components(4, 3) == 1);
    CHECK(max_components(7, 3) == 3);
    CHECK_THROWS_AS(max_components(3, 3), std::invalid_argument);
}

TEST_CASE("jensen examples") {
    JensenReport eq = jensen_check({1, 1}, {0.5, 0.5}, 3);
    CHECK(eq.lhs == doctest::Approx(0.25));
    CHECK(eq.rhs == doctest::Approx(0.25));
    CHECK(eq.holds);
    CHECK(eq.p_star[0] == doctest::Approx(0.5));

    JensenReport single = jensen_check({3.7}, {1.0}, 4);
    CHECK(single.lhs == doctest::Approx(3.7));
    CHECK(single.rhs == doctest::Approx(3.7));

    JensenReport strict = jensen_check({1, 4}, {0.5, 0.5}, 3);
    CHECK(strict.lhs == doctest::Approx(5.0 / 8));
    CHECK(strict.rhs == doctest::Approx(4.0 / 9));
    CHECK(strict.holds);

    CHECK_THROWS_AS(jensen_check({1, 1}, {0.5, 0.6}, 3), std::invalid_argument);
    CHECK_THROWS_AS(jensen_check({-1}, {1.0}, 3), std::invalid_argument);
}

TEST_CASE("binomial shift comparison") {
    CHECK(binom_shift_compare(4, 4, 3));
    CHECK(binom_shift_compare(4, 5, 3));
    CHECK(binom_shift_compare(5, 5, 2));
    CHECK_THROWS_AS(binom_shift_compare(3, 3, 3), std::invalid_argument);
    for (int r = 2; r < 20; ++r) {
        for (int a = r + 1; a <= 20; ++a) {
            for (int b = a; b <= 20; ++b) CHECK(binom_shift_compare(a, b, r));
        }
    }
}

TEST_CASE("two-part minimum edge count") {
    CHECK(thm_max_value(6) == 2);
    CHECK(thm_max_value(7) == 5);
    CHECK(thm_max_value(8) == 8);
    CHECK(thm_max_value(9) == 14);
    CHECK(thm_max_value(12) == 40);
    CHECK_THROWS_AS(thm_max_value(5), std::invalid_argument);
}

TEST_CASE("two-part density approaches 1/4 from below") {
    // value/C(n,3) increases to the limit 1/4 and stays within 10/n of it
    for (int n = 6; n <= 200; ++n) {
        Rational density(Int(thm_max_value(n)), binomial_int(n, 3));
        CAPTURE(n);
        CHECK(density <= rat(1, 4));
        CHECK(rat(1, 4) - density <= Rational(10, n));
    }
}

TEST_CASE("bound report JSON") {
    BoundReport rep = t_limit_components(3, 5, 2, default_density_table(3, 4));
    nlohmann::json j = rep.to_json();
    CHECK(j.at("quantity") == "t(3,5;2)");
    CHECK(j.at("lo") == "1/4");
    CHECK(j.at("hi") == "1/4");
    CHECK(j.at("derivation").is_array());
    CHECK(!j.at("derivation").empty());
    CHECK(j.at("minimizers").size() == 1);

    nlohmann::json t = t_interval_report(3, 4).to_json();
    CHECK(t.at("lo") == "219167/500000");
    CHECK(t.at("hi") == "4/9");
}

TEST_CASE("rational strings") {
    CHECK(rational_to_string(rat(438334, 1000000)) == "219167/500000");
    CHECK(rational_to_string(Rational(1)) == "1/1");
    CHECK(rational_from_string("7/3") == rat(7, 3));
    CHECK(rational_from_string("5") == Rational(5));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x/y"), ParseError);
}

#include <doctest.h>

#include "oracles.hpp"
#include "qsign/qproducts.hpp"
#include "qsign/signpattern.hpp"

using namespace qsign;

namespace {

Series expand(const char *spec, std::size_t T) { return eta_quotient(parse_spec(spec), T); }

} // namespace

TEST_CASE("sign classes and patterns")
{
    for (char c : std::string("+-0?")) {
        CHECK(to_char(sign_class_from_char(c)) == c);
    }
    CHECK_THROWS_AS(sign_class_from_char('x'), InvalidParameter);

    const auto p = SignPattern::from_string("+0-?", 3);
    CHECK(p.modulus == 4);
    CHECK(p.onset == 3);
    CHECK(p.class_string() == "+0-?");
    CHECK(p.class_of(6) == SignClass::Negative);
    CHECK(p.admits(0, 1));
    CHECK_FALSE(p.admits(0, 0));
    CHECK(p.admits(1, 0));
    CHECK_FALSE(p.admits(1, -1));
    CHECK(p.admits(3, -1));
    CHECK(p.admits(3, 1));
    CHECK_THROWS_AS(SignPattern::from_string("", -1), InvalidParameter);
}

TEST_CASE("primality by trial division")
{
    std::vector<long> primes;
    for (long n = -3; n < 60; ++n) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    CHECK(primes == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("predicted patterns for (q^i;q^i)/(q^p;q^p)")
{
    const auto c52 = predict_theorem1(5, 2);
    CHECK(c52.pattern.class_string() == "+0-0-");
    CHECK(c52.N == -1);
    CHECK(c52.pattern.onset == -1);

    const auto c72 = predict_theorem1(7, 2);
    CHECK(c72.pattern.class_string() == "+0-+-00");
    CHECK(c72.N == 3);

    CHECK(predict_theorem1(5, 3).pattern.class_string() == "+-0-0");
    CHECK(predict_theorem1(5, 3).N == 1);
    CHECK(predict_theorem1(5, 4).pattern.class_string() == "+00--");
    CHECK(predict_theorem1(5, 4).N == 3);

    CHECK(c52.L_values == std::vector<long>{0, 2, 1, 12, 5});
    CHECK(c52.s_values == std::vector<int>{0, 1, 1, 1, 2});
    CHECK(c52.residue_map == std::vector<long>{0, 4, 2, 4, 0});
    CHECK(to_string(theorem1_spec(5, 2)) == to_string(parse_spec("2^1 5^-1")));

    CHECK_THROWS_AS(predict_theorem1(9, 2), InvalidParameter);
    CHECK_THROWS_AS(predict_theorem1(3, 2), InvalidParameter);
    CHECK_THROWS_AS(predict_theorem1(7, 14), InvalidParameter);
    CHECK_THROWS_AS(predict_theorem1(7, 1), InvalidParameter);
}

TEST_CASE("verify_pattern")
{
    const Series s = expand("2^1 5^-1", 5000);
    CHECK(verify_pattern(s, predict_theorem1(5, 2).pattern, 5000).passed());
    CHECK(verify_pattern(s, SignPattern::from_string("?", -1), 5000).passed());
    CHECK(verify_pattern(pochhammer(1, 1, 300), SignPattern::from_string("???", -1), 300).passed());

    const auto bad = verify_pattern(s, SignPattern::from_string("-0+0+", -1), 100);
    REQUIRE_FALSE(bad.passed());
    CHECK(bad.violations.front().n == 0);
    CHECK(bad.violations.front().expected == SignClass::Negative);
    CHECK(bad.violations.front().actual == 1);
    CHECK(bad.horizon == 100);

    CHECK_THROWS_AS(verify_pattern(s, predict_theorem1(5, 2).pattern, 5001), BeyondPrecision);
}

TEST_CASE("sharpness witness")
{
    const Series s = expand("2^1 7^-1", 200);
    const auto cert = predict_theorem1(7, 2);
    const auto w = sharpness_witness(s, cert.pattern);
    REQUIRE(w.has_value());
    CHECK(*w == 3);
    CHECK_FALSE(sharpness_witness(expand("2^1 5^-1", 50), predict_theorem1(5, 2).pattern).has_value());
}

TEST_CASE("detect_pattern")
{
    const auto d = detect_pattern(expand("2^1 5^-1", 2000), 5, 2000);
    CHECK(d.pattern.class_string() == "+0-0-");
    CHECK(d.pattern.onset == -1);
    CHECK(d.horizon == 2000);
    CHECK(d.sporadic_zeros.empty());

    CHECK(detect_pattern(pochhammer(1, 1, 2000), 1, 2000).pattern.class_string() == "?");

    const auto a = detect_pattern(expand("2^5 7^-1", 2000), 7, 2000);
    CHECK(a.pattern.class_string() == "+-?-??+");

    const auto r = detect_pattern(expand("2.5^1 3.5^1 1.5^-1 4.5^-1", 2000), 5, 2000);
    CHECK(r.pattern.class_string() == "++---");
    CHECK(r.pattern.onset == 9);

    CHECK_THROWS_AS(detect_pattern(expand("1^1", 10), 3, 11), BeyondPrecision);
}

TEST_CASE("sign census")
{
    const auto rows = sign_census(Series(20), 3, 7);
    REQUIRE(rows.size() == 3);
    for (const auto &r : rows) {
        CHECK(r.negative == 0);
        CHECK(r.zero == 7);
        CHECK(r.positive == 0);
    }

    const Series s = Series::from_ints({1, -1, 0, 2, 0, -3});
    const auto two = sign_census(s, 2, 3);
    CHECK(two[0] == CensusRow{0, 0, 2, 1});
    CHECK(two[1] == CensusRow{1, 2, 0, 1});
    CHECK_THROWS_AS(sign_census(s, 2, 4), BeyondPrecision);
}

TEST_CASE("census of small products against a naive count")
{
    const std::size_t m = 7, K = 40;
    const auto poly = oracle::product({{2, 2, 5}, {7, 7, -1}}, m * K - 1);
    const auto rows = sign_census(expand("2^5 7^-1", m * K - 1), m, K);
    for (std::size_t r = 0; r < m; ++r) {
        long neg = 0, zero = 0, pos = 0;
        for (std::size_t k = 0; k < K; ++k) {
            const int s = oracle::sign(poly[r + k * m]);
            (s < 0 ? neg : s == 0 ? zero : pos) += 1;
        }
        CHECK(rows[r] == CensusRow{static_cast<long>(r), neg, zero, pos});
    }
}

TEST_CASE("vanishing predicate")
{
    CHECK(vanishing_predicate(14));
    CHECK_FALSE(vanishing_predicate(5));
    CHECK_FALSE(vanishing_predicate(2));
    CHECK(vanishing_predicate(11));
    CHECK_FALSE(vanishing_predicate(98));  // 2 * 7^2
    CHECK(vanishing_predicate(686));       // 2 * 7^3
    CHECK_THROWS_AS(vanishing_predicate(0), InvalidParameter);
}

TEST_CASE("onset bounds of the (p, i) table are attained")
{
    const std::size_t T = 400;
    for (long p : {5L, 7L, 11L, 13L}) {
        for (long i : {2L, 3L, 4L}) {
            CAPTURE(p);
            CAPTURE(i);
            const auto cert = predict_theorem1(p, i);
            const auto w = sharpness_witness(eta_quotient(theorem1_spec(p, i), T), cert.pattern);
            if (cert.N < 0) {
                CHECK_FALSE(w.has_value());
            } else {
                REQUIRE(w.has_value());
                CHECK(*w == cert.N);
            }
        }
    }
}

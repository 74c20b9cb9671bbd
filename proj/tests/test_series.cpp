#include <doctest.h>

#include "oracles.hpp"
#include "qsign/series.hpp"

using namespace qsign;

namespace {

Series S(std::initializer_list<long> c) { return Series::from_ints(c); }

} // namespace

TEST_CASE("addition cancels and has an identity")
{
    CHECK(S({1, -1}) + S({0, 1}) == S({1, 0}));
    CHECK(S({1, -1, -1}) + S({0, 1, 1}) == S({1, 0, 0}));
    const Series x = S({3, -2, 7});
    CHECK(x + Series(2) == x);
    CHECK(x - x == Series(2));
    CHECK(-x == S({-3, 2, -7}));
    CHECK(scale(x, 2) == S({6, -4, 14}));
}

TEST_CASE("binary operations truncate to the smaller precision")
{
    const Series a = S({1, 1, 1, 1, 1});
    const Series b = S({1, 1});
    CHECK((a + b).precision() == 1);
    CHECK((a * b).precision() == 1);
    CHECK((a * b) == S({1, 2}));
}

TEST_CASE("multiplication")
{
    CHECK(S({1, -1}).truncated(1) * S({1, 1, 1, 1}) == S({1, 0}));
    CHECK(S({1, -1, 0, 0}) * S({1, 1, 1, 1}) == S({1, 0, 0, 0}));
    const Series pent = S({1, -1, -1, 0, 0});
    CHECK(pent * pent == S({1, -2, -1, 2, 1}));
    // with the q^5 term present the square agrees through q^4
    const Series pent5 = S({1, -1, -1, 0, 0, 1});
    CHECK((pent5 * pent5).truncated(4) == S({1, -2, -1, 2, 1}));
    const Series x = S({2, 0, -5});
    CHECK(x * Series::one(2) == x);
}

TEST_CASE("inversion")
{
    CHECK(invert(S({1, -1, 0, 0, 0, 0})) == S({1, 1, 1, 1, 1, 1}));
    CHECK(invert(Series::one(4)) == Series::one(4));
    CHECK(invert(S({1, -1, -1, 0, 0, 1})) == S({1, 1, 2, 3, 5, 7}));
    CHECK(invert(S({-1, 1, 0})) == S({-1, -1, -1}));
    CHECK_THROWS_AS(invert(S({2, 1})), NonUnitConstantTerm);
    CHECK_THROWS_AS(invert(S({0, 1})), NonUnitConstantTerm);
}

TEST_CASE("inversion reproduces partition numbers")
{
    const std::size_t T = 300;
    std::vector<long> euler(T + 1, 0);
    for (long k = -20; k <= 20; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e <= static_cast<long>(T)) {
            euler[static_cast<std::size_t>(e)] = (k % 2 == 0) ? 1 : -1;
        }
    }
    std::vector<Integer> c(euler.begin(), euler.end());
    const Series inv = invert(Series(c));
    const auto p = oracle::partitions(T);
    for (std::size_t n = 0; n <= T; ++n) {
        CHECK(inv[n] == p[n]);
    }
    CHECK(inv[5] == 7);
    CHECK(inv[100] == Integer("190569292"));
    CHECK(inv[300] == Integer("9253082936723602"));
}

TEST_CASE("integer powers")
{
    const Series x = S({1, -1, 0, 0});
    CHECK(pow_int(S({5, 4, 3}), 0) == Series::one(2));
    CHECK(pow_int(x.truncated(2), 2) == S({1, -2, 1}));
    CHECK(pow_int(x, -1) == S({1, 1, 1, 1}));
    CHECK(pow_int(x, 3) == S({1, -3, 3, -1}));
    CHECK(pow_int(x, -2) == S({1, 2, 3, 4}));
    CHECK_THROWS_AS(pow_int(S({3, 1}), -1), NonUnitConstantTerm);
    CHECK_NOTHROW(pow_int(S({3, 1}), 2));
}

TEST_CASE("shift")
{
    CHECK(shift(Series::one(3), 3) == S({0, 0, 0, 1}));
    CHECK(shift(S({1, -1, 0, 0}), 2) == S({0, 0, 1, -1}));
    const Series x = S({4, 5, 6});
    CHECK(shift(x, 0) == x);
    CHECK(shift(x, 10) == Series(2));
}

TEST_CASE("dilate")
{
    CHECK(dilate(S({1, 1}), 3) == S({1, 0, 0, 1}));
    CHECK(dilate(S({1, -1, 1}), 2) == S({1, 0, -1, 0, 1}));
    const Series x = S({7, 8, 9});
    CHECK(dilate(x, 1) == x);
    CHECK(dilate(x, 3).precision() == 6);
    CHECK(dilate(x, 3, 4) == S({7, 0, 0, 8, 0}));
}

TEST_CASE("slice")
{
    CHECK(slice(S({1, 1, 1, 1}), 0, 2) == S({1, 1}));
    CHECK(slice(S({0, 1}), 1, 2) == S({1}));
    CHECK(slice(S({1, -2, 3, -4, 5}), 1, 3) == S({-2, 5}));
    CHECK(slice(S({1, -2, 3, -4, 5}), 0, 3).precision() == 1);
    CHECK(slice(S({1, -2, 3, -4, 5}), 2, 3) == S({3}));
    CHECK_THROWS_AS(slice(S({1, 2}), 2, 2), InvalidParameter);
    CHECK_THROWS_AS(slice(S({1, 2}), 0, 0), InvalidParameter);
    CHECK_THROWS_AS(slice(S({1, 2}), 3, 5), BeyondPrecision);
}

TEST_CASE("coefficient access")
{
    const Series x = S({1, -1});
    CHECK(x.coefficient(1) == -1);
    CHECK(x.sign_of(0) == 1);
    CHECK(x.sign_of(1) == -1);
    CHECK(S({0}).sign_of(0) == 0);
    CHECK_THROWS_AS(x.coefficient(2), BeyondPrecision);
    CHECK_THROWS_AS(x.sign_of(2), BeyondPrecision);
    CHECK(invert(S({1, -1, -1, 0, 0, 1, 0, 1})).coefficient(5) == 7);
}

TEST_CASE("sparse series")
{
    SparseSeries s;
    s.add_term(3, 2);
    s.add_term(0, 1);
    s.add_term(3, -2);
    s.add_term(7, -1);
    CHECK(s.terms().size() == 2);
    CHECK(s.constant_term() == 1);
    CHECK(s.to_dense(5) == S({1, 0, 0, 0, 0, 0}));
    CHECK(s.to_dense(7) == S({1, 0, 0, 0, 0, 0, 0, -1}));

    const Series x = S({1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(mul(x, s) == x * s.to_dense(7));
    CHECK(mul(div(x, s), s) == x);
}

TEST_CASE("in-place kernels agree with dense arithmetic")
{
    const Series x = S({1, 3, -2, 0, 5, 1, -1, 4});
    std::vector<Integer> c(x.coefficients().begin(), x.coefficients().end());
    kernel::mul_binomial(c, 3);
    CHECK(Series(c) == x * S({1, 0, 0, -1, 0, 0, 0, 0}));
    kernel::div_binomial(c, 3);
    CHECK(Series(c) == x);
}

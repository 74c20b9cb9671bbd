#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "qsign/closed_forms.hpp"
#include "qsign/dissection.hpp"
#include "qsign/qproducts.hpp"
#include "qsign/signpattern.hpp"
#include "support.hpp"

using namespace qsign;

namespace {

constexpr int trials = 60;

long uniform(std::mt19937_64 &g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

Series random_series(std::mt19937_64 &g, std::size_t T, long lo = -6, long hi = 6)
{
    std::vector<Integer> c(T + 1);
    for (auto &x : c) {
        x = uniform(g, lo, hi);
    }
    return Series(std::move(c));
}

Series random_unit_series(std::mt19937_64 &g, std::size_t T)
{
    auto s = random_series(g, T);
    std::vector<Integer> c(s.coefficients().begin(), s.coefficients().end());
    c[0] = uniform(g, 0, 1) ? 1 : -1;
    return Series(std::move(c));
}

Series from_poly(const oracle::Poly &p) { return Series(std::vector<Integer>(p.begin(), p.end())); }

} // namespace

TEST_CASE("ring laws on random series")
{
    auto g = test::rng("ring");
    for (int t = 0; t < trials; ++t) {
        const auto T = static_cast<std::size_t>(uniform(g, 0, 30));
        const Series x = random_series(g, T), y = random_series(g, T), z = random_series(g, T);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK((x - y) + y == x);

        oracle::Poly px(x.coefficients().begin(), x.coefficients().end());
        oracle::Poly py(y.coefficients().begin(), y.coefficients().end());
        CHECK(x * y == from_poly(oracle::mul(px, py)));
    }
}

TEST_CASE("inverse round trip")
{
    auto g = test::rng("invert");
    for (int t = 0; t < trials; ++t) {
        const auto T = static_cast<std::size_t>(uniform(g, 0, 40));
        const Series x = random_unit_series(g, T);
        CHECK(x * invert(x) == Series::one(T));
        CHECK(invert(invert(x)) == x);
    }
}

TEST_CASE("power additivity")
{
    auto g = test::rng("pow");
    for (int t = 0; t < trials; ++t) {
        const auto T = static_cast<std::size_t>(uniform(g, 0, 20));
        const Series x = random_unit_series(g, T);
        const long a = uniform(g, -4, 4), b = uniform(g, -4, 4);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(pow_int(x, a + b) == pow_int(x, a) * pow_int(x, b));
    }
}

TEST_CASE("dissection completeness round trip")
{
    auto g = test::rng("slice");
    for (int t = 0; t < trials; ++t) {
        const auto T = static_cast<std::size_t>(uniform(g, 0, 60));
        const auto m = static_cast<std::size_t>(uniform(g, 1, 9));
        const Series s = random_series(g, T);
        Series sum(T);
        for (std::size_t r = 0; r < m && r <= T; ++r) {
            sum = sum + shift(dilate(slice(s, r, m), m, T), r);
        }
        // slice, dilate and shift each keep only the precision they can vouch for,
        // so up to 2(m - 1) trailing coefficients drop out of the comparison
        CHECK(sum.precision() + 2 * (m - 1) >= T);
        CHECK(sum == s.truncated(sum.precision()));
    }
}

TEST_CASE("random eta quotients match the factor-by-factor oracle")
{
    auto g = test::rng("eta");
    const std::size_t T = 80;
    for (int t = 0; t < trials / 2; ++t) {
        EtaQuotientSpec spec;
        std::vector<oracle::Factor> factors;
        const long count = uniform(g, 1, 4);
        for (long k = 0; k < count; ++k) {
            const long b = uniform(g, 1, 12);
            const long a = uniform(g, 0, 1) ? b : uniform(g, 1, 12);
            long d = uniform(g, -3, 3);
            d = d == 0 ? 1 : d;
            spec.factors.push_back({a, b, d});
            factors.push_back({a, b, d});
        }
        CAPTURE(to_string(spec));
        CHECK(eta_quotient(spec, T) == from_poly(oracle::product(factors, T)));
    }
}

TEST_CASE("products of reciprocal factors have nonnegative coefficients")
{
    auto g = test::rng("lemma-reciprocal");
    const std::size_t T = 200;
    for (int t = 0; t < trials / 2; ++t) {
        EtaQuotientSpec spec;
        const long count = uniform(g, 1, 5);
        for (long k = 0; k < count; ++k) {
            spec.factors.push_back({uniform(g, 1, 15), uniform(g, 1, 15), -1});
        }
        CAPTURE(to_string(spec));
        const Series s = eta_quotient(spec, T);
        bool ok = true;
        for (std::size_t n = 1; n <= T; ++n) {
            ok = ok && s[n] >= 0;
        }
        CHECK(ok);
    }
}

TEST_CASE("dividing a nonnegative series in q^m by 1 - q^m gives coefficients >= 1 on multiples of m")
{
    auto g = test::rng("lemma-geometric");
    const std::size_t T = 200;
    for (int t = 0; t < trials / 2; ++t) {
        const auto m = static_cast<std::size_t>(uniform(g, 1, 12));
        std::vector<Integer> c(T + 1);
        c[0] = 1;
        for (std::size_t n = m; n <= T; n += m) {
            c[n] = uniform(g, 0, 1) ? 0 : uniform(g, 0, 9);
        }
        std::vector<Integer> d(T + 1);
        d[0] = 1;
        d[m] = -1;
        const Series s = Series(c) * invert(Series(d));
        bool ok = true;
        for (std::size_t n = 0; n <= T; n += m) {
            ok = ok && s[n] >= 1;
        }
        CHECK(ok);
    }
}

TEST_CASE("pentagonal sparsity")
{
    const Series s = pochhammer(1, 1, 2000);
    for (std::size_t n = 0; n <= 2000; ++n) {
        CHECK((s[n] >= -1 && s[n] <= 1));
    }
}

TEST_CASE("offset congruence for every admissible modulus")
{
    auto g = test::rng("congruence");
    std::vector<long> moduli{2, 4, 5, 7, 8, 10, 11, 13, 17, 19};
    while (moduli.size() < 30) {
        const long m = uniform(g, 2, 300);
        if (m % 3 != 0) {
            moduli.push_back(m);
        }
    }
    for (long m : moduli) {
        CAPTURE(m);
        for (long r = 0; r < m; ++r) {
            const long L = L_of(m, r);
            CHECK(L >= 0);
            CHECK(((L - (6 * r * r + r)) % m + m) % m == 0);
        }
    }
}

TEST_CASE("components sharing a residue mod a prime share a sign")
{
    auto g = test::rng("coherence");
    std::vector<long> primes{5, 7, 11, 13, 17, 19};
    while (primes.size() < 20) {
        const long p = uniform(g, 5, 1000);
        if (is_prime(p)) {
            primes.push_back(p);
        }
    }
    for (long p : primes) {
        CAPTURE(p);
        std::map<long, int> parity;
        for (long r = 0; r < p; ++r) {
            const int par = s_of(p, r) % 2;
            const auto [it, fresh] = parity.emplace((6 * r * r + r) % p, par);
            CHECK(it->second == par);
        }
    }
}

TEST_CASE("certificates for (q^i;q^i)/(q^p;q^p) hold past the onset bound")
{
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
        for (long i = 2; i <= 9; ++i) {
            if (i % p == 0) {
                continue;
            }
            CAPTURE(p);
            CAPTURE(i);
            const auto cert = predict_theorem1(p, i);
            for (long r = 0; r < p; ++r) {
                CHECK(((i * cert.L_values[static_cast<std::size_t>(r)] - cert.residue_map[static_cast<std::size_t>(r)]) % p +
                       p) % p == 0);
            }
            const auto T = static_cast<std::size_t>(std::max<long>(5000, 3 * cert.N));
            const Series s = eta_quotient(theorem1_spec(p, i), T);
            CHECK(verify_pattern(s, cert.pattern, T).passed());

            const auto d = detect_pattern(s, p, T);
            CHECK(d.pattern.classes == cert.pattern.classes);
            CHECK(d.pattern.onset <= cert.N + p);
        }
    }
}

TEST_CASE("(q;q)^9/(q^3;q^3)^i is positive on 2 mod 3 and negative on 1 mod 3")
{
    const std::size_t T = 3000;
    for (long i = 4; i <= 15; ++i) {
        CAPTURE(i);
        const Series s = eta_quotient(EtaQuotientSpec{{{1, 1, 9}, {3, 3, -i}}}, T);
        CHECK(verify_pattern(s, SignPattern::from_string("?-+", -1), T).passed());
    }
}

TEST_CASE("random quintuple dissections reassemble")
{
    auto g = test::rng("quintuple");
    for (int t = 0; t < 12; ++t) {
        const long M = uniform(g, 3, 16);
        const long j = uniform(g, 1, (M - 1) / 2);
        long m = uniform(g, 2, 20);
        if (m % 3 == 0) {
            ++m;
        }
        CAPTURE(M);
        CAPTURE(j);
        CAPTURE(m);
        CHECK(assemble(quintuple_components(M, j, m), 150) == quintuple_product(M, j, 150));
    }
}

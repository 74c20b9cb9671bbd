#include "qsign/dissection.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "qsign/closed_forms.hpp"
#include "qsign/qproducts.hpp"

namespace qsign {

namespace {

constexpr std::size_t probe_precision = 60;

using Rational = mpq_class;

Rational ratio(long num, long den)
{
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

// Reduces an integral rational into [0, period); nullopt if it is not integral.
std::optional<long> reduce(Rational value, long period)
{
    value.canonicalize();
    if (value.get_den() != 1) {
        return std::nullopt;
    }
    mpz_class rem = value.get_num() % period;
    if (rem < 0) {
        rem += period;
    }
    return rem.get_si();
}

int general_sign_exp(long M, long j, long m, long r)
{
    // r <= ((k m + 1) M - 6j) / (6M)  <=>  6 M r <= (k m + 1) M - 6j
    const bool one = m % 3 == 1;
    const long lo = ((one ? 2 : 1) * m + 1) * M - 6 * j;
    const long hi = ((one ? 5 : 4) * m + 1) * M - 6 * j;
    if (6 * M * r <= lo) {
        return 0;
    }
    return 6 * M * r <= hi ? 1 : 2;
}

// Components for one resolution `sigma` of the +- signs in the t1/t2
// congruences; nullopt when that resolution does not give admissible values.
std::optional<DissectionExpression> candidate(long M, long j, long m, long sigma)
{
    const long p1 = m * m * M;
    const long p2 = 2 * p1;
    const Rational base = ratio(7 * M, 24) + ratio(j * (j - M), 2 * M)
                          + ratio((M - 2 * j) * (M - 2 * j - 2 * M), 4 * M);
    DissectionExpression d{M, j, m, {}};
    for (long r = 0; r < m; ++r) {
        const long inner = m + sigma * (6 * r - 1);
        const auto t1 = reduce(ratio(m * M * inner, 6) + sigma * j * m, p1);
        const auto t2 = reduce(Rational(p1 + 2 * j * m) + sigma * ratio(M * inner * m, 3), p2);
        if (!t1 || !t2 || *t1 == 0 || *t2 == 0) {
            return std::nullopt;
        }
        Rational offset = ratio(7 * m * m * M, 24) + ratio(*t1 * (*t1 - p1), 2 * p1)
                          + ratio(*t2 * (*t2 - p2), 2 * p2) - base;
        offset.canonicalize();
        if (offset.get_den() != 1 || offset < 0) {
            return std::nullopt;
        }
        d.components.push_back(DissectionComponent{
            r, general_sign_exp(M, j, m, r), offset.get_num().get_si(), *t1, *t2, p1, p2});
    }
    return d;
}

Series signed_shift(const EtaQuotientSpec &spec, long sign, std::size_t k, std::size_t precision)
{
    Series s = shift(eta_quotient(spec, precision), k);
    return sign < 0 ? negate(s) : s;
}

} // namespace

DissectionExpression quintuple_components(long M, long j, long m)
{
    const EtaQuotientSpec target = quintuple_spec(M, j);
    require_dissection_modulus(m);

    // The sign pairing in the congruences follows m mod 3; the opposite
    // pairing is kept as a fallback and either is accepted only when it
    // reassembles exactly at the probe precision.
    const long natural = m % 3 == 1 ? 1 : -1;
    const Series expected = eta_quotient(target, probe_precision);
    for (long sigma : {natural, -natural}) {
        auto d = candidate(M, j, m, sigma);
        if (d && assemble(*d, probe_precision) == expected) {
            return *std::move(d);
        }
    }
    throw std::logic_error("quintuple_components: no sign resolution reassembles for M=" + std::to_string(M)
                           + ", j=" + std::to_string(j) + ", m=" + std::to_string(m));
}

DissectionExpression qq_components(long m)
{
    require_dissection_modulus(m);
    DissectionExpression d{4, 1, m, {}};
    const long p1 = 4 * m * m;
    for (long r = 0; r < m; ++r) {
        const DissectionComponent c{r, s_of(m, r), L_of(m, r), qq_t1(m, r), qq_t2(m, r), p1, 2 * p1};
        if (c.t1 <= 0 || c.t1 >= c.period1 || c.t2 <= 0 || c.t2 >= c.period2) {
            throw std::logic_error("qq_components: closed form out of range at r=" + std::to_string(r));
        }
        d.components.push_back(c);
    }
    return d;
}

Series component_series(const DissectionComponent &c, std::size_t precision)
{
    const EtaQuotientSpec spec{{
        {c.t1, c.period1, 1},
        {c.period1 - c.t1, c.period1, 1},
        {c.period1, c.period1, 1},
        {c.t2, c.period2, 1},
        {c.period2 - c.t2, c.period2, 1},
    }};
    return signed_shift(spec, c.sign(), static_cast<std::size_t>(c.offset), precision);
}

Series assemble(const DissectionExpression &d, std::size_t precision)
{
    Series total(precision);
    for (const auto &c : d.components) {
        total = add(total, component_series(c, precision));
    }
    return total;
}

std::array<Series, 3> three_dissection_qq(std::size_t precision)
{
    // (q^3;q^3) over six of the classes mod 27 leaves one Jacobi triple product per summand.
    return {
        signed_shift(parse_spec("3^1 3.27^-1 6.27^-1 9.27^-1 18.27^-1 21.27^-1 24.27^-1"), 1, 0, precision),
        signed_shift(parse_spec("3^1 3.27^-1 9.27^-1 12.27^-1 15.27^-1 18.27^-1 24.27^-1"), -1, 1, precision),
        signed_shift(parse_spec("3^1 6.27^-1 9.27^-1 12.27^-1 15.27^-1 18.27^-1 21.27^-1"), -1, 2, precision),
    };
}

std::array<Series, 2> three_dissection_qq3(std::size_t precision)
{
    return {
        mul(lambert_cubic(precision), pentagonal(3, precision)),
        shift(scale(eta_quotient(parse_spec("9^3"), precision), -3), 1),
    };
}

std::array<Series, 3> ramanujan5(std::size_t precision)
{
    return {
        signed_shift(parse_spec("25^1 10.25^1 15.25^1 5.25^-1 20.25^-1"), 1, 0, precision),
        signed_shift(parse_spec("25^1"), -1, 1, precision),
        signed_shift(parse_spec("25^1 5.25^1 20.25^1 10.25^-1 15.25^-1"), -1, 2, precision),
    };
}

} // namespace qsign

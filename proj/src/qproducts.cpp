#include "qsign/qproducts.hpp"

#include <stdexcept>

namespace qsign {

namespace {

void apply_factor(std::vector<Integer> &c, const PochhammerFactor &f)
{
    const std::size_t t = c.size() - 1;
    const long reps = f.delta < 0 ? -f.delta : f.delta;
    if (f.a == f.b) {
        const SparseSeries euler = pentagonal(f.a, t);
        for (long k = 0; k < reps; ++k) {
            if (f.delta > 0) {
                kernel::mul_sparse(c, euler);
            } else {
                kernel::div_sparse(c, euler);
            }
        }
        return;
    }
    for (auto e = static_cast<std::size_t>(f.a); e <= t; e += static_cast<std::size_t>(f.b)) {
        for (long k = 0; k < reps; ++k) {
            if (f.delta > 0) {
                kernel::mul_binomial(c, e);
            } else {
                kernel::div_binomial(c, e);
            }
        }
    }
}

// Largest k >= 0 with 3k^2 <= 4T; every lattice point with m^2+mn+n^2 <= T
// has max(|m|,|n|) <= k because m^2+mn+n^2 >= (3/4) max(m,n)^2.
long hexagonal_box(std::size_t precision)
{
    long k = 0;
    while (3 * (k + 1) * (k + 1) <= 4 * static_cast<long>(precision)) {
        ++k;
    }
    return k;
}

long hexagonal_form(long m, long n) { return m * m + m * n + n * n; }

// 3(m1^2+m1 m2+m2^2) - 2 m1 - m2, the exponent of the three-variable sum after m3 = -m1-m2.
long threevar_exponent(long m1, long m2) { return 3 * hexagonal_form(m1, m2) - 2 * m1 - m2; }

} // namespace

SparseSeries pentagonal(long a, std::size_t precision)
{
    if (a < 1) {
        throw InvalidParameter("a", "dilation must be >= 1, got " + std::to_string(a));
    }
    SparseSeries s;
    s.add_term(0, 1);
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t j = 1;; ++j) {
        const std::size_t lo = step * (j * (3 * j - 1) / 2);
        const std::size_t hi = step * (j * (3 * j + 1) / 2);
        if (lo > precision) {
            break;
        }
        const long sign = (j % 2 == 0) ? 1 : -1;
        s.add_term(lo, sign);
        if (hi <= precision) {
            s.add_term(hi, sign);
        }
    }
    return s;
}

Series pochhammer(long a, long b, std::size_t precision)
{
    return eta_quotient(EtaQuotientSpec{{PochhammerFactor{a, b, 1}}}, precision);
}

Series eta_quotient(const EtaQuotientSpec &spec, std::size_t precision)
{
    validate(spec);
    std::vector<Integer> c(precision + 1);
    c[0] = 1;
    for (const auto &f : spec.factors) {
        apply_factor(c, f);
    }
    return Series(std::move(c));
}

EtaQuotientSpec quintuple_spec(long M, long j)
{
    if (M < 3) {
        throw InvalidParameter("M", "must be >= 3, got " + std::to_string(M));
    }
    if (j < 1 || 2 * j >= M) {
        throw InvalidParameter("j", "must satisfy 1 <= j < M/2, got j=" + std::to_string(j)
                                        + " with M=" + std::to_string(M));
    }
    return EtaQuotientSpec{{
        {j, M, 1},
        {M - j, M, 1},
        {M, M, 1},
        {M - 2 * j, 2 * M, 1},
        {M + 2 * j, 2 * M, 1},
    }};
}

Series quintuple_product(long M, long j, std::size_t precision)
{
    return eta_quotient(quintuple_spec(M, j), precision);
}

Series theta_alt_squares(std::size_t precision)
{
    SparseSeries s;
    s.add_term(0, 1);
    for (std::size_t n = 1; n * n <= precision; ++n) {
        s.add_term(n * n, n % 2 == 0 ? 2 : -2);
    }
    return s.to_dense(precision);
}

Series theta_triangular(std::size_t precision)
{
    SparseSeries s;
    for (std::size_t n = 0; n * (n + 1) / 2 <= precision; ++n) {
        s.add_term(n * (n + 1) / 2, 1);
    }
    return s.to_dense(precision);
}

Series theta_squares(std::size_t precision)
{
    SparseSeries s;
    s.add_term(0, 1);
    for (std::size_t n = 1; n * n <= precision; ++n) {
        s.add_term(n * n, 2);
    }
    return s.to_dense(precision);
}

Series theta_weighted(std::size_t precision)
{
    static constexpr long weight[6] = {0, 1, 0, -2, 0, 1};
    SparseSeries s;
    for (std::size_t n = 1; (n * n - 1) / 8 <= precision; n += 2) {
        s.add_term((n * n - 1) / 8, weight[n % 6]);
    }
    return s.to_dense(precision);
}

Series borwein_a(std::size_t precision)
{
    const long k = hexagonal_box(precision);
    const auto t = static_cast<long>(precision);
    std::vector<Integer> c(precision + 1);
    for (long m = -k; m <= k; ++m) {
        for (long n = -k; n <= k; ++n) {
            const long e = hexagonal_form(m, n);
            if (e <= t) {
                ++c[static_cast<std::size_t>(e)];
            }
        }
    }
    // the two shells just outside the box must contribute nothing
    for (long m = -k - 2; m <= k + 2; ++m) {
        for (long n = -k - 2; n <= k + 2; ++n) {
            if ((m < -k || m > k || n < -k || n > k) && hexagonal_form(m, n) <= t) {
                throw std::logic_error("borwein_a: enumeration box too small");
            }
        }
    }
    return Series(std::move(c));
}

Series borwein_b(std::size_t precision) { return eta_quotient(parse_spec("1^3 3^-1"), precision); }

Series borwein_c3(std::size_t precision)
{
    return shift(scale(eta_quotient(parse_spec("9^3 3^-1"), precision), 3), 1);
}

Series lambert_cubic(std::size_t precision)
{
    std::vector<Integer> c(precision + 1);
    c[0] = 1;
    for (std::size_t n = 1; 3 * n <= precision; ++n) {
        // (q^{3n} - q^{6n}) sum_k q^{9nk}
        for (std::size_t e = 3 * n; e <= precision; e += 9 * n) {
            c[e] += 6;
            if (e + 3 * n <= precision) {
                c[e + 3 * n] -= 6;
            }
        }
    }
    return Series(std::move(c));
}

Series theta_threevar(std::size_t precision)
{
    // exponent >= (9/4)k^2 - 3k where k = max(|m1|, |m2|)
    const auto t = static_cast<long>(precision);
    long k = 0;
    while (9 * (k + 1) * (k + 1) - 12 * (k + 1) <= 4 * t) {
        ++k;
    }
    std::vector<Integer> c(precision + 1);
    for (long m1 = -k; m1 <= k; ++m1) {
        for (long m2 = -k; m2 <= k; ++m2) {
            const long e = threevar_exponent(m1, m2);
            if (e < 0) {
                throw std::logic_error("theta_threevar: negative exponent");
            }
            if (e <= t) {
                ++c[static_cast<std::size_t>(e)];
            }
        }
    }
    return Series(std::move(c));
}

} // namespace qsign

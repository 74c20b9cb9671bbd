#include "qsign/series.hpp"

#include <algorithm>
#include <string>

namespace qsign {

namespace {

bool is_unit(const Integer &c) { return c == 1 || c == -1; }

std::vector<std::size_t> nonzero_support(std::span<const Integer> c, std::size_t from)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = from; k < c.size(); ++k) {
        if (sgn(c[k]) != 0) {
            idx.push_back(k);
        }
    }
    return idx;
}

} // namespace

Series::Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidParameter("coeffs", "a series needs at least the constant coefficient");
    }
}

Series Series::one(std::size_t precision)
{
    Series s(precision);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(const Integer &coeff, std::size_t exponent, std::size_t precision)
{
    Series s(precision);
    if (exponent <= precision) {
        s.coeffs_[exponent] = coeff;
    }
    return s;
}

Series Series::from_ints(std::initializer_list<long> coeffs)
{
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) {
        c.emplace_back(v);
    }
    return Series(std::move(c));
}

const Integer &Series::coefficient(std::size_t n) const
{
    if (n > precision()) {
        throw BeyondPrecision("coefficient of q^" + std::to_string(n) + " requested from a series known to q^"
                              + std::to_string(precision()));
    }
    return coeffs_[n];
}

int Series::sign_of(std::size_t n) const { return sgn(coefficient(n)); }

Series Series::truncated(std::size_t precision) const
{
    if (precision > this->precision()) {
        throw BeyondPrecision("cannot raise precision from " + std::to_string(this->precision()) + " to "
                              + std::to_string(precision));
    }
    return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(precision) + 1));
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) == 0; });
}

void SparseSeries::add_term(std::size_t exponent, long coeff)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term &t, std::size_t e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) {
        it->coeff += coeff;
        if (it->coeff == 0) {
            terms_.erase(it);
        }
    } else if (coeff != 0) {
        terms_.insert(it, Term{exponent, coeff});
    }
}

long SparseSeries::constant_term() const noexcept
{
    return (!terms_.empty() && terms_.front().exponent == 0) ? terms_.front().coeff : 0;
}

Series SparseSeries::to_dense(std::size_t precision) const
{
    std::vector<Integer> c(precision + 1);
    for (const auto &t : terms_) {
        if (t.exponent > precision) {
            break;
        }
        c[t.exponent] = t.coeff;
    }
    return Series(std::move(c));
}

Series add(const Series &x, const Series &y)
{
    const std::size_t t = std::min(x.precision(), y.precision());
    std::vector<Integer> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        c[n] = x[n] + y[n];
    }
    return Series(std::move(c));
}

Series sub(const Series &x, const Series &y)
{
    const std::size_t t = std::min(x.precision(), y.precision());
    std::vector<Integer> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        c[n] = x[n] - y[n];
    }
    return Series(std::move(c));
}

Series negate(const Series &x)
{
    std::vector<Integer> c(x.precision() + 1);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = -x[n];
    }
    return Series(std::move(c));
}

Series scale(const Series &x, const Integer &k)
{
    std::vector<Integer> c(x.precision() + 1);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = x[n] * k;
    }
    return Series(std::move(c));
}

Series mul(const Series &x, const Series &y)
{
    const std::size_t t = std::min(x.precision(), y.precision());
    std::vector<Integer> c(t + 1);
    const auto ys = nonzero_support(y.coefficients().first(t + 1), 0);
    for (std::size_t i = 0; i <= t; ++i) {
        if (sgn(x[i]) == 0) {
            continue;
        }
        for (std::size_t j : ys) {
            if (i + j > t) {
                break;
            }
            c[i + j] += x[i] * y[j];
        }
    }
    return Series(std::move(c));
}

Series mul(const Series &x, const SparseSeries &s)
{
    std::vector<Integer> c(x.coefficients().begin(), x.coefficients().end());
    kernel::mul_sparse(c, s);
    return Series(std::move(c));
}

Series div(const Series &x, const SparseSeries &s)
{
    std::vector<Integer> c(x.coefficients().begin(), x.coefficients().end());
    kernel::div_sparse(c, s);
    return Series(std::move(c));
}

Series invert(const Series &x)
{
    if (!is_unit(x[0])) {
        throw NonUnitConstantTerm("invert: constant term is " + x[0].get_str() + ", expected +1 or -1");
    }
    const std::size_t t = x.precision();
    const bool negative_unit = x[0] < 0;
    const auto support = nonzero_support(x.coefficients(), 1);
    std::vector<Integer> y(t + 1);
    y[0] = x[0];
    Integer acc;
    for (std::size_t n = 1; n <= t; ++n) {
        acc = 0;
        for (std::size_t k : support) {
            if (k > n) {
                break;
            }
            acc += x[k] * y[n - k];
        }
        // y_n = -x0^{-1} acc, and x0^{-1} = x0
        if (negative_unit) {
            y[n] = acc;
        } else {
            y[n] = -acc;
        }
    }
    return Series(std::move(y));
}

Series pow_int(const Series &x, long e)
{
    if (e == 0) {
        return Series::one(x.precision());
    }
    Series base = e < 0 ? invert(x) : x;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    Series result = Series::one(x.precision());
    while (true) {
        if (k & 1UL) {
            result = mul(result, base);
        }
        k >>= 1U;
        if (k == 0) {
            break;
        }
        base = mul(base, base);
    }
    return result;
}

Series shift(const Series &x, std::size_t k)
{
    const std::size_t t = x.precision();
    std::vector<Integer> c(t + 1);
    for (std::size_t n = k; n <= t; ++n) {
        c[n] = x[n - k];
    }
    return Series(std::move(c));
}

Series dilate(const Series &x, std::size_t m, std::optional<std::size_t> cap)
{
    if (m == 0) {
        throw InvalidParameter("m", "dilation factor must be positive");
    }
    std::size_t t = m * x.precision();
    if (cap) {
        t = std::min(t, *cap);
    }
    std::vector<Integer> c(t + 1);
    for (std::size_t n = 0; m * n <= t; ++n) {
        c[m * n] = x[n];
    }
    return Series(std::move(c));
}

Series slice(const Series &x, std::size_t r, std::size_t m)
{
    if (m == 0) {
        throw InvalidParameter("m", "modulus must be positive");
    }
    if (r >= m) {
        throw InvalidParameter("r", "residue " + std::to_string(r) + " not in [0, " + std::to_string(m) + ")");
    }
    if (r > x.precision()) {
        throw BeyondPrecision("slice: residue " + std::to_string(r) + " exceeds precision "
                              + std::to_string(x.precision()));
    }
    const std::size_t t = (x.precision() - r) / m;
    std::vector<Integer> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        c[n] = x[m * n + r];
    }
    return Series(std::move(c));
}

namespace kernel {

void mul_binomial(std::vector<Integer> &c, std::size_t e)
{
    if (e == 0) {
        std::fill(c.begin(), c.end(), 0);
        return;
    }
    for (std::size_t n = c.size(); n-- > e;) {
        c[n] -= c[n - e];
    }
}

void div_binomial(std::vector<Integer> &c, std::size_t e)
{
    if (e == 0) {
        throw NonUnitConstantTerm("div_binomial: (1 - q^0) is not invertible");
    }
    for (std::size_t n = e; n < c.size(); ++n) {
        c[n] += c[n - e];
    }
}

namespace {

// c[n] += k * v for a small signed k
void add_small_multiple(Integer &c, const Integer &v, long k)
{
    if (k == 1) {
        c += v;
    } else if (k == -1) {
        c -= v;
    } else if (k > 0) {
        mpz_addmul_ui(c.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
    } else {
        mpz_submul_ui(c.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-k));
    }
}

} // namespace

void mul_sparse(std::vector<Integer> &c, const SparseSeries &s)
{
    const auto terms = s.terms();
    const long c0 = s.constant_term();
    const auto rest = c0 != 0 ? terms.subspan(1) : terms;
    // Descending order: c[n - e] with e > 0 is still the original value when read.
    for (std::size_t n = c.size(); n-- > 0;) {
        if (c0 != 1) {
            c[n] *= c0;
        }
        for (const auto &t : rest) {
            if (t.exponent > n) {
                break;
            }
            add_small_multiple(c[n], c[n - t.exponent], t.coeff);
        }
    }
}

void div_sparse(std::vector<Integer> &c, const SparseSeries &s)
{
    const long c0 = s.constant_term();
    if (c0 != 1 && c0 != -1) {
        throw NonUnitConstantTerm("div_sparse: constant term is " + std::to_string(c0) + ", expected +1 or -1");
    }
    const auto rest = s.terms().subspan(1);
    // Ascending order: y_n = c0 (x_n - sum_{e>0} s_e y_{n-e}).
    for (std::size_t n = 0; n < c.size(); ++n) {
        for (const auto &t : rest) {
            if (t.exponent > n) {
                break;
            }
            add_small_multiple(c[n], c[n - t.exponent], -t.coeff);
        }
        if (c0 == -1) {
            c[n] = -c[n];
        }
    }
}

} // namespace kernel

} // namespace qsign

#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// A Series of precision T stores the coefficients of q^0 .. q^T (inclusive).
// Every coefficient it stores is exact; nothing above q^T is known. Binary
// operations truncate to the smaller of the operand precisions and never
// extend precision on their own.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qsign/errors.hpp"

namespace qsign {

using Integer = mpz_class;

class Series {
public:
    /// The zero series of precision 0.
    Series() : coeffs_(1) {}

    /// The zero series of the given precision.
    explicit Series(std::size_t precision) : coeffs_(precision + 1) {}

    /// Takes ownership of coefficients q^0 .. q^{size-1}; `coeffs` must be nonempty.
    explicit Series(std::vector<Integer> coeffs);

    static Series one(std::size_t precision);
    static Series monomial(const Integer &coeff, std::size_t exponent, std::size_t precision);

    /// Builds a series from small integer coefficients; precision is `coeffs.size() - 1`.
    static Series from_ints(std::initializer_list<long> coeffs);

    std::size_t precision() const noexcept { return coeffs_.size() - 1; }

    /// Unchecked access, n <= precision().
    const Integer &operator[](std::size_t n) const noexcept { return coeffs_[n]; }

    /// Checked access; throws BeyondPrecision when n > precision().
    const Integer &coefficient(std::size_t n) const;

    /// Signum of the coefficient of q^n: -1, 0 or +1.
    int sign_of(std::size_t n) const;

    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    /// Same series with precision lowered to `precision` (must not exceed the current one).
    Series truncated(std::size_t precision) const;

    bool is_zero() const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Sparse term list sum_k c_k q^{e_k}; used for theta sums and pentagonal
/// factors. Terms are kept sorted by exponent with distinct exponents and
/// nonzero coefficients.
class SparseSeries {
public:
    struct Term {
        std::size_t exponent;
        long coeff;
    };

    SparseSeries() = default;

    /// Adds c q^e (merging with an existing term of the same exponent).
    void add_term(std::size_t exponent, long coeff);

    std::span<const Term> terms() const noexcept { return terms_; }
    long constant_term() const noexcept;

    /// Dense expansion truncated at `precision`.
    Series to_dense(std::size_t precision) const;

private:
    std::vector<Term> terms_;
};

Series add(const Series &x, const Series &y);
Series sub(const Series &x, const Series &y);
Series negate(const Series &x);
Series scale(const Series &x, const Integer &k);

/// Cauchy product truncated at min(precision(x), precision(y)).
Series mul(const Series &x, const Series &y);

/// Product with a sparse factor; precision stays precision(x).
Series mul(const Series &x, const SparseSeries &s);

/// Quotient by a sparse factor with constant term +1 or -1; precision stays precision(x).
Series div(const Series &x, const SparseSeries &s);

/// Multiplicative inverse; x must have constant term +1 or -1.
Series invert(const Series &x);

/// x^e, e may be negative when x has a unit constant term.
Series pow_int(const Series &x, long e);

/// Multiplies by q^k, keeping the precision (terms above it are dropped).
Series shift(const Series &x, std::size_t k);

/// Substitutes q -> q^m. The result has precision min(m * precision(x), cap).
Series dilate(const Series &x, std::size_t m, std::optional<std::size_t> cap = std::nullopt);

/// sum_n x_{m n + r} q^n, of precision floor((T - r) / m).
Series slice(const Series &x, std::size_t r, std::size_t m);

inline Series operator+(const Series &x, const Series &y) { return add(x, y); }
inline Series operator-(const Series &x, const Series &y) { return sub(x, y); }
inline Series operator-(const Series &x) { return negate(x); }
inline Series operator*(const Series &x, const Series &y) { return mul(x, y); }

// In-place kernels on a raw coefficient buffer. The buffer is its own
// precision: nothing beyond its last entry is read or written.
namespace kernel {

/// c <- c * (1 - q^e)
void mul_binomial(std::vector<Integer> &c, std::size_t e);
/// c <- c / (1 - q^e)
void div_binomial(std::vector<Integer> &c, std::size_t e);
/// c <- c * s
void mul_sparse(std::vector<Integer> &c, const SparseSeries &s);
/// c <- c / s, constant term of s must be +1 or -1
void div_sparse(std::vector<Integer> &c, const SparseSeries &s);

} // namespace kernel

} // namespace qsign

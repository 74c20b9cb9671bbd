#pragma once

// Infinite products and theta series as truncated Series.
//
// Notation: (q^a; q^b)_inf = prod_{k>=0} (1 - q^{a+kb}). An eta quotient is a
// finite product of such factors raised to integer powers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsign/series.hpp"

namespace qsign {

/// (q^a; q^b)_inf ^ delta with a, b >= 1.
struct PochhammerFactor {
    long a = 1;
    long b = 1;
    long delta = 1;

    friend bool operator==(const PochhammerFactor &, const PochhammerFactor &) = default;
};

/// Nonempty product of Pochhammer factors.
struct EtaQuotientSpec {
    std::vector<PochhammerFactor> factors;

    friend bool operator==(const EtaQuotientSpec &, const EtaQuotientSpec &) = default;
};

/// Parses the whitespace-separated spec grammar. Each token is either
/// `j^d`, meaning (q^j;q^j)^d, or `a.b^d`, meaning (q^a;q^b)^d. A missing
/// `^d` means d = 1. Throws InvalidParameter("spec", ...) on malformed input.
EtaQuotientSpec parse_spec(std::string_view text);

/// Canonical text form; `parse_spec(to_string(s)) == s`.
std::string to_string(const EtaQuotientSpec &spec);

/// Throws InvalidParameter when any factor has a < 1 or b < 1, or the spec is empty.
void validate(const EtaQuotientSpec &spec);

/// Euler's product (q^a;q^a)_inf as the sparse pentagonal series
/// sum_k (-1)^k q^{a k(3k-1)/2}, truncated at `precision`.
SparseSeries pentagonal(long a, std::size_t precision);

Series pochhammer(long a, long b, std::size_t precision);
Series eta_quotient(const EtaQuotientSpec &spec, std::size_t precision);

/// (q^j, q^{M-j}, q^M; q^M)_inf (q^{M-2j}, q^{M+2j}; q^{2M})_inf for M >= 3, 1 <= j < M/2.
Series quintuple_product(long M, long j, std::size_t precision);
EtaQuotientSpec quintuple_spec(long M, long j);

/// sum_{n in Z} (-1)^n q^{n^2}
Series theta_alt_squares(std::size_t precision);
/// sum_{n >= 0} q^{n(n+1)/2}
Series theta_triangular(std::size_t precision);
/// sum_{n in Z} q^{n^2}
Series theta_squares(std::size_t precision);
/// sum over odd n >= 1 of w(n) q^{(n^2-1)/8}, w = 0,1,0,-2,0,1 by n mod 6.
Series theta_weighted(std::size_t precision);

/// Borwein a(q) = sum_{m,n} q^{m^2+mn+n^2}.
Series borwein_a(std::size_t precision);
/// Borwein b(q) = (q;q)^3 / (q^3;q^3).
Series borwein_b(std::size_t precision);
/// c(q^3) = 3q (q^9;q^9)^3 / (q^3;q^3); c(q) itself has exponents in (1/3)Z
/// and is never built.
Series borwein_c3(std::size_t precision);

/// 1 + 6 sum_{n>=1} q^{3n} (1 - q^{3n}) / (1 - q^{9n}), expanded termwise.
Series lambert_cubic(std::size_t precision);

/// sum over m1 + m2 + m3 = 0 of q^{3(m1^2+m2^2+m3^2)/2 + m1 + 2 m2 + 3 m3}.
Series theta_threevar(std::size_t precision);

} // namespace qsign

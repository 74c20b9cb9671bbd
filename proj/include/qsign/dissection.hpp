#pragma once

// m-dissections of quintuple products, of (q;q)_inf, and the special 3- and
// 5-dissections of Euler's product.
//
// A dissection writes
//   (q^j, q^{M-j}, q^M; q^M)(q^{M-2j}, q^{M+2j}; q^{2M})
//     = sum_{r=0}^{m-1} (-1)^{s(r)} q^{L(r)}
//         (q^{t1}, q^{P-t1}, q^P; q^P)(q^{t2}, q^{2P-t2}; q^{2P}),   P = m^2 M,
// valid for m = +-1 (mod 3).

#include <array>
#include <cstddef>
#include <vector>

#include "qsign/series.hpp"

namespace qsign {

struct DissectionComponent {
    long r = 0;
    int sign_exp = 0; ///< s(r) in {0, 1, 2}; the component carries (-1)^{s(r)}
    long offset = 0;  ///< L(r)
    long t1 = 0;      ///< in (0, period1)
    long t2 = 0;      ///< in (0, period2)
    long period1 = 0; ///< m^2 M
    long period2 = 0; ///< 2 m^2 M

    int sign() const noexcept { return sign_exp % 2 == 0 ? 1 : -1; }

    friend bool operator==(const DissectionComponent &, const DissectionComponent &) = default;
};

struct DissectionExpression {
    long M = 4;
    long j = 1;
    long m = 2;
    std::vector<DissectionComponent> components; ///< one per residue r = 0 .. m-1
};

/// General quintuple-product dissection for M >= 3, 1 <= j < M/2, m >= 2, m = +-1 (mod 3).
DissectionExpression quintuple_components(long M, long j, long m);

/// The (M, j) = (4, 1) specialisation, i.e. an m-dissection of (q;q)_inf,
/// from the explicit case-split closed forms.
DissectionExpression qq_components(long m);

Series component_series(const DissectionComponent &c, std::size_t precision);
Series assemble(const DissectionExpression &d, std::size_t precision);

/// The three signed summands of the 3-dissection of (q;q)_inf. Summand k is
/// supported on exponents = k (mod 3); their sum is (q;q)_inf.
std::array<Series, 3> three_dissection_qq(std::size_t precision);

/// The two signed summands (q^3;q^3) * lambert_cubic and -3q (q^9;q^9)^3,
/// summing to (q;q)_inf^3.
std::array<Series, 2> three_dissection_qq3(std::size_t precision);

/// Signed summands of Ramanujan's 5-dissection
///   (q;q) = (q^25;q^25) [ R^{-1}(q^5) - q - q^2 R(q^5) ],
/// R(q^5) = (q^5, q^20; q^25) / (q^10, q^15; q^25). Summand k lives on exponents = k (mod 5).
std::array<Series, 3> ramanujan5(std::size_t precision);

} // namespace qsign

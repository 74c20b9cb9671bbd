#pragma once

// Explicit case-split formulas for the m-dissection of (q;q)_inf, m = +-1 (mod 3).
// All threshold tests are exact integer comparisons.

namespace qsign {

/// Throws InvalidParameter unless m >= 2 and m is prime to 3.
void require_dissection_modulus(long m);

/// Offset L(r) of the r-th component, 0 <= r < m.
long L_of(long m, long r);

/// Sign exponent s(r) in {0, 1, 2}; the component sign is (-1)^{s(r)}.
int s_of(long m, long r);

/// Triple-product parameter t1(r), in (0, 4m^2).
long qq_t1(long m, long r);

/// Pair-product parameter t2(r), in (0, 8m^2).
long qq_t2(long m, long r);

} // namespace qsign

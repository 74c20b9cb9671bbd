#include "qsign/closed_forms.hpp"

#include <string>

#include "qsign/errors.hpp"

namespace qsign {

namespace {

bool one_mod_three(long m) { return m % 3 == 1; }

void require_residue(long m, long r)
{
    require_dissection_modulus(m);
    if (r < 0 || r >= m) {
        throw InvalidParameter("r", "must satisfy 0 <= r < m, got r=" + std::to_string(r) + " with m="
                                        + std::to_string(m));
    }
}

// The two breakpoints, as numerators over 12: r <= lo/12 is the first branch,
// lo/12 < r <= hi/12 the second, r > hi/12 the third.
struct Breaks {
    long lo;
    long hi;
};

Breaks breaks(long m)
{
    return one_mod_three(m) ? Breaks{4 * m - 1, 10 * m - 1} : Breaks{2 * m - 1, 8 * m - 1};
}

} // namespace

void require_dissection_modulus(long m)
{
    if (m < 2) {
        throw InvalidParameter("m", "must be >= 2, got " + std::to_string(m));
    }
    if (m % 3 == 0) {
        throw InvalidParameter("m", "must be prime to 3, got " + std::to_string(m));
    }
}

long L_of(long m, long r)
{
    require_residue(m, r);
    const auto [lo, hi] = breaks(m);
    const long base = 6 * r * r + r;
    if (12 * r <= lo) {
        return base;
    }
    if (12 * r <= hi) {
        return one_mod_three(m) ? base - 8 * m * r + (8 * m * m - 2 * m) / 3
                                : base - 4 * m * r + (2 * m * m - m) / 3;
    }
    return base - 12 * m * r + (6 * m * m - m);
}

int s_of(long m, long r)
{
    require_residue(m, r);
    const auto [lo, hi] = breaks(m);
    if (12 * r <= lo) {
        return 0;
    }
    return 12 * r <= hi ? 1 : 2;
}

long qq_t1(long m, long r)
{
    require_residue(m, r);
    // the breakpoints (10m-1)/12 and (2m-1)/12 are never integers
    if (one_mod_three(m)) {
        return 12 * r < 10 * m - 1 ? (2 * m * m + m) / 3 + 4 * m * r : (-10 * m * m + m) / 3 + 4 * m * r;
    }
    return 12 * r < 2 * m - 1 ? (2 * m * m - m) / 3 - 4 * m * r : (14 * m * m - m) / 3 - 4 * m * r;
}

long qq_t2(long m, long r)
{
    require_residue(m, r);
    if (one_mod_three(m)) {
        return 12 * r < 4 * m - 1 ? (16 * m * m + 2 * m) / 3 + 8 * m * r : (-8 * m * m + 2 * m) / 3 + 8 * m * r;
    }
    return 12 * r < 8 * m - 1 ? (8 * m * m + 2 * m) / 3 + 8 * m * r : (-16 * m * m + 2 * m) / 3 + 8 * m * r;
}

} // namespace qsign

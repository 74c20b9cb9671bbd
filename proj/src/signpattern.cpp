#include "qsign/signpattern.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qsign {

namespace {

void require_modulus(long modulus)
{
    if (modulus < 1) {
        throw InvalidParameter("m", "modulus must be >= 1, got " + std::to_string(modulus));
    }
}

void require_horizon(const Series &series, std::size_t horizon)
{
    if (horizon > series.precision()) {
        throw BeyondPrecision("horizon " + std::to_string(horizon) + " exceeds series precision "
                              + std::to_string(series.precision()));
    }
}

} // namespace

char to_char(SignClass c) noexcept
{
    switch (c) {
    case SignClass::Positive:
        return '+';
    case SignClass::Negative:
        return '-';
    case SignClass::Zero:
        return '0';
    case SignClass::Mixed:
        break;
    }
    return '?';
}

SignClass sign_class_from_char(char c)
{
    switch (c) {
    case '+':
        return SignClass::Positive;
    case '-':
        return SignClass::Negative;
    case '0':
        return SignClass::Zero;
    case '?':
        return SignClass::Mixed;
    default:
        throw InvalidParameter("pattern", std::string("unknown sign class '") + c + "'");
    }
}

SignPattern SignPattern::from_string(std::string_view classes, long onset)
{
    if (classes.empty()) {
        throw InvalidParameter("pattern", "empty class string");
    }
    SignPattern p;
    p.modulus = static_cast<long>(classes.size());
    p.onset = onset;
    for (char c : classes) {
        p.classes.push_back(sign_class_from_char(c));
    }
    return p;
}

std::string SignPattern::class_string() const
{
    std::string s;
    for (auto c : classes) {
        s.push_back(to_char(c));
    }
    return s;
}

bool SignPattern::admits(long n, int sign) const
{
    switch (class_of(n)) {
    case SignClass::Positive:
        return sign > 0;
    case SignClass::Negative:
        return sign < 0;
    case SignClass::Zero:
        return sign == 0;
    case SignClass::Mixed:
        break;
    }
    return true;
}

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

EtaQuotientSpec theorem1_spec(long p, long i) { return EtaQuotientSpec{{{i, i, 1}, {p, p, -1}}}; }

Theorem1Certificate predict_theorem1(long p, long i)
{
    if (p <= 3 || !is_prime(p)) {
        throw InvalidParameter("p", "must be a prime > 3, got " + std::to_string(p));
    }
    if (i <= 1) {
        throw InvalidParameter("i", "must be > 1, got " + std::to_string(i));
    }
    if (i % p == 0) {
        throw InvalidParameter("i", "must not be divisible by p=" + std::to_string(p) + ", got "
                                        + std::to_string(i));
    }

    Theorem1Certificate cert;
    cert.p = p;
    cert.i = i;
    cert.pattern.modulus = p;
    cert.pattern.classes.assign(static_cast<std::size_t>(p), SignClass::Zero);

    std::vector<long> least(static_cast<std::size_t>(p), std::numeric_limits<long>::max());
    for (long r = 0; r < p; ++r) {
        const long L = L_of(p, r);
        const int s = s_of(p, r);
        const long residue = (i * (6 * r * r + r)) % p;
        if ((i * L) % p != residue) {
            throw std::logic_error("predict_theorem1: L(r) incongruent to 6r^2+r at r=" + std::to_string(r));
        }
        const SignClass cls = s % 2 == 0 ? SignClass::Positive : SignClass::Negative;
        auto &slot = cert.pattern.classes[static_cast<std::size_t>(residue)];
        if (slot != SignClass::Zero && slot != cls) {
            throw std::logic_error("predict_theorem1: opposite signs share residue " + std::to_string(residue));
        }
        slot = cls;
        auto &lo = least[static_cast<std::size_t>(residue)];
        lo = std::min(lo, i * L);
        cert.L_values.push_back(L);
        cert.s_values.push_back(s);
        cert.residue_map.push_back(residue);
    }

    // residues attained by no r are the Zero classes and do not enter N
    long largest = std::numeric_limits<long>::min();
    for (long v : least) {
        if (v != std::numeric_limits<long>::max()) {
            largest = std::max(largest, v);
        }
    }
    cert.N = largest - p;
    cert.pattern.onset = cert.N;
    return cert;
}

PatternReport verify_pattern(const Series &series, const SignPattern &pattern, std::size_t horizon)
{
    require_modulus(pattern.modulus);
    require_horizon(series, horizon);
    PatternReport report{pattern, horizon, {}};
    const long h = static_cast<long>(horizon);
    for (long n = std::max(0L, pattern.onset + 1); n <= h; ++n) {
        const int sign = series.sign_of(static_cast<std::size_t>(n));
        if (!pattern.admits(n, sign)) {
            report.violations.push_back(Violation{n, pattern.class_of(n), sign});
        }
    }
    return report;
}

std::optional<long> sharpness_witness(const Series &series, const SignPattern &pattern)
{
    require_modulus(pattern.modulus);
    const long top = std::min<long>(pattern.onset, static_cast<long>(series.precision()));
    for (long n = top; n >= 0; --n) {
        if (!pattern.admits(n, series.sign_of(static_cast<std::size_t>(n)))) {
            return n;
        }
    }
    return std::nullopt;
}

DetectedPattern detect_pattern(const Series &series, long modulus, std::size_t horizon)
{
    require_modulus(modulus);
    require_horizon(series, horizon);
    const long h = static_cast<long>(horizon);
    const long window_start = h / 2 + 1;

    DetectedPattern out;
    out.horizon = horizon;
    out.pattern.modulus = modulus;
    out.pattern.onset = -1;
    for (long r = 0; r < modulus; ++r) {
        if (r > h) {
            out.pattern.classes.push_back(SignClass::Mixed);
            continue;
        }
        // fall back to the whole class when the window holds none of its exponents
        long first = r;
        while (first < window_start) {
            first += modulus;
        }
        if (first > h) {
            first = r;
        }
        bool pos = false;
        bool neg = false;
        for (long n = first; n <= h; n += modulus) {
            const int s = series.sign_of(static_cast<std::size_t>(n));
            pos = pos || s > 0;
            neg = neg || s < 0;
        }
        SignClass cls = SignClass::Mixed;
        if (!(pos && neg)) {
            cls = pos ? SignClass::Positive : (neg ? SignClass::Negative : SignClass::Zero);
        }
        out.pattern.classes.push_back(cls);
        if (cls == SignClass::Mixed) {
            continue;
        }
        const int want = cls == SignClass::Positive ? 1 : (cls == SignClass::Negative ? -1 : 0);
        for (long n = r; n <= h; n += modulus) {
            const int s = series.sign_of(static_cast<std::size_t>(n));
            if (s == want) {
                continue;
            }
            if (s == 0 && n >= first) {
                out.sporadic_zeros.push_back(n);
            } else {
                out.pattern.onset = std::max(out.pattern.onset, n);
            }
        }
    }
    std::sort(out.sporadic_zeros.begin(), out.sporadic_zeros.end());
    return out;
}

std::vector<CensusRow> sign_census(const Series &series, long modulus, long terms_per_class)
{
    require_modulus(modulus);
    if (terms_per_class < 0) {
        throw InvalidParameter("K", "must be >= 0, got " + std::to_string(terms_per_class));
    }
    const long needed = modulus * terms_per_class - 1;
    if (needed > static_cast<long>(series.precision())) {
        throw BeyondPrecision("census needs coefficients to q^" + std::to_string(needed) + ", series known to q^"
                              + std::to_string(series.precision()));
    }
    std::vector<CensusRow> rows;
    for (long r = 0; r < modulus; ++r) {
        CensusRow row{r, 0, 0, 0};
        for (long k = 0; k < terms_per_class; ++k) {
            const int s = series.sign_of(static_cast<std::size_t>(r + k * modulus));
            (s < 0 ? row.negative : (s == 0 ? row.zero : row.positive)) += 1;
        }
        rows.push_back(row);
    }
    return rows;
}

bool vanishing_predicate(long n)
{
    if (n < 1) {
        throw InvalidParameter("n", "must be >= 1, got " + std::to_string(n));
    }
    if (n % 3 != 2) {
        return false;
    }
    long rest = n;
    for (long d = 2; d * d <= rest; ++d) {
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (d % 4 == 3 && e % 2 == 1) {
            return true;
        }
    }
    // what remains is 1 or a prime to the first power
    return rest % 4 == 3;
}

} // namespace qsign

#pragma once

// Periodic sign patterns of series coefficients: prediction from the
// dissection of (q^i;q^i)/(q^p;q^p), verification against an expansion,
// empirical detection and per-residue sign census.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsign/closed_forms.hpp"
#include "qsign/qproducts.hpp"
#include "qsign/series.hpp"

namespace qsign {

enum class SignClass { Positive, Negative, Zero, Mixed };

/// '+', '-', '0' or '?' (Mixed).
char to_char(SignClass c) noexcept;
SignClass sign_class_from_char(char c);

/// Sign classes per residue mod `modulus`, asserted for every n > onset.
/// onset = -1 means the pattern holds from n = 0.
struct SignPattern {
    long modulus = 1;
    std::vector<SignClass> classes;
    long onset = -1;

    /// Builds a pattern from a class string over "+-0?"; the modulus is its length.
    static SignPattern from_string(std::string_view classes, long onset);

    std::string class_string() const;
    SignClass class_of(long n) const { return classes[static_cast<std::size_t>(n % modulus)]; }

    /// Whether a coefficient of sign `sign` (-1, 0, 1) at exponent n is allowed by its class.
    bool admits(long n, int sign) const;

    friend bool operator==(const SignPattern &, const SignPattern &) = default;
};

struct Violation {
    long n = 0;
    SignClass expected = SignClass::Mixed;
    int actual = 0;
};

struct PatternReport {
    SignPattern pattern;
    std::size_t horizon = 0;
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

/// Everything the (q^i;q^i)/(q^p;q^p) sign theorem derives for one (p, i).
struct Theorem1Certificate {
    long p = 0;
    long i = 0;
    std::vector<long> L_values;    ///< L(r), 0 <= r < p
    std::vector<int> s_values;     ///< s(r)
    std::vector<long> residue_map; ///< r -> i(6r^2 + r) mod p
    long N = -1;                   ///< onset bound
    SignPattern pattern;
};

/// Deterministic trial division.
bool is_prime(long n);

/// The spec "i^1 p^-1".
EtaQuotientSpec theorem1_spec(long p, long i);

/// Requires p prime > 3, i > 1 and p not dividing i.
Theorem1Certificate predict_theorem1(long p, long i);

/// Checks every pattern.onset < n <= horizon. Throws BeyondPrecision when
/// horizon exceeds the series precision.
PatternReport verify_pattern(const Series &series, const SignPattern &pattern, std::size_t horizon);

/// Largest n in [0, pattern.onset] whose coefficient breaks the pattern, if any.
std::optional<long> sharpness_witness(const Series &series, const SignPattern &pattern);

/// Empirical pattern of a series up to a finite horizon.
///
/// For each residue the tail window is the set of exponents n in that class
/// with horizon/2 < n <= horizon. A residue whose window holds both signs is
/// Mixed; one holding only zeros is Zero; otherwise it takes the nonzero sign
/// present, and zeros inside the window are listed in `sporadic_zeros` rather
/// than counted against it. The onset is the last exponent (over all
/// non-Mixed residues) that contradicts its class, or -1.
struct DetectedPattern {
    SignPattern pattern;
    std::size_t horizon = 0;
    std::vector<long> sporadic_zeros;
};

DetectedPattern detect_pattern(const Series &series, long modulus, std::size_t horizon);

struct CensusRow {
    long residue = 0;
    long negative = 0;
    long zero = 0;
    long positive = 0;

    friend bool operator==(const CensusRow &, const CensusRow &) = default;
};

/// Sign counts over exponents r, r + m, ..., r + (K-1) m for each residue r.
std::vector<CensusRow> sign_census(const Series &series, long modulus, long terms_per_class);

/// True iff n = 2 (mod 3) and some prime p = 3 (mod 4) divides n to an odd power.
bool vanishing_predicate(long n);

} // namespace qsign

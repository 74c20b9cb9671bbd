#pragma once

// Known sign patterns: the nine families of eta quotients with proved
// periodic signs, and an empirical regression corpus of quoted results.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsign/qproducts.hpp"
#include "qsign/signpattern.hpp"

namespace qsign {

struct CatalogEntry {
    std::string id;         ///< "1", "2", ..., "9a", "9b", "9c"
    std::string parameters; ///< e.g. "p=5", "i=13", or empty
    EtaQuotientSpec spec;
    SignPattern pattern;
};

/// (q^2;q^2)^2 / ((q;q)(q^p;q^p)) for a prime p >= 3: positive on residues of
/// triangular numbers mod p, zero elsewhere.
CatalogEntry triangular_case(long p);

/// (q;q)^2 / ((q^2;q^2)(q^{4p};q^{4p})) for p = 1 or an odd prime:
/// negative on (2t+1)^2, positive on (2t)^2, zero elsewhere, mod 4p.
CatalogEntry square_case(long p);

/// (q;q)^9 / (q^3;q^3)^i for i >= 11.
CatalogEntry cubic_case(long i);

/// All cases with the default parameter sweep (p in {3,5,7} for case 1,
/// p in {1,3,5,7} for case 2, i in {11,12,13,14,15} for case 9).
std::vector<CatalogEntry> theorem2_catalog();

/// A regression entry: an eta quotient (or general Pochhammer product) with
/// an expected pattern, checked up to `horizon`. Mixed ('?') classes are
/// unconstrained, so vanishing statements are patterns with '?' elsewhere.
struct CorpusRecord {
    std::string name;
    std::string spec;
    SignPattern pattern;
    std::size_t horizon = 0;

    friend bool operator==(const CorpusRecord &, const CorpusRecord &) = default;
};

std::vector<CorpusRecord> corpus();

/// Spec of the eta quotient whose zero set `vanishing_predicate` describes.
inline constexpr std::string_view vanishing_set_spec = "1^7 2^-2 3^-1";

/// One record per line: `name|spec|modulus|classes|onset|horizon`.
std::string format_record(const CorpusRecord &record);
CorpusRecord parse_record(std::string_view line);

/// Reads records, skipping blank lines and lines starting with '#'.
std::vector<CorpusRecord> read_corpus(std::istream &in);
void write_corpus(std::ostream &out, const std::vector<CorpusRecord> &records);

} // namespace qsign

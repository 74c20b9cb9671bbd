#include "qsign/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <map>
#include <ostream>

namespace qsign {

namespace {

// max over attained residues of the least value landing there, minus the modulus
long onset_from_minima(const std::map<long, long> &least, long modulus)
{
    long top = std::numeric_limits<long>::min();
    for (const auto &[residue, value] : least) {
        top = std::max(top, value);
    }
    return top - modulus;
}

CatalogEntry fixed(std::string id, std::string_view spec, std::string_view classes)
{
    return CatalogEntry{std::move(id), "", parse_spec(spec), SignPattern::from_string(classes, 0)};
}

long parse_field(std::string_view field, std::string_view name)
{
    long v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InvalidParameter(std::string(name), "malformed field '" + std::string(field) + "'");
    }
    return v;
}

} // namespace

CatalogEntry triangular_case(long p)
{
    if (p < 3 || !is_prime(p)) {
        throw InvalidParameter("p", "must be a prime >= 3, got " + std::to_string(p));
    }
    SignPattern pattern;
    pattern.modulus = p;
    pattern.classes.assign(static_cast<std::size_t>(p), SignClass::Zero);
    std::map<long, long> least;
    for (long r = 0; r < p; ++r) {
        const long tri = r * (r + 1) / 2;
        pattern.classes[static_cast<std::size_t>(tri % p)] = SignClass::Positive;
        auto [it, fresh] = least.emplace(tri % p, tri);
        if (!fresh) {
            it->second = std::min(it->second, tri);
        }
    }
    pattern.onset = onset_from_minima(least, p);
    return CatalogEntry{"1", "p=" + std::to_string(p), EtaQuotientSpec{{{2, 2, 2}, {1, 1, -1}, {p, p, -1}}}, pattern};
}

CatalogEntry square_case(long p)
{
    if (p != 1 && (p % 2 == 0 || !is_prime(p))) {
        throw InvalidParameter("p", "must be 1 or an odd prime, got " + std::to_string(p));
    }
    const long modulus = 4 * p;
    SignPattern pattern;
    pattern.modulus = modulus;
    pattern.classes.assign(static_cast<std::size_t>(modulus), SignClass::Zero);
    for (long t = 0; t < p; ++t) {
        pattern.classes[static_cast<std::size_t>((4 * t * t) % modulus)] = SignClass::Positive;
        pattern.classes[static_cast<std::size_t>((4 * t * t + 4 * t + 1) % modulus)] = SignClass::Negative;
    }
    std::map<long, long> least;
    for (long r = 0; r < modulus; ++r) {
        auto [it, fresh] = least.emplace((r * r) % modulus, r * r);
        if (!fresh) {
            it->second = std::min(it->second, r * r);
        }
    }
    pattern.onset = onset_from_minima(least, modulus);
    return CatalogEntry{"2", "p=" + std::to_string(p),
                        EtaQuotientSpec{{{1, 1, 2}, {2, 2, -1}, {modulus, modulus, -1}}}, pattern};
}

CatalogEntry cubic_case(long i)
{
    if (i < 11) {
        throw InvalidParameter("i", "must be >= 11, got " + std::to_string(i));
    }
    const EtaQuotientSpec spec{{{1, 1, 9}, {3, 3, -i}}};
    const std::string params = "i=" + std::to_string(i);
    if (i == 11) {
        return CatalogEntry{"9a", params, spec, SignPattern::from_string("+-+--+--+", 0)};
    }
    if (i == 12) {
        return CatalogEntry{"9b", params, spec, SignPattern::from_string("+-+0-+0-+", 0)};
    }
    return CatalogEntry{"9c", params, spec, SignPattern::from_string("+-+", 0)};
}

std::vector<CatalogEntry> theorem2_catalog()
{
    std::vector<CatalogEntry> out;
    for (long p : {3L, 5L, 7L}) {
        out.push_back(triangular_case(p));
    }
    for (long p : {1L, 3L, 5L, 7L}) {
        out.push_back(square_case(p));
    }
    out.push_back(fixed("3", "1^3 3^-2", "+-0"));
    out.push_back(fixed("4", "1^2 2^-1 3^-2", "+-0"));
    out.push_back(fixed("5", "1^4 2^-2 4^-1", "+-+0"));
    out.push_back(fixed("6", "2^10 1^-4 4^-5", "+++0"));
    out.push_back(fixed("7", "1^2 5^-3", "+--++"));
    out.push_back(fixed("8", "1^9 3^-9", "+-+--+0-+"));
    for (long i = 11; i <= 15; ++i) {
        out.push_back(cubic_case(i));
    }
    return out;
}

std::vector<CorpusRecord> corpus()
{
    // (-q^a; q^b) = (q^{2a}; q^{2b}) / (q^a; q^b) turns the plus-signed
    // products into ordinary Pochhammer factors.
    const auto rec = [](std::string name, std::string spec, std::string_view classes, long onset) {
        return CorpusRecord{std::move(name), std::move(spec), SignPattern::from_string(classes, onset), 5000};
    };
    return {
        rec("C_2^1_5^-1", "2^1 5^-1", "+0-0-", -1),
        rec("C_1^4_2^2_4^-2", "1^4 2^2 4^-2", "+-0+--0+", 0),
        rec("C_1^9_3^-5", "1^9 3^-5", "+-+--++-+", 0),
        rec("F_vanishing", "3.8^1 5.8^1 1.8^-1 7.8^-1", "???0", -1),
        rec("hirschhorn_a", "2.10^1 8.10^1 1.5^-1 4.5^-1 1.10^3 9.10^3", "??0?0", -1),
        rec("hirschhorn_b", "4.10^1 6.10^1 2.5^-1 3.5^-1 3.10^3 7.10^3", "?0??0", -1),
        rec("R_rogers_ramanujan", "2.5^1 3.5^1 1.5^-1 4.5^-1", "++---", 9),
    };
}

std::string format_record(const CorpusRecord &record)
{
    return record.name + '|' + record.spec + '|' + std::to_string(record.pattern.modulus) + '|'
           + record.pattern.class_string() + '|' + std::to_string(record.pattern.onset) + '|'
           + std::to_string(record.horizon);
}

CorpusRecord parse_record(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto bar = line.find('|', start);
        fields.push_back(line.substr(start, bar - start));
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    if (fields.size() != 6) {
        throw InvalidParameter("record", "expected 6 '|'-separated fields, got " + std::to_string(fields.size()));
    }
    CorpusRecord r;
    r.name = std::string(fields[0]);
    r.spec = std::string(fields[1]);
    parse_spec(r.spec);
    const long modulus = parse_field(fields[2], "modulus");
    r.pattern = SignPattern::from_string(fields[3], parse_field(fields[4], "onset"));
    if (r.pattern.modulus != modulus) {
        throw InvalidParameter("modulus", "class string has length " + std::to_string(r.pattern.modulus)
                                              + " but modulus is " + std::to_string(modulus));
    }
    const long horizon = parse_field(fields[5], "horizon");
    if (horizon < 0) {
        throw InvalidParameter("horizon", "must be >= 0");
    }
    r.horizon = static_cast<std::size_t>(horizon);
    return r;
}

std::vector<CorpusRecord> read_corpus(std::istream &in)
{
    std::vector<CorpusRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(parse_record(std::string_view(line).substr(first, last - first + 1)));
    }
    return out;
}

void write_corpus(std::ostream &out, const std::vector<CorpusRecord> &records)
{
    for (const auto &r : records) {
        out << format_record(r) << '\n';
    }
}

} // namespace qsign

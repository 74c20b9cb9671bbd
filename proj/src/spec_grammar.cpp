#include <cctype>
#include <charconv>
#include <sstream>

#include "qsign/qproducts.hpp"

namespace qsign {

namespace {

long parse_long(std::string_view token, std::string_view field, std::string_view whole)
{
    long value = 0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        throw InvalidParameter("spec", "malformed token '" + std::string(token) + "' in '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

EtaQuotientSpec parse_spec(std::string_view text)
{
    EtaQuotientSpec spec;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == text.size()) {
            break;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        const auto caret = token.find('^');
        const std::string_view base = token.substr(0, caret);
        PochhammerFactor f;
        f.delta = caret == std::string_view::npos ? 1 : parse_long(token, token.substr(caret + 1), text);
        const auto dot = base.find('.');
        if (dot == std::string_view::npos) {
            f.a = f.b = parse_long(token, base, text);
        } else {
            f.a = parse_long(token, base.substr(0, dot), text);
            f.b = parse_long(token, base.substr(dot + 1), text);
        }
        spec.factors.push_back(f);
    }
    validate(spec);
    return spec;
}

std::string to_string(const EtaQuotientSpec &spec)
{
    std::ostringstream out;
    bool first = true;
    for (const auto &f : spec.factors) {
        if (!first) {
            out << ' ';
        }
        first = false;
        if (f.a == f.b) {
            out << f.a;
        } else {
            out << f.a << '.' << f.b;
        }
        out << '^' << f.delta;
    }
    return out.str();
}

void validate(const EtaQuotientSpec &spec)
{
    if (spec.factors.empty()) {
        throw InvalidParameter("spec", "an eta quotient needs at least one factor");
    }
    for (const auto &f : spec.factors) {
        if (f.a < 1) {
            throw InvalidParameter("a", "offset must be >= 1, got " + std::to_string(f.a));
        }
        if (f.b < 1) {
            throw InvalidParameter("b", "step must be >= 1, got " + std::to_string(f.b));
        }
    }
}

} // namespace qsign

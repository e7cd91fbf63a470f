#include "gshape/literal.hpp"

#include <cctype>
#include <cstdint>

namespace gshape {

namespace {

bool digit(char c) { return c >= '0' && c <= '9'; }

// Parses [-]?digits starting at pos; advances pos past the number.
std::int64_t parse_signed(const std::string& s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos >= s.size() || !digit(s[pos])) throw parse_error("expected digit", pos);
    std::int64_t v = 0;
    while (pos < s.size() && digit(s[pos])) {
        const std::int64_t d = s[pos] - '0';
        if (v > (INT64_MAX - d) / 10) throw parse_error("integer literal too large", pos);
        v = v * 10 + d;
        ++pos;
    }
    return neg ? -v : v;
}

}  // namespace

GaussianInt parse_gaussian(const std::string& text) {
    std::size_t pos = 0;
    if (text.empty()) throw parse_error("empty literal", 0);
    const std::int64_t first = parse_signed(text, pos);

    if (pos == text.size()) return GaussianInt(first, 0);

    if (text[pos] == 'i') {
        ++pos;
        if (pos != text.size()) throw parse_error("trailing characters", pos);
        return GaussianInt(0, first);
    }

    // a +/- b i, with at most one space on each side of the sign.
    if (text[pos] == ' ') ++pos;
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        throw parse_error("expected '+' or '-'", pos);
    const bool neg = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || !digit(text[pos])) throw parse_error("expected digit", pos);
    std::int64_t b = 0;
    while (pos < text.size() && digit(text[pos])) {
        const std::int64_t d = text[pos] - '0';
        if (b > (INT64_MAX - d) / 10) throw parse_error("integer literal too large", pos);
        b = b * 10 + d;
        ++pos;
    }
    if (pos >= text.size() || text[pos] != 'i') throw parse_error("expected 'i'", pos);
    ++pos;
    if (pos != text.size()) throw parse_error("trailing characters", pos);
    return GaussianInt(first, neg ? -b : b);
}

std::string format_gaussian(GaussianInt z) {
    if (z.im == 0) return std::to_string(z.re);
    if (z.re == 0) return std::to_string(z.im) + "i";
    std::string s = std::to_string(z.re);
    if (z.im > 0)
        s += "+" + std::to_string(z.im) + "i";
    else
        s += "-" + std::to_string(-z.im) + "i";
    return s;
}

}  // namespace gshape

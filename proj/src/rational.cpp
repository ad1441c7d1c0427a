#include "tensorann/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tensorann {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_signed_digits(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    if (!is_signed_digits(num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Rational r(parse_integer(num));
    if (slash != std::string_view::npos) {
        std::string_view den = trim(s.substr(slash + 1));
        if (!is_signed_digits(den)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        Integer d = parse_integer(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        r = Rational(parse_integer(num), d);
        r.canonicalize();
    }
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string_view s = trim(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join_rationals(const std::vector<Rational>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

}  // namespace tensorann

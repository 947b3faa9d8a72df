#include "mwisp/geom/rational.hpp"

#include "mwisp/error.hpp"

#include <cctype>

namespace mwisp::geom {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

BigInt parse_integer(std::string_view text) {
    if (!valid_integer_text(text))
        throw Error(ErrorCode::InvalidInput, "not an integer: '" + std::string(text) + "'");
    return BigInt(strip_plus(text), 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto num_text = text.substr(0, slash);
    auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(num_text) || !valid_integer_text(den_text) ||
        den_text.front() == '-' || den_text.front() == '+')
        throw Error(ErrorCode::InvalidInput, "not a rational p/q: '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: '" + std::string(text) + "'");
    Rational r(BigInt(strip_plus(num_text), 10), den);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace mwisp::geom

#include "flipbraid/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "flipbraid/errors.hpp"

namespace flipbraid {

namespace {

// Accepts [+-]?digits; returns the index one past the last digit.
std::size_t scan_integer(std::string_view text, std::size_t pos, bool allow_sign) {
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected digits in rational \"" + std::string(text) + "\"", pos);
    return pos;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::size_t num_end = scan_integer(text, 0, true);
    std::string num(text.substr(0, num_end));
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (num_end == text.size()) return Rational(mpq_class(mpz_class(num)));
    if (text[num_end] != '/') throw ParseError("unexpected character in rational \"" + std::string(text) + "\"", num_end);
    const std::size_t den_end = scan_integer(text, num_end + 1, false);
    if (den_end != text.size()) throw ParseError("trailing characters in rational \"" + std::string(text) + "\"", den_end);
    mpz_class den(std::string(text.substr(num_end + 1)));
    if (den == 0) throw ParseError("zero denominator in rational \"" + std::string(text) + "\"", num_end + 1);
    mpq_class q(mpz_class(num), den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational inverse_power_of_two(unsigned k) {
    mpz_class den = 1;
    den <<= k;
    return Rational(mpq_class(mpz_class(1), den));
}

}  // namespace flipbraid

#include "keypoly/value.hpp"

#include <cctype>
#include <ostream>

namespace keypoly {

const Rational& Value::major() const {
    if (infinite_) throw std::domain_error("major() of inf");
    return major_;
}

const Rational& Value::minor() const {
    if (infinite_) throw std::domain_error("minor() of inf");
    return minor_;
}

Value Value::operator+(const Value& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return Value(major_ + other.major_, minor_ + other.minor_);
}

Value& Value::operator+=(const Value& other) {
    *this = *this + other;
    return *this;
}

Value Value::operator-(const Value& other) const {
    if (infinite_ || other.infinite_) throw std::domain_error("subtraction involving inf");
    return Value(major_ - other.major_, minor_ - other.minor_);
}

Value Value::negated() const {
    if (infinite_) throw std::domain_error("negation of inf");
    return Value(-major_, -minor_);
}

int Value::cmp(const Value& other) const {
    if (infinite_ && other.infinite_) return 0;
    if (infinite_) return 1;
    if (other.infinite_) return -1;
    int c = ::cmp(major_, other.major_);
    if (c != 0) return c < 0 ? -1 : 1;
    c = ::cmp(minor_, other.minor_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Value Value::divided_by(unsigned long r) const {
    if (r == 0) throw std::invalid_argument("division of a value by zero");
    if (infinite_) throw std::domain_error("division of inf by an integer");
    Rational d(static_cast<long>(r));
    return Value(major_ / d, minor_ / d);
}

Value Value::times(unsigned long k) const {
    if (infinite_) {
        if (k == 0) throw std::domain_error("0 * inf is undefined");
        return infinity();
    }
    Rational m(static_cast<long>(k));
    return Value(major_ * m, minor_ * m);
}

bool Value::is_torsion_over_base() const {
    if (infinite_) throw std::domain_error("torsion test on inf");
    return minor_ == 0;
}

std::string Value::str() const {
    if (infinite_) return "inf";
    if (minor_ == 0) return to_string(major_);
    return "(" + to_string(major_) + "," + to_string(minor_) + ")";
}

Value Value::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "inf") return infinity();
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("bad value literal: '" + text + "'");
        const std::string body = s.substr(1, s.size() - 2);
        const auto comma = body.find(',');
        if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("bad value literal: '" + text + "'");
        return Value(parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1)));
    }
    return Value(parse_rational(s));
}

Value min(const Value& a, const Value& b) { return a <= b ? a : b; }
Value max(const Value& a, const Value& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace keypoly

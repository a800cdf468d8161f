#include "keypoly/rational.hpp"

#include <cctype>

namespace keypoly {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer rational_height(const Rational& r) {
    Integer num = abs(r.get_num());
    const Integer& den = r.get_den();
    return num > den ? num : den;
}

long padic_order(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("padic_order of zero");
    Integer reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace keypoly

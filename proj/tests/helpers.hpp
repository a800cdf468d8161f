#pragma once

#include "keypoly/corpus.hpp"
#include "keypoly/io.hpp"
#include "keypoly/keytheory.hpp"

namespace kt {

using namespace keypoly;

inline Poly P(const std::string& s) { return Poly::parse(s); }
inline Value W(const std::string& s) { return Value::parse(s); }
inline Rational R(const std::string& s) { return parse_rational(s); }

inline MonomialValuation monomial(long p, const std::string& b, const std::string& delta) {
    return MonomialValuation(BaseValuation(Integer(p)), R(b), W(delta));
}

inline Valuation chain1(long p, const std::string& b, const std::string& delta, const std::string& q,
                        const std::string& gamma) {
    return Valuation(AugmentedChain(monomial(p, b, delta), {{P(q), W(gamma)}}));
}

// the running example: nu_{0,1/2} at p=2 augmented by x^2-2 |-> 2
inline Valuation demo_chain() { return chain1(2, "0", "1/2", "x^2-2", "2"); }

inline PcsPrefix pcs(long p, const std::vector<std::string>& elems) {
    std::vector<Rational> rs;
    for (const auto& e : elems) rs.push_back(R(e));
    return PcsPrefix(BaseValuation(Integer(p)), std::move(rs));
}

}  // namespace kt

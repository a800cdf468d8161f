#pragma once

#include <iosfwd>
#include <string>

#include "keypoly/rational.hpp"

namespace keypoly {

// Element of the ordered abelian group Q (+) Q with lexicographic order,
// extended by an absorbing maximal element "inf".  All valuation outputs
// live here; the base value group embeds as the rank-1 slice (a, 0).
//
// Finite components are kept in lowest terms so equality is structural.
class Value {
public:
    Value() : major_(0), minor_(0), infinite_(false) {}
    explicit Value(Rational major) : major_(std::move(major)), minor_(0), infinite_(false) {}
    Value(Rational major, Rational minor)
        : major_(std::move(major)), minor_(std::move(minor)), infinite_(false) {}

    static Value infinity() {
        Value v;
        v.infinite_ = true;
        return v;
    }
    static Value zero() { return Value(); }

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    // Both accessors require a finite value.
    const Rational& major() const;
    const Rational& minor() const;

    // inf is absorbing.
    Value operator+(const Value& other) const;
    Value& operator+=(const Value& other);
    // Both operands must be finite.
    Value operator-(const Value& other) const;
    Value negated() const;

    // Lexicographic total order, inf strictly greatest: -1, 0, +1.
    int cmp(const Value& other) const;
    bool operator==(const Value& other) const { return cmp(other) == 0; }
    bool operator!=(const Value& other) const { return cmp(other) != 0; }
    bool operator<(const Value& other) const { return cmp(other) < 0; }
    bool operator<=(const Value& other) const { return cmp(other) <= 0; }
    bool operator>(const Value& other) const { return cmp(other) > 0; }
    bool operator>=(const Value& other) const { return cmp(other) >= 0; }

    // Exact componentwise division (the group is divisible).  r must be
    // positive and the value finite.
    Value divided_by(unsigned long r) const;

    // k * v for a nonnegative integer k; k * inf = inf requires k > 0.
    Value times(unsigned long k) const;

    // True iff some integer multiple lands in the base slice Z x {0} up to
    // divisibility in Q, i.e. iff the minor component vanishes.  Requires a
    // finite value.
    bool is_torsion_over_base() const;

    // Canonical text form: "inf", rank-1 shorthand "a/b" when minor = 0,
    // otherwise "(a/b,c/d)".  parse() accepts all three shapes with
    // arbitrary interior whitespace.
    std::string str() const;
    static Value parse(const std::string& text);

private:
    Rational major_;
    Rational minor_;
    bool infinite_;
};

Value min(const Value& a, const Value& b);
Value max(const Value& a, const Value& b);

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace keypoly

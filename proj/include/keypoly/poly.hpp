#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "keypoly/rational.hpp"
#include "keypoly/value.hpp"

namespace keypoly {

// Dense univariate polynomial over Q with exact coefficients.  coeff(i) is
// the coefficient of x^i; trailing zeros are stripped, so the zero
// polynomial is the empty sequence and degree() is well-defined.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);

    static Poly from_coeffs(std::vector<Rational> coeffs);
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly x() { return monomial(Rational(1), 1); }
    static Poly monomial(Rational c, std::size_t i);
    // prod (x - a) over the given roots, with multiplicity.
    static Poly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    bool is_monic() const;
    // Index of the lowest nonzero coefficient; requires a nonzero input.
    std::size_t order_at_zero() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& scalar) const;
    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Poly& other) const { return coeffs_ != other.coeffs_; }

    Rational evaluate(const Rational& a) const;

    // Exact division with remainder: p = quot * q + rem, rem = 0 or
    // deg rem < deg q.  q must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

    // Base-q positional decomposition p = sum p_i q^i with deg p_i < deg q.
    // q must be monic of degree >= 1.  The zero polynomial expands to {0}.
    std::vector<Poly> q_expansion(const Poly& q) const;

    // r-th Hasse derivative: sum_{i>=r} binom(i,r) c_i x^(i-r).  Defined
    // combinatorially so it stays valid verbatim in any characteristic.
    Poly hasse_derivative(unsigned long r) const;

    // g with g(x) = f(x+b); coefficient i of g equals (hasse_derivative(i))(b).
    Poly taylor_shift(const Rational& b) const;

    // Term syntax "c*x^i" with rational c; implicit coefficients, exponents
    // and '*' are accepted ("x^2 - 2", "1/2x^3 + x").  str() emits the
    // canonical descending-degree form.
    std::string str() const;
    static Poly parse(const std::string& text);

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Lower convex hull of {(i, v_p(coeff_i)) : coeff_i != 0}.  The slope list
// holds root valuations in the algebraic closure (the negatives of the
// geometric hull slopes), ascending, with multiplicities summing to
// deg(f) - order_at_zero; roots at 0 are counted separately.
struct NewtonPolygon {
    std::vector<std::pair<long, Value>> vertices;
    std::vector<std::pair<Rational, long>> slopes;
    std::size_t order_at_zero = 0;
};

// f must be nonzero and p prime.
NewtonPolygon newton_polygon(const Poly& f, const Integer& p);

// Bounded semi-decision of irreducibility over Q for monic f.
//
// Linear factors are decided exactly (quadratics via the discriminant,
// higher degrees via the integer rational-root test after clearing
// denominators).  Factors of degree >= 2 are searched over monic integer
// candidates with |coefficient| <= height_bound; the verdict is Irreducible
// only when the bound dominates the exact factor-coefficient bound derived
// from a Cauchy root radius, otherwise UnknownAtBound.  A Reducible verdict
// always carries a factor re-verified by exact division.
struct IrreducibilityVerdict {
    enum class Kind { Irreducible, Reducible, UnknownAtBound };
    Kind kind = Kind::UnknownAtBound;
    Poly factor;
    std::string note;

    bool irreducible() const { return kind == Kind::Irreducible; }
    bool reducible() const { return kind == Kind::Reducible; }
};

IrreducibilityVerdict is_irreducible_bounded(const Poly& f, const Integer& height_bound);

// Resultant of two nonzero polynomials over Q.
Rational resultant(const Poly& a, const Poly& b);

// Unique polynomial of degree < points.size() through the given (node,
// value) pairs; nodes must be pairwise distinct.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace keypoly

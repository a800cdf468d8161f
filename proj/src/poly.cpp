#include "keypoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace keypoly {

namespace {

Rational rational_pow(const Rational& base, long exp) {
    Rational out(1);
    for (long i = 0; i < exp; ++i) out *= base;
    return out;
}

Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

Poly::Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::monomial(Rational c, std::size_t i) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(i + 1, Rational(0));
        p.coeffs_[i] = std::move(c);
    }
    return p;
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p = one();
    for (const Rational& a : roots) p = p * (x() - Poly(a));
    return p;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

std::size_t Poly::order_at_zero() const {
    if (is_zero()) throw std::domain_error("order at zero of the zero polynomial");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return from_coeffs(std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (Rational& c : out) c = -c;
    return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Rational& scalar) const {
    std::vector<Rational> out(coeffs_);
    for (Rational& c : out) c *= scalar;
    return from_coeffs(std::move(out));
}

Rational Poly::evaluate(const Rational& a) const {
    Rational out(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * a + coeffs_[i];
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.degree() < q.degree()) return {zero(), p};
    std::vector<Rational> rem(p.coeffs_);
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<Rational> quot(rem.size() - dq, Rational(0));
    const Rational& lead = q.leading();
    for (std::size_t i = rem.size(); i-- > dq;) {
        if (rem[i] == 0) continue;
        Rational factor = rem[i] / lead;
        quot[i - dq] = factor;
        for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= factor * q.coeffs_[j];
    }
    return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
}

std::vector<Poly> Poly::q_expansion(const Poly& q) const {
    if (q.degree() < 1) throw std::invalid_argument("q-expansion requires deg(q) >= 1");
    if (!q.is_monic()) throw std::invalid_argument("q-expansion requires monic q");
    std::vector<Poly> parts;
    if (is_zero()) {
        parts.push_back(zero());
        return parts;
    }
    Poly rest = *this;
    while (!rest.is_zero()) {
        auto [quot, rem] = divmod(rest, q);
        parts.push_back(rem);
        rest = quot;
    }
    return parts;
}

Poly Poly::hasse_derivative(unsigned long r) const {
    if (r == 0) return *this;
    if (static_cast<long>(r) > degree()) return zero();
    std::vector<Rational> out(coeffs_.size() - r, Rational(0));
    for (std::size_t i = r; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out[i - r] = coeffs_[i] * Rational(binomial(i, r));
    }
    return from_coeffs(std::move(out));
}

Poly Poly::taylor_shift(const Rational& b) const {
    if (b == 0 || is_zero()) return *this;
    // Horner in (x + b): g = (...(c_n (x+b) + c_{n-1})(x+b) ...) + c_0.
    std::vector<Rational> acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc.insert(acc.begin(), Rational(0));
        for (std::size_t j = 0; j + 1 < acc.size(); ++j) acc[j] += acc[j + 1] * b;
        if (acc.empty()) acc.push_back(Rational(0));
        acc[0] += coeffs_[i];
    }
    return from_coeffs(std::move(acc));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        Rational mag = abs(c);
        if (i == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad polynomial at position " + std::to_string(pos) + ": " + what);
    }

    std::string read_uint() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected a digit");
        return s.substr(start, pos - start);
    }

    Rational read_rational() {
        std::string num = read_uint();
        if (!done() && peek() == '/') {
            ++pos;
            std::string den = read_uint();
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    // coefficient * x^exponent, sign already consumed.
    std::pair<Rational, unsigned long> read_term() {
        Rational coef(1);
        bool saw_coef = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = read_rational();
            saw_coef = true;
            if (!done() && peek() == '*') ++pos;
        }
        unsigned long exp = 0;
        if (!done() && peek() == 'x') {
            ++pos;
            exp = 1;
            if (!done() && peek() == '^') {
                ++pos;
                exp = std::stoul(read_uint());
            }
        } else if (!saw_coef) {
            fail("expected a term");
        }
        return {coef, exp};
    }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty polynomial literal");

    PolyParser p(s);
    std::vector<Rational> coeffs;
    bool expect_term = true;
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
        sign = p.peek() == '-' ? -1 : 1;
        ++p.pos;
    }
    while (expect_term) {
        auto [coef, exp] = p.read_term();
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, Rational(0));
        coeffs[exp] += sign * coef;
        expect_term = false;
        if (!p.done()) {
            if (p.peek() == '+' || p.peek() == '-') {
                sign = p.peek() == '-' ? -1 : 1;
                ++p.pos;
                expect_term = true;
            } else {
                p.fail("unexpected character '" + std::string(1, p.peek()) + "'");
            }
        }
    }
    return from_coeffs(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

long padic_order_rational(const Rational& c, const Integer& p) {
    long v = 0;
    if (c.get_num() != 0) v += padic_order(c.get_num(), p);
    v -= padic_order(c.get_den(), p);
    return v;
}

}  // namespace

NewtonPolygon newton_polygon(const Poly& f, const Integer& p) {
    if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
    if (p < 2) throw std::invalid_argument("Newton polygon requires a prime");

    struct Pt {
        long i;
        long v;
    };
    std::vector<Pt> points;
    for (long i = 0; i <= f.degree(); ++i) {
        const Rational& c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        points.push_back({i, padic_order_rational(c, p)});
    }

    // Monotone-chain lower hull; collinear interior points are dropped.
    std::vector<Pt> hull;
    for (const Pt& pt : points) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            Integer lhs = Integer(b.v - a.v) * Integer(pt.i - b.i);
            Integer rhs = Integer(pt.v - b.v) * Integer(b.i - a.i);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.order_at_zero = static_cast<std::size_t>(points.front().i);
    for (const Pt& v : hull) np.vertices.emplace_back(v.i, Value(Rational(v.v)));
    for (std::size_t k = hull.size(); k-- > 1;) {
        const Pt& a = hull[k - 1];
        const Pt& b = hull[k];
        Rational slope(b.v - a.v, b.i - a.i);
        slope.canonicalize();
        np.slopes.emplace_back(-slope, b.i - a.i);
    }
    return np;
}

// ---------------------------------------------------------------------------
// Bounded irreducibility
// ---------------------------------------------------------------------------

namespace {

constexpr long kTrialDivisionBudget = 300000;
constexpr long kDivisorBudget = 200000;
constexpr long kFactorSearchBudget = 500000;

// Monic integer polynomial d^n f(y/d) with d the common denominator.
struct Integerized {
    std::vector<Integer> coeffs;  // degree n, coeffs[n] = 1
    Integer d;
};

Integerized integerize(const Poly& f) {
    Integerized out;
    out.d = 1;
    for (const Rational& c : f.coeffs()) mpz_lcm(out.d.get_mpz_t(), out.d.get_mpz_t(), c.get_den().get_mpz_t());
    const std::size_t n = static_cast<std::size_t>(f.degree());
    out.coeffs.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational scaled = f.coeff(i) * Rational(integer_pow(out.d, static_cast<unsigned long>(n - i)));
        out.coeffs[i] = scaled.get_num();  // exact: denominator divides d^(n-i)
    }
    return out;
}

// Smallest integer radius R with R^n >= sum |a_i| R^i; every complex root of
// the monic integer polynomial has modulus <= R.
Integer cauchy_radius(const std::vector<Integer>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    Integer maxabs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Integer a = abs(coeffs[i]);
        if (a > maxabs) maxabs = a;
    }
    auto dominated = [&](const Integer& m) {
        Integer lhs = integer_pow(m, static_cast<unsigned long>(n));
        Integer rhs = 0;
        for (std::size_t i = 0; i < n; ++i) rhs += abs(coeffs[i]) * integer_pow(m, static_cast<unsigned long>(i));
        return lhs >= rhs;
    };
    Integer lo = 1, hi = maxabs + 1;
    if (dominated(lo)) return lo;
    while (lo + 1 < hi) {
        Integer mid = (lo + hi) / 2;
        if (dominated(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

bool trial_factorize(Integer m, std::vector<std::pair<Integer, unsigned long>>& out) {
    long budget = kTrialDivisionBudget;
    auto strip = [&](const Integer& p) {
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    Integer p = 3;
    while (p * p <= m) {
        if (--budget < 0) return false;
        strip(p);
        p += 2;
    }
    if (m > 1) out.emplace_back(m, 1);
    return true;
}

// All positive divisors <= cap, or failure when there are too many.
bool divisors_up_to(const std::vector<std::pair<Integer, unsigned long>>& factors, const Integer& cap,
                    std::vector<Integer>& out) {
    out.assign(1, Integer(1));
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            if (pk > cap) break;
            for (std::size_t i = 0; i < base; ++i) {
                Integer d = out[i] * pk;
                if (d <= cap) out.push_back(d);
                if (out.size() > static_cast<std::size_t>(kDivisorBudget)) return false;
            }
        }
    }
    return true;
}

Integer evaluate_integer(const std::vector<Integer>& coeffs, const Integer& y) {
    Integer out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * y + coeffs[i];
    return out;
}

// Perfect-square test for a nonnegative rational; writes the exact square
// root when it exists.
bool rational_square_root(const Rational& r, Rational& root) {
    if (r < 0) return false;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return false;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den().get_mpz_t());
    root = Rational(num) / Rational(den);
    return true;
}

IrreducibilityVerdict reducible(const Poly& f, Poly factor) {
    auto [quot, rem] = Poly::divmod(f, factor);
    if (!rem.is_zero()) throw std::logic_error("irreducibility witness failed exact division");
    IrreducibilityVerdict v;
    v.kind = IrreducibilityVerdict::Kind::Reducible;
    v.factor = std::move(factor);
    return v;
}

}  // namespace

IrreducibilityVerdict is_irreducible_bounded(const Poly& f, const Integer& height_bound) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("irreducibility test requires a monic polynomial of degree >= 1");
    if (height_bound < 1) throw std::invalid_argument("height bound must be positive");

    IrreducibilityVerdict verdict;
    const int n = f.degree();
    if (n == 1) {
        verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
        return verdict;
    }

    if (n == 2) {
        // x^2 + bx + c has a rational root iff b^2 - 4c is a rational square.
        Rational disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        Rational sq;
        if (rational_square_root(disc, sq)) {
            Rational root = (-f.coeff(1) + sq) / 2;
            return reducible(f, Poly::x() - Poly(root));
        }
        verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
        verdict.note = "no rational root (discriminant is not a square)";
        return verdict;
    }

    if (f.coeff(0) == 0) return reducible(f, Poly::x());

    const Integerized g = integerize(f);
    const Integer radius = cauchy_radius(g.coeffs);

    // Rational roots of f correspond to integer roots of g, which divide g(0).
    bool linear_complete = false;
    {
        std::vector<std::pair<Integer, unsigned long>> factors;
        if (trial_factorize(abs(g.coeffs[0]), factors)) {
            std::vector<Integer> divisors;
            if (divisors_up_to(factors, radius, divisors)) {
                linear_complete = true;
                for (const Integer& r : divisors) {
                    for (int sign : {1, -1}) {
                        Integer root = sign * r;
                        if (evaluate_integer(g.coeffs, root) == 0) {
                            Rational fr = Rational(root) / Rational(g.d);
                            return reducible(f, Poly::x() - Poly(fr));
                        }
                    }
                }
            }
        }
    }

    if (n == 3) {
        if (linear_complete) {
            verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
            verdict.note = "no rational root (complete divisor search)";
        } else {
            verdict.note = "rational-root divisor search exceeded its budget";
        }
        return verdict;
    }

    // Monic integer factors of degree k: coefficient j is an elementary
    // symmetric function of <= k roots of modulus <= radius.
    bool all_complete = linear_complete;
    bool truncated = false;
    long budget = kFactorSearchBudget;
    Poly gpoly;
    {
        std::vector<Rational> gq(g.coeffs.size());
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) gq[j] = Rational(g.coeffs[j]);
        gpoly = Poly::from_coeffs(std::move(gq));
    }
    for (int k = 2; k <= n / 2; ++k) {
        std::vector<Integer> limit(static_cast<std::size_t>(k));
        bool complete_k = true;
        for (int j = 0; j < k; ++j) {
            Integer bound = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(k - j)) *
                            integer_pow(radius, static_cast<unsigned long>(k - j));
            if (bound > height_bound) {
                bound = height_bound;
                complete_k = false;
            }
            limit[static_cast<std::size_t>(j)] = bound;
        }
        all_complete = all_complete && complete_k;

        std::vector<Integer> h(static_cast<std::size_t>(k) + 1);
        h[static_cast<std::size_t>(k)] = 1;
        std::vector<Integer> idx(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = -limit[static_cast<std::size_t>(j)];
        bool running = true;
        while (running) {
            if (--budget < 0) {
                truncated = true;
                break;
            }
            bool worth_checking = idx[0] != 0 && g.coeffs[0] % idx[0] == 0;
            if (worth_checking) {
                for (int j = 0; j < k; ++j) h[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j)];
                std::vector<Rational> hq(h.size());
                for (std::size_t j = 0; j < h.size(); ++j) hq[j] = Rational(h[j]);
                Poly candidate = Poly::from_coeffs(std::move(hq));
                auto [quot, rem] = Poly::divmod(gpoly, candidate);
                if (rem.is_zero()) {
                    // Map the factor of g back to a monic factor of f.
                    std::vector<Rational> fc(h.size());
                    for (std::size_t j = 0; j < h.size(); ++j)
                        fc[j] = Rational(h[j]) / Rational(integer_pow(g.d, static_cast<unsigned long>(h.size() - 1 - j)));
                    return reducible(f, Poly::from_coeffs(std::move(fc)));
                }
            }
            // odometer step over [-limit_j, limit_j], constant term fastest
            int j = 0;
            for (; j < k; ++j) {
                idx[static_cast<std::size_t>(j)] += 1;
                if (idx[static_cast<std::size_t>(j)] <= limit[static_cast<std::size_t>(j)]) break;
                idx[static_cast<std::size_t>(j)] = -limit[static_cast<std::size_t>(j)];
            }
            running = j < k;
        }
        if (truncated) break;
    }

    if (truncated) {
        verdict.note = "factor search truncated (candidate budget exhausted)";
        return verdict;
    }
    if (all_complete) {
        verdict.kind = IrreducibilityVerdict::Kind::Irreducible;
        verdict.note = "complete search (height bound dominates the factor-coefficient bound)";
    } else {
        verdict.note = "no factor of coefficient height <= " + to_string(Rational(height_bound)) +
                       "; completeness bound not reached";
    }
    return verdict;
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
    const long m = a.degree();
    const long n = b.degree();
    if (n == 0) return rational_pow(b.leading(), m);
    if (m == 0) return rational_pow(a.leading(), n);
    if (m < n) {
        Rational r = resultant(b, a);
        return (m * n) % 2 != 0 ? -r : r;
    }
    auto [quot, rem] = Poly::divmod(a, b);
    if (rem.is_zero()) return Rational(0);
    Rational out = rational_pow(b.leading(), m - rem.degree()) * resultant(b, rem);
    return (m * n) % 2 != 0 ? -out : out;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Poly out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::one();
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * (Poly::x() - Poly(points[j].first));
            denom *= points[i].first - points[j].first;
        }
        if (denom == 0) throw std::invalid_argument("interpolation nodes must be distinct");
        out = out + basis * (points[i].second / denom);
    }
    return out;
}

}  // namespace keypoly

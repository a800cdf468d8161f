#include "keypoly/valuation.hpp"

#include <stdexcept>

namespace keypoly {

BaseValuation::BaseValuation(Integer p) : p_(std::move(p)) {
    if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("base valuation requires a prime");
}

Value BaseValuation::eval(const Rational& c) const {
    if (c == 0) return Value::infinity();
    long v = 0;
    v += padic_order(c.get_num(), p_);
    v -= padic_order(c.get_den(), p_);
    return Value(Rational(v));
}

MonomialValuation::MonomialValuation(BaseValuation base, Rational center, Value delta)
    : base_(std::move(base)), center_(std::move(center)), delta_(std::move(delta)) {
    if (delta_.is_infinity() || delta_ <= Value::zero())
        throw std::invalid_argument("monomial valuation requires finite delta > 0");
}

Value MonomialValuation::eval(const Poly& f) const {
    if (f.is_zero()) return Value::infinity();
    const Poly shifted = f.taylor_shift(center_);  // coefficients of the (x-b)-expansion
    Value best = Value::infinity();
    for (std::size_t i = 0; i < shifted.coeffs().size(); ++i) {
        const Rational& c = shifted.coeff(i);
        if (c == 0) continue;
        best = min(best, base_.eval(c) + delta_.times(i));
    }
    return best;
}

AugmentedChain::AugmentedChain(MonomialValuation depth0, std::vector<ChainStep> steps)
    : depth0_(std::move(depth0)), steps_(std::move(steps)) {
    int prev_degree = 1;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const ChainStep& step = steps_[i];
        if (!step.key.is_monic() || step.key.degree() < 1)
            throw std::invalid_argument("chain step " + std::to_string(i) + ": key must be monic of degree >= 1");
        if (step.key.degree() < prev_degree)
            throw std::invalid_argument("chain step " + std::to_string(i) + ": key degrees must be nondecreasing");
        if (step.gamma.is_infinity())
            throw std::invalid_argument("chain step " + std::to_string(i) + ": gamma must be finite");
        const Value previous = eval_prefix(step.key, i);
        if (!(step.gamma > previous))
            throw std::invalid_argument("chain step " + std::to_string(i) + ": gamma (" + step.gamma.str() +
                                        ") must strictly exceed the previous stage's value (" + previous.str() +
                                        ") of the key");
        prev_degree = step.key.degree();
    }
}

Value AugmentedChain::eval_prefix(const Poly& f, std::size_t nsteps) const {
    if (nsteps == 0) return depth0_.eval(f);
    if (f.is_zero()) return Value::infinity();
    const ChainStep& top = steps_[nsteps - 1];
    Value best = Value::infinity();
    const std::vector<Poly> parts = f.q_expansion(top.key);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        best = min(best, eval_prefix(parts[i], nsteps - 1) + top.gamma.times(i));
    }
    return best;
}

Value AugmentedChain::eval(const Poly& f) const { return eval_prefix(f, steps_.size()); }

AugmentedChain AugmentedChain::prefix(std::size_t nsteps) const {
    if (nsteps > steps_.size()) throw std::invalid_argument("chain prefix longer than the chain");
    return AugmentedChain(depth0_, std::vector<ChainStep>(steps_.begin(), steps_.begin() + nsteps));
}

PcsPrefix::PcsPrefix(BaseValuation base, std::vector<Rational> elems, std::optional<PcsExtendRule> rule)
    : base_(std::move(base)), elems_(std::move(elems)), rule_(std::move(rule)) {
    if (elems_.empty()) throw std::invalid_argument("pcs prefix must contain at least one element");
}

PcsPrefix PcsPrefix::extended(std::size_t extra) const {
    if (!rule_) throw std::invalid_argument("pcs prefix has no extension rule");
    std::vector<Rational> elems = elems_;
    for (std::size_t k = 0; k < extra; ++k) elems.push_back(rule_->mult * elems.back() + rule_->add);
    return PcsPrefix(base_, std::move(elems), rule_);
}

bool pcs_check(const PcsPrefix& s) {
    const auto& a = s.elems();
    const std::size_t n = a.size();
    for (std::size_t rho = 0; rho < n; ++rho)
        for (std::size_t sigma = rho + 1; sigma < n; ++sigma)
            for (std::size_t tau = sigma + 1; tau < n; ++tau) {
                const Value left = s.base().eval(a[sigma] - a[rho]);
                const Value right = s.base().eval(a[tau] - a[sigma]);
                if (!(left < right)) return false;
            }
    return true;
}

PcsTrace pcs_value_trace(const PcsPrefix& s, const Poly& f) {
    if (!pcs_check(s)) throw std::invalid_argument("pcs_value_trace requires a valid pseudo-convergent prefix");

    PcsTrace trace;
    for (const Rational& a : s.elems()) trace.values.push_back(s.base().eval(f.evaluate(a)));
    const std::size_t n = trace.values.size();
    trace.note = "fixed verdicts use a confirmation window of 3 equal tail values; "
                 "a finite prefix never proves transcendental type";
    if (n < 3) {
        trace.verdict = PcsTraceVerdict::NotStabilized;
        return trace;
    }

    // Smallest k with a constant tail v_k = ... = v_{n-1}.
    std::size_t k = n - 1;
    while (k > 0 && trace.values[k - 1] == trace.values[n - 1]) --k;
    if (n - k >= 3) {
        trace.verdict = PcsTraceVerdict::FixedAtIndex;
        trace.fixed_index = k;
        return trace;
    }

    // Smallest k with a strictly increasing tail reaching the end.
    k = n - 1;
    while (k > 0 && trace.values[k - 1] < trace.values[k]) --k;
    if (n - k >= 3) {
        trace.verdict = PcsTraceVerdict::IncreasingThroughPrefix;
        trace.fixed_index = k;
        return trace;
    }

    trace.verdict = PcsTraceVerdict::NotStabilized;
    return trace;
}

Valuation::Kind Valuation::kind() const {
    if (std::holds_alternative<MonomialValuation>(repr_)) return Kind::Monomial;
    if (std::holds_alternative<AugmentedChain>(repr_)) return Kind::Chain;
    return Kind::Pcs;
}

const MonomialValuation& Valuation::monomial() const {
    if (kind() != Kind::Monomial) throw std::invalid_argument("valuation is not a monomial valuation");
    return std::get<MonomialValuation>(repr_);
}

const AugmentedChain& Valuation::chain() const {
    if (kind() != Kind::Chain) throw std::invalid_argument("valuation is not an augmented chain");
    return std::get<AugmentedChain>(repr_);
}

const PcsPrefix& Valuation::pcs() const {
    if (kind() != Kind::Pcs) throw std::invalid_argument("valuation is not a pcs prefix");
    return std::get<PcsPrefix>(repr_);
}

const BaseValuation& Valuation::base() const {
    switch (kind()) {
        case Kind::Monomial: return std::get<MonomialValuation>(repr_).base();
        case Kind::Chain: return std::get<AugmentedChain>(repr_).depth0().base();
        default: return std::get<PcsPrefix>(repr_).base();
    }
}

const MonomialValuation& Valuation::depth1_core() const {
    switch (kind()) {
        case Kind::Monomial: return std::get<MonomialValuation>(repr_);
        case Kind::Chain: return std::get<AugmentedChain>(repr_).depth0();
        default: throw std::invalid_argument("a pcs prefix has no depth-1 core");
    }
}

Value Valuation::operator()(const Poly& f) const {
    switch (kind()) {
        case Kind::Monomial: return std::get<MonomialValuation>(repr_).eval(f);
        case Kind::Chain: return std::get<AugmentedChain>(repr_).eval(f);
        default: throw std::invalid_argument("a pcs prefix is a pre-valuation and cannot evaluate polynomials");
    }
}

}  // namespace keypoly

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "keypoly/poly.hpp"

namespace keypoly {

// The p-adic valuation on Q: v_p(a/b) = ord_p(a) - ord_p(b), v_p(0) = inf.
class BaseValuation {
public:
    explicit BaseValuation(Integer p);

    const Integer& prime() const { return p_; }
    Value eval(const Rational& c) const;
    bool operator==(const BaseValuation& other) const { return p_ == other.p_; }

private:
    Integer p_;
};

// Depth-1 valuation nu_{b,delta} on Q[x]: write f = sum c_i (x-b)^i and take
// min_i (v_p(c_i) + i*delta).  delta must be finite and > 0; it may carry a
// minor (infinitesimal) component.
class MonomialValuation {
public:
    MonomialValuation(BaseValuation base, Rational center, Value delta);

    const BaseValuation& base() const { return base_; }
    const Rational& center() const { return center_; }
    const Value& delta() const { return delta_; }

    Value eval(const Poly& f) const;

private:
    BaseValuation base_;
    Rational center_;
    Value delta_;
};

struct ChainStep {
    Poly key;     // monic, degree >= 1
    Value gamma;  // finite, strictly above the previous stage's value of key
};

// MacLane-style augmented valuation: a monomial stage followed by steps
// (Q_i, gamma_i).  Evaluation expands in the last Q, values coefficients by
// the previous stage and takes min_i (val(p_i) + i*gamma).
//
// Construction enforces monic keys, nondecreasing degrees and the strict
// value increase gamma_i > (previous stage)(Q_i); without the latter the
// recursion does not define a valuation.  Key-ness of each Q_i for its
// prefix is a semi-decidable property checked by the keytheory module.
class AugmentedChain {
public:
    AugmentedChain(MonomialValuation depth0, std::vector<ChainStep> steps);

    const MonomialValuation& depth0() const { return depth0_; }
    const std::vector<ChainStep>& steps() const { return steps_; }
    std::size_t depth() const { return steps_.size(); }

    Value eval(const Poly& f) const;
    // Evaluation by the stage that uses only the first nsteps steps.
    Value eval_prefix(const Poly& f, std::size_t nsteps) const;
    AugmentedChain prefix(std::size_t nsteps) const;

private:
    MonomialValuation depth0_;
    std::vector<ChainStep> steps_;
};

// Optional affine generator a_{k+1} = mult * a_k + add for lazily extendable
// prefixes.
struct PcsExtendRule {
    Rational mult;
    Rational add;
};

// Finite prefix a_0, ..., a_m of a pseudo-convergent sequence in Q.
class PcsPrefix {
public:
    PcsPrefix(BaseValuation base, std::vector<Rational> elems,
              std::optional<PcsExtendRule> rule = std::nullopt);

    const BaseValuation& base() const { return base_; }
    const std::vector<Rational>& elems() const { return elems_; }
    const std::optional<PcsExtendRule>& rule() const { return rule_; }

    // Prefix with `extra` more terms generated by the rule; requires one.
    PcsPrefix extended(std::size_t extra) const;

private:
    BaseValuation base_;
    std::vector<Rational> elems_;
    std::optional<PcsExtendRule> rule_;
};

// v_p(a_sigma - a_rho) < v_p(a_tau - a_sigma) for every index triple
// rho < sigma < tau; vacuously true below three elements.
bool pcs_check(const PcsPrefix& s);

enum class PcsTraceVerdict { FixedAtIndex, IncreasingThroughPrefix, NotStabilized };

struct PcsTrace {
    std::vector<Value> values;  // v_p(f(a_rho)) along the prefix
    PcsTraceVerdict verdict = PcsTraceVerdict::NotStabilized;
    std::size_t fixed_index = 0;  // meaningful for FixedAtIndex
    std::string note;
};

// Requires pcs_check(s).  Fixed needs a constant tail of >= 3 values (a
// reporting convention, not a proof); Increasing needs a strictly increasing
// tail of >= 3 values reaching the end; otherwise NotStabilized.
PcsTrace pcs_value_trace(const PcsPrefix& s, const Poly& f);

// Tagged union over the three representations, for config-level dispatch.
// Monomial and chain representations evaluate exactly; a PCS prefix is only
// a pre-valuation and rejects evaluation.
class Valuation {
public:
    enum class Kind { Monomial, Chain, Pcs };

    Valuation(MonomialValuation w) : repr_(std::move(w)) {}
    Valuation(AugmentedChain c) : repr_(std::move(c)) {}
    Valuation(PcsPrefix s) : repr_(std::move(s)) {}

    Kind kind() const;
    bool evaluable() const { return kind() != Kind::Pcs; }

    const MonomialValuation& monomial() const;
    const AugmentedChain& chain() const;
    const PcsPrefix& pcs() const;

    const BaseValuation& base() const;
    // The depth-1 core: the monomial itself, or a chain's depth-0 stage.
    const MonomialValuation& depth1_core() const;

    Value operator()(const Poly& f) const;

private:
    std::variant<MonomialValuation, AugmentedChain, PcsPrefix> repr_;
};

}  // namespace keypoly

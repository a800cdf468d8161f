#pragma once

#include <string>
#include <utility>
#include <vector>

#include "keypoly/valuation.hpp"

namespace keypoly {

struct ExpansionTerm {
    std::size_t index;
    Poly part;    // p_i, zero or deg < deg q
    Value value;  // V(p_i q^i)
};

// q-expansion of a polynomial valued termwise; min_value is the truncation
// nu_q(f).  Reassembly sum p_i q^i = f is checked on construction.
struct ExpansionReport {
    Poly input;
    Poly q;
    std::vector<ExpansionTerm> terms;
    Value min_value = Value::infinity();
    std::vector<std::size_t> argmin;
};

ExpansionReport truncate(const Valuation& V, const Poly& q, const Poly& f);

struct EpsilonTerm {
    unsigned long r;
    Value deriv_value;  // V(hasse_derivative(f, r)), derivative nonzero
    Value quotient;     // (V(f) - V(d_r f)) / r
};

// eps(f) = max_r (V(f) - V(d_r f))/r over 1 <= r <= deg f with d_r f != 0;
// argmax_r is the smallest maximizing index.
struct EpsilonReport {
    Value nu_f;
    std::vector<EpsilonTerm> terms;
    Value epsilon;
    unsigned long argmax_r = 0;
};

// f must be nonconstant.
EpsilonReport epsilon(const Valuation& V, const Poly& f);

// Root-distance invariant of a monic f at a depth-1 valuation: the multiset
// {v_p(b - a_i)} over the roots of f is read off the Newton polygon of
// f(x + b), and delta(f) = max_i min(delta, v_p(b - a_i)).  Independent of
// the chosen extension to the algebraic closure.
Value delta_depth1(const MonomialValuation& w, const Poly& f);

struct CrosscheckResult {
    bool agree = false;
    Value eps;
    Value delta;
};

// Computes eps via Hasse derivatives and delta via Newton polygons and
// compares exactly; a disagreement falsifies the whole tower.
CrosscheckResult epsilon_delta_crosscheck(const MonomialValuation& w, const Poly& f);

// Corpus-relative comparison of nu_q against direct evaluation.  equal=true
// means equal on the given corpus only; a witness of inequality is exact.
struct TruncationScan {
    bool equal = true;
    Poly witness;
    Value truncated;  // nu_q(witness)
    Value direct;     // nu(witness)
    std::string corpus_note;
};

TruncationScan truncation_equals(const Valuation& V, const Poly& q, const std::vector<Poly>& corpus,
                                 std::string corpus_note = "");

struct MultiplicativityScan {
    bool valid = true;
    Poly f;
    Poly g;
    Value vq_fg;
    Value vq_f;
    Value vq_g;
};

// Checks nu_q(fg) = nu_q(f) + nu_q(g) on every pair; a failure is recomputed
// from scratch before it is reported.
MultiplicativityScan truncation_multiplicativity_scan(const Valuation& V, const Poly& q,
                                                      const std::vector<std::pair<Poly, Poly>>& pairs);

}  // namespace keypoly

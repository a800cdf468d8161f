#include "keypoly/analysis.hpp"

#include <stdexcept>

namespace keypoly {

ExpansionReport truncate(const Valuation& V, const Poly& q, const Poly& f) {
    ExpansionReport report;
    report.input = f;
    report.q = q;

    const std::vector<Poly> parts = f.q_expansion(q);
    const Value vq = V(q);
    Poly reassembled;
    Poly qpow = Poly::one();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Value term_value = parts[i].is_zero() ? Value::infinity() : V(parts[i]) + vq.times(i);
        report.terms.push_back({i, parts[i], term_value});
        reassembled = reassembled + parts[i] * qpow;
        if (i + 1 < parts.size()) qpow = qpow * q;
    }
    if (reassembled != f) throw std::logic_error("q-expansion failed to reassemble");

    for (const ExpansionTerm& t : report.terms) report.min_value = min(report.min_value, t.value);
    for (const ExpansionTerm& t : report.terms)
        if (t.value == report.min_value) report.argmin.push_back(t.index);
    return report;
}

EpsilonReport epsilon(const Valuation& V, const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("epsilon requires a nonconstant polynomial");

    EpsilonReport report;
    report.nu_f = V(f);
    bool have = false;
    for (unsigned long r = 1; r <= static_cast<unsigned long>(f.degree()); ++r) {
        const Poly d = f.hasse_derivative(r);
        if (d.is_zero()) continue;  // value inf, quotient -inf: never the max
        EpsilonTerm term;
        term.r = r;
        term.deriv_value = V(d);
        term.quotient = (report.nu_f - term.deriv_value).divided_by(r);
        if (!have || term.quotient > report.epsilon) {
            report.epsilon = term.quotient;
            report.argmax_r = r;
            have = true;
        }
        report.terms.push_back(std::move(term));
    }
    if (!have) throw std::logic_error("no nonzero Hasse derivative below the degree");
    return report;
}

Value delta_depth1(const MonomialValuation& w, const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("delta requires a monic polynomial of degree >= 1");

    const NewtonPolygon np = newton_polygon(f.taylor_shift(w.center()), w.base().prime());
    bool have = false;
    Value best;
    if (np.order_at_zero > 0) {  // roots equal to the center: mu(x - a) = delta
        best = w.delta();
        have = true;
    }
    for (const auto& [slope, mult] : np.slopes) {
        Value candidate = min(w.delta(), Value(slope));
        if (!have || candidate > best) {
            best = candidate;
            have = true;
        }
    }
    if (!have) throw std::logic_error("empty root multiset for a nonconstant polynomial");
    return best;
}

CrosscheckResult epsilon_delta_crosscheck(const MonomialValuation& w, const Poly& f) {
    CrosscheckResult out;
    out.eps = epsilon(Valuation(w), f).epsilon;
    out.delta = delta_depth1(w, f);
    out.agree = (out.eps == out.delta);
    return out;
}

TruncationScan truncation_equals(const Valuation& V, const Poly& q, const std::vector<Poly>& corpus,
                                 std::string corpus_note) {
    if (corpus.empty()) throw std::invalid_argument("truncation_equals requires a nonempty corpus");
    TruncationScan scan;
    scan.corpus_note = std::move(corpus_note);
    for (const Poly& f : corpus) {
        const Value truncated = truncate(V, q, f).min_value;
        const Value direct = V(f);
        if (truncated != direct) {
            scan.equal = false;
            scan.witness = f;
            scan.truncated = truncated;
            scan.direct = direct;
            return scan;
        }
    }
    return scan;
}

MultiplicativityScan truncation_multiplicativity_scan(const Valuation& V, const Poly& q,
                                                      const std::vector<std::pair<Poly, Poly>>& pairs) {
    MultiplicativityScan scan;
    for (const auto& [f, g] : pairs) {
        const Value vfg = truncate(V, q, f * g).min_value;
        const Value vf = truncate(V, q, f).min_value;
        const Value vg = truncate(V, q, g).min_value;
        if (vfg != vf + vg) {
            // recompute from scratch before reporting
            const Value again = truncate(V, q, f * g).min_value;
            const Value lhs = truncate(V, q, f).min_value + truncate(V, q, g).min_value;
            if (again == lhs) throw std::logic_error("multiplicativity counterexample did not reverify");
            scan.valid = false;
            scan.f = f;
            scan.g = g;
            scan.vq_fg = again;
            scan.vq_f = vf;
            scan.vq_g = vg;
            return scan;
        }
    }
    return scan;
}

}  // namespace keypoly

#include "keypoly/keytheory.hpp"

#include <sstream>
#include <stdexcept>

namespace keypoly {

namespace {

constexpr long kKeyScanBudget = 200000;
constexpr long kPairScanBudget = 50000;
constexpr long kFindQBudget = 200000;

void validate_bound(const SearchBound& bound) {
    if (bound.max_degree < 1 || bound.height < 1)
        throw std::invalid_argument("search bound components must be positive");
}

// All rationals of height exactly h, sorted by (denominator, numerator).
std::vector<Rational> rationals_of_height(const Integer& h) {
    std::vector<Rational> out;
    if (h == 1) {
        out.push_back(Rational(-1));
        out.push_back(Rational(0));
        out.push_back(Rational(1));
        return out;
    }
    for (Integer den = 1; den <= h; ++den) {
        if (den < h) {
            if (gcd(h, den) == 1) {
                Rational neg(-h, den), pos(h, den);
                neg.canonicalize();
                pos.canonicalize();
                out.push_back(neg);
                out.push_back(pos);
            }
        } else {
            for (Integer num = 1 - h; num <= h - 1; ++num) {
                if (num == 0 || gcd(abs(num), h) != 1) continue;
                Rational r(num, h);
                r.canonicalize();
                out.push_back(r);
            }
        }
    }
    return out;
}

// Ascending-height sweep over rational candidates; visit returns true to
// stop.  Returns false iff the budget ran out first.
bool for_each_rational(const Integer& max_height, long& budget,
                       const std::function<bool(const Rational&)>& visit) {
    for (Integer h = 1; h <= max_height; ++h) {
        for (const Rational& c : rationals_of_height(h)) {
            if (--budget < 0) return false;
            if (visit(c)) return true;
        }
    }
    return true;
}

}  // namespace

bool enumerate_monic_candidates(int degree, const Integer& height, long& budget,
                                const std::function<bool(const Poly&)>& visit) {
    if (degree < 1) throw std::invalid_argument("candidate degree must be >= 1");
    const std::size_t d = static_cast<std::size_t>(degree);
    std::vector<Rational> pool;

    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = 1;

    for (Integer level = 1; level <= height; ++level) {
        const std::size_t prev = pool.size();
        for (Rational& r : rationals_of_height(level)) pool.push_back(std::move(r));
        const std::size_t size = pool.size();
        // Fresh tuples have at least one coordinate in [prev, size); split by
        // the highest fresh position so each tuple appears exactly once.
        for (std::size_t star = d; star-- > 0;) {
            if (star + 1 < d && prev == 0) continue;  // positions above star need stale entries
            std::vector<std::size_t> lo(d), hi(d);
            for (std::size_t j = 0; j < d; ++j) {
                lo[j] = (j == star) ? prev : 0;
                hi[j] = (j > star) ? prev : size;
            }
            std::vector<std::size_t> idx(lo);
            bool cell_done = false;
            while (!cell_done) {
                if (--budget < 0) return false;
                for (std::size_t j = 0; j < d; ++j) coeffs[j] = pool[idx[j]];
                if (visit(Poly::from_coeffs(coeffs))) return true;
                std::size_t j = 0;
                for (; j < d; ++j) {
                    if (++idx[j] < hi[j]) break;
                    idx[j] = lo[j];
                }
                cell_done = (j == d);
            }
        }
    }
    return true;
}

Value linear_candidate_sup(const Valuation& V, Rational& argmax_center) {
    switch (V.kind()) {
        case Valuation::Kind::Monomial:
            argmax_center = V.monomial().center();
            return V.monomial().delta();
        case Valuation::Kind::Chain: {
            const AugmentedChain& chain = V.chain();
            for (std::size_t i = chain.steps().size(); i-- > 0;) {
                const ChainStep& step = chain.steps()[i];
                if (step.key.degree() == 1) {
                    argmax_center = -step.key.coeff(0);
                    return step.gamma;
                }
            }
            argmax_center = chain.depth0().center();
            return chain.depth0().delta();
        }
        default:
            throw std::invalid_argument("linear candidate supremum needs an evaluable valuation");
    }
}

namespace {

KeyVerdict verified_not_key(const Valuation& V, const Value& eps_q, const Poly& Q, Poly witness,
                            std::string note) {
    if (!(witness.degree() >= 1 && witness.degree() < Q.degree()))
        throw std::logic_error("NotKey witness has the wrong degree");
    const Value eps_w = epsilon(V, witness).epsilon;
    if (!(eps_w >= eps_q)) throw std::logic_error("NotKey witness failed exact re-verification");
    KeyVerdict v;
    v.kind = KeyVerdict::Kind::NotKey;
    v.witness = std::move(witness);
    v.note = std::move(note);
    return v;
}

}  // namespace

KeyVerdict is_key(const Valuation& V, const Poly& Q, const SearchBound& bound) {
    validate_bound(bound);
    if (!Q.is_monic() || Q.degree() < 1)
        throw std::invalid_argument("is_key requires a monic polynomial of degree >= 1");
    if (!V.evaluable()) throw std::invalid_argument("is_key requires an evaluable valuation");

    KeyVerdict verdict;
    if (Q.degree() == 1) {
        verdict.kind = KeyVerdict::Kind::Key;
        verdict.note = "degree 1: no monic competitor of smaller degree exists";
        return verdict;
    }

    const Value eps_q = epsilon(V, Q).epsilon;

    // Key polynomials are irreducible: the factor carrying the maximal root
    // distance has eps >= eps(Q) at smaller degree.
    const IrreducibilityVerdict irr = is_irreducible_bounded(Q, bound.height);
    if (irr.reducible()) {
        const Poly& g = irr.factor;
        const Poly h = Poly::divmod(Q, g).first;
        for (const Poly* cand : {&g, &h}) {
            if (cand->degree() >= 1 && cand->degree() < Q.degree() &&
                epsilon(V, *cand).epsilon >= eps_q)
                return verified_not_key(V, eps_q, Q, *cand,
                                        "factor route: Q is reducible and key polynomials are irreducible");
        }
    }

    Rational center;
    const Value linear_sup = linear_candidate_sup(V, center);
    if (linear_sup >= eps_q)
        return verified_not_key(V, eps_q, Q, Poly::x() - Poly(center),
                                "linear candidate attaining the exact supremum of eps over monic linears");

    if (Q.degree() == 2) {
        verdict.kind = KeyVerdict::Kind::Key;
        verdict.note = "complete: every competitor is monic linear and sup eps(x-c) = " + linear_sup.str() +
                       " (attained at c = " + to_string(center) + ") < eps(Q) = " + eps_q.str();
        return verdict;
    }

    long budget = kKeyScanBudget;
    bool exhausted = true;
    bool found = false;
    Poly witness;
    const int top_degree = std::min(Q.degree() - 1, bound.max_degree);
    for (int d = 2; d <= top_degree && !found; ++d) {
        const bool finished = enumerate_monic_candidates(d, bound.height, budget, [&](const Poly& cand) {
            if (epsilon(V, cand).epsilon >= eps_q) {
                witness = cand;
                found = true;
                return true;
            }
            return false;
        });
        if (!finished && !found) {
            exhausted = false;
            break;
        }
    }
    if (found) return verified_not_key(V, eps_q, Q, witness, "bounded-scan witness");

    std::ostringstream note;
    note << "no witness among monic candidates of degree <= " << top_degree << " and coefficient height <= "
         << bound.height.get_str();
    if (top_degree < Q.degree() - 1) note << "; degrees above the bound were not searched";
    if (!exhausted) note << "; scan truncated by the candidate budget";
    note << " (Key is only certified outright for deg Q <= 2)";
    verdict.kind = KeyVerdict::Kind::UnknownAtBound;
    verdict.note = note.str();
    return verdict;
}

Poly root_difference_poly(const Poly& g, const Poly& Q) {
    if (g.degree() < 1 || Q.degree() < 1)
        throw std::invalid_argument("root_difference_poly requires nonconstant inputs");
    const int n = g.degree() * Q.degree();
    std::vector<std::pair<Rational, Rational>> points;
    Rational t(0);
    for (int k = 0; k <= n; ++k) {
        points.emplace_back(t, resultant(g, Q.taylor_shift(t)));
        // nodes 0, 1, -1, 2, -2, ...
        if (t <= 0)
            t = Rational(1) - t;
        else
            t = -t;
    }
    Poly r = interpolate(points);
    if (r.degree() != n || !r.is_monic())
        throw std::logic_error("resultant interpolation produced an unexpected polynomial");
    return r;
}

namespace {

// Largest root valuation of R, i.e. the best mu-distance in its root set.
Value max_root_valuation(const Poly& r, const Integer& p) {
    const NewtonPolygon np = newton_polygon(r, p);
    if (np.order_at_zero > 0) return Value::infinity();
    if (np.slopes.empty()) throw std::logic_error("constant polynomial has no root valuations");
    return Value(np.slopes.back().first);
}

MinimalPairResult pair_result(MinimalPairResult::Kind kind, Value delta_q, std::string note) {
    MinimalPairResult r;
    r.kind = kind;
    r.delta_q = std::move(delta_q);
    r.note = std::move(note);
    return r;
}

}  // namespace

MinimalPairResult minimal_pair_check(const Valuation& V, const Poly& Q, const SearchBound& bound) {
    validate_bound(bound);
    if (!Q.is_monic() || Q.degree() < 1)
        throw std::invalid_argument("minimal_pair_check requires a monic polynomial of degree >= 1");
    if (!V.evaluable()) throw std::invalid_argument("minimal_pair_check requires an evaluable valuation");

    // delta(Q): Newton-polygon route at depth 1; through eps for chains
    // (exact by the delta = eps identity, noted in the report).
    Value delta_q;
    std::string delta_note;
    if (V.kind() == Valuation::Kind::Monomial) {
        delta_q = delta_depth1(V.monomial(), Q);
        delta_note = "delta(Q) from Newton polygon root distances";
    } else {
        delta_q = epsilon(V, Q).epsilon;
        delta_note = "delta(Q) through eps (delta = eps identity; root distances are out of reach at depth >= 2)";
    }

    if (Q.degree() == 1)
        return pair_result(MinimalPairResult::Kind::NoViolation, delta_q,
                           "degree 1: no algebraic number of smaller degree exists; " + delta_note);

    const IrreducibilityVerdict irr = is_irreducible_bounded(Q, bound.height);
    if (irr.reducible())
        throw std::invalid_argument("minimal_pair_check requires irreducible Q (factor: " + irr.factor.str() + ")");

    // Deeper chains with higher-degree Q: route through the key predicate.
    if (V.kind() == Valuation::Kind::Chain && Q.degree() >= 3) {
        const KeyVerdict k = is_key(V, Q, bound);
        MinimalPairResult r;
        r.delta_q = delta_q;
        r.theorem_backed = true;
        if (k.not_key()) {
            r.kind = MinimalPairResult::Kind::Violation;
            r.witness_minpoly = k.witness;
            r.note = "theorem-backed: NotKey witness implies a minimal-pair violation (" + k.note + "); " + delta_note;
        } else if (k.is_key()) {
            r.kind = MinimalPairResult::Kind::NoViolation;
            r.note = "theorem-backed: Key implies the minimal-pair property; " + delta_note;
        } else {
            r.kind = MinimalPairResult::Kind::NoViolationAtBound;
            r.note = "theorem-backed: key predicate unknown at bound; " + delta_note;
        }
        return r;
    }

    const Integer& p = V.base().prime();
    Value best_seen;
    bool have_best = false;
    auto distance_of_rational = [&](const Rational& c) {
        return max_root_valuation(Q.taylor_shift(c), p);
    };
    auto record = [&](const Value& d) {
        if (!have_best || d > best_seen) {
            best_seen = d;
            have_best = true;
        }
    };

    // Centers of the representation first: at depth 1 the center itself
    // already violates every quadratic.
    std::vector<Rational> specials;
    specials.push_back(V.depth1_core().center());
    if (V.kind() == Valuation::Kind::Chain)
        for (const ChainStep& step : V.chain().steps())
            if (step.key.degree() == 1) specials.push_back(-step.key.coeff(0));
    for (const Rational& c : specials) {
        const Value d = distance_of_rational(c);
        record(d);
        if (d >= delta_q) {
            MinimalPairResult r = pair_result(MinimalPairResult::Kind::Violation, delta_q,
                                              "rational candidate from the representation's centers; " + delta_note);
            r.witness_minpoly = Poly::x() - Poly(c);
            r.distance = d;
            return r;
        }
    }

    long budget = kPairScanBudget;
    Rational violating;
    bool found = false;
    const bool swept_all = for_each_rational(bound.height, budget, [&](const Rational& c) {
        const Value d = distance_of_rational(c);
        record(d);
        if (d >= delta_q) {
            violating = c;
            found = true;
            return true;
        }
        return false;
    });
    if (found) {
        MinimalPairResult r = pair_result(MinimalPairResult::Kind::Violation, delta_q,
                                          "rational candidate from the ascending-height sweep; " + delta_note);
        r.witness_minpoly = Poly::x() - Poly(violating);
        r.distance = distance_of_rational(violating);
        if (!(r.distance >= delta_q)) throw std::logic_error("violation failed exact re-verification");
        return r;
    }

    // Algebraic candidates at depth 1 for deg Q >= 3: minimal polynomials g
    // of degree < deg Q; distances via Res_y(g(y), Q(x+y)).
    bool algebraic_done = true;
    if (Q.degree() >= 3) {
        const int top_degree = std::min(Q.degree() - 1, bound.max_degree);
        for (int d = 2; d <= top_degree; ++d) {
            Poly hit;
            bool got = false;
            const bool finished = enumerate_monic_candidates(d, bound.height, budget, [&](const Poly& g) {
                if (!is_irreducible_bounded(g, bound.height).irreducible()) return false;
                const Value dist = max_root_valuation(root_difference_poly(g, Q), p);
                record(dist);
                if (dist >= delta_q) {
                    hit = g;
                    got = true;
                    return true;
                }
                return false;
            });
            if (got) {
                MinimalPairResult r = pair_result(MinimalPairResult::Kind::Violation, delta_q,
                                                  "algebraic candidate (degree " + std::to_string(d) + "); " + delta_note);
                r.witness_minpoly = hit;
                r.distance = max_root_valuation(root_difference_poly(hit, Q), p);
                if (!(r.distance >= delta_q)) throw std::logic_error("violation failed exact re-verification");
                return r;
            }
            if (!finished) {
                algebraic_done = false;
                break;
            }
        }
        if (Q.degree() - 1 > bound.max_degree) algebraic_done = false;
    }

    std::ostringstream note;
    note << "no violating b' of height <= " << bound.height.get_str();
    if (have_best) note << "; max mu-distance observed = " << best_seen.str() << " < delta(Q) = " << delta_q.str();
    if (!swept_all) note << "; rational sweep truncated by the candidate budget";
    if (!algebraic_done) note << "; algebraic candidate scan incomplete";
    note << "; " << delta_note;
    return pair_result(MinimalPairResult::Kind::NoViolationAtBound, delta_q, note.str());
}

Theorem1Result theorem1_crosscheck(const Valuation& V, const Poly& Q, const SearchBound& bound) {
    const IrreducibilityVerdict irr = is_irreducible_bounded(Q, bound.height);
    if (irr.reducible())
        throw std::invalid_argument("theorem1_crosscheck requires irreducible Q (factor: " + irr.factor.str() + ")");

    Theorem1Result out;
    out.key = is_key(V, Q, bound);
    out.pair = minimal_pair_check(V, Q, bound);

    const bool key_known = !out.key.unknown();
    const bool key_positive = out.key.is_key();
    const bool pair_negative = out.pair.kind == MinimalPairResult::Kind::Violation;
    const bool pair_exact_positive = out.pair.kind == MinimalPairResult::Kind::NoViolation;

    if (out.pair.theorem_backed) {
        out.kind = Theorem1Result::Kind::ConsistentWithCaveat;
        out.details = "minimal-pair side theorem-backed, not an independent check";
        return out;
    }
    if (!key_known) {
        out.kind = Theorem1Result::Kind::ConsistentWithCaveat;
        out.details = "key side unknown at bound";
        return out;
    }
    if (key_positive && pair_negative) {
        out.kind = Theorem1Result::Kind::Inconsistent;
        out.details = "Key but minimal-pair violation " + out.pair.witness_minpoly.str();
        return out;
    }
    if (!key_positive && pair_negative) {
        out.kind = Theorem1Result::Kind::Consistent;
        out.details = "both negative";
        return out;
    }
    if (!key_positive && !pair_negative) {
        if (pair_exact_positive) {
            out.kind = Theorem1Result::Kind::Inconsistent;
            out.details = "NotKey with witness " + out.key.witness.str() + " but minimal pair holds";
        } else {
            out.kind = Theorem1Result::Kind::ConsistentWithCaveat;
            out.details = "exact NotKey; no pair violation found within bound";
        }
        return out;
    }
    out.kind = Theorem1Result::Kind::Consistent;
    out.details = pair_exact_positive ? "both positive" : "both positive (pair side bound-relative)";
    return out;
}

ClassifyReport classify(const Valuation& V) {
    ClassifyReport report;
    switch (V.kind()) {
        case Valuation::Kind::Pcs:
            report.kind = Classification::NotFinitelyRepresented;
            report.basis = "pcs prefixes are lazily extendable approximations; finite data never certifies the limit";
            return report;
        case Valuation::Kind::Monomial: {
            if (!V.monomial().delta().is_torsion_over_base()) {
                report.kind = Classification::ValueTranscendental;
                report.basis = "delta carries a nonzero minor coordinate, hence is torsion-free over the base group";
            } else {
                report.kind = Classification::ResidueTranscendental;
                report.basis = "all assigned values torsion over the base; theorem-backed: a finite representation "
                               "equals its truncation at the last key polynomial";
            }
            return report;
        }
        default: {
            const AugmentedChain& chain = V.chain();
            if (!chain.depth0().delta().is_torsion_over_base()) {
                report.kind = Classification::ValueTranscendental;
                report.basis = "depth-0 delta carries a nonzero minor coordinate";
                return report;
            }
            for (std::size_t i = 0; i < chain.steps().size(); ++i) {
                if (!chain.steps()[i].gamma.is_torsion_over_base()) {
                    report.kind = Classification::ValueTranscendental;
                    report.basis = "gamma of step " + std::to_string(i) + " carries a nonzero minor coordinate";
                    return report;
                }
            }
            report.kind = Classification::ResidueTranscendental;
            report.basis = "all assigned values torsion over the base; theorem-backed: a finite representation "
                           "equals its truncation at the last key polynomial";
            return report;
        }
    }
}

FindQResult minimal_degree_torsionfree_q(const Valuation& V, const SearchBound& bound,
                                         const std::vector<Poly>& corpus) {
    validate_bound(bound);
    if (classify(V).kind != Classification::ValueTranscendental)
        throw std::invalid_argument("minimal_degree_torsionfree_q requires a value-transcendental valuation");
    if (corpus.empty()) throw std::invalid_argument("minimal_degree_torsionfree_q requires a verification corpus");

    FindQResult result;
    long budget = kFindQBudget;
    std::ostringstream trail;
    for (int d = 1; d <= bound.max_degree && !result.found; ++d) {
        Poly candidate;
        bool got = false;
        const bool finished = enumerate_monic_candidates(d, bound.height, budget, [&](const Poly& q) {
            if (V(q).is_torsion_over_base()) return false;
            candidate = q;
            got = true;
            return true;
        });
        if (got) {
            // Distinct-values property on expansion data from the corpus.
            const Value vq = V(candidate);
            std::vector<std::pair<Poly, std::size_t>> samples;
            for (const Poly& f : corpus) {
                if (samples.size() >= 60) break;
                const std::vector<Poly> parts = f.q_expansion(candidate);
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (!parts[i].is_zero()) samples.emplace_back(parts[i], i);
            }
            bool distinct = true;
            for (std::size_t s = 0; s < samples.size() && distinct; ++s)
                for (std::size_t t = s + 1; t < samples.size() && distinct; ++t) {
                    if (samples[s].second == samples[t].second) continue;
                    const Value vs = V(samples[s].first) + vq.times(samples[s].second);
                    const Value vt = V(samples[t].first) + vq.times(samples[t].second);
                    if (vs == vt) distinct = false;
                }
            const bool truncation_ok = distinct && truncation_equals(Valuation(V), candidate, corpus).equal;
            if (distinct && truncation_ok) {
                result.found = true;
                result.q = candidate;
                result.note = "minimal degree " + std::to_string(d) + " within height " + bound.height.get_str() +
                              "; distinct-values and truncation checks passed on the corpus";
                return result;
            }
            trail << "candidate " << candidate.str() << " rejected ("
                  << (distinct ? "truncation mismatch" : "equal expansion-term values") << "); ";
            // keep scanning from scratch at the same degree is not possible with
            // the simple enumerator; treat as not found at this bound
            result.note = trail.str() + "search stopped at the first torsion-free candidate of degree " +
                          std::to_string(d);
            return result;
        }
        if (!finished) {
            result.note = "search truncated by the candidate budget at degree " + std::to_string(d);
            return result;
        }
    }
    if (result.note.empty())
        result.note = "no monic q of degree <= " + std::to_string(bound.max_degree) + " and height <= " +
                      bound.height.get_str() + " has a torsion-free value";
    return result;
}

PcsStageReport pcs_from_chain(const std::vector<MonomialValuation>& stages) {
    if (stages.empty()) throw std::invalid_argument("pcs_from_chain requires at least one stage");
    const Integer p = stages.front().base().prime();
    for (const MonomialValuation& w : stages)
        if (w.base().prime() != p) throw std::invalid_argument("pcs_from_chain stages must share the base prime");
    for (std::size_t i = 0; i + 1 < stages.size(); ++i)
        if (!(stages[i].delta() < stages[i + 1].delta()))
            throw std::invalid_argument("pcs_from_chain requires strictly increasing eps across stages");

    PcsStageReport report;
    for (const MonomialValuation& w : stages) report.stages.emplace_back(w.center(), w.delta());

    const BaseValuation base(p);
    for (std::size_t i = 0; i < stages.size(); ++i)
        for (std::size_t j = i + 1; j < stages.size(); ++j) {
            PcsStageCheck check;
            check.i = i;
            check.j = j;
            check.actual = base.eval(stages[j].center() - stages[i].center());
            check.expected = stages[i].delta();
            check.ok = (check.actual == check.expected);
            report.all_ok = report.all_ok && check.ok;
            report.checks.push_back(std::move(check));
        }
    return report;
}

}  // namespace keypoly

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "keypoly/analysis.hpp"

namespace keypoly {

// Finitization of the universal quantifiers over K[x]: candidate degree and
// coefficient height caps for the search loops.
struct SearchBound {
    int max_degree = 4;
    Integer height = 16;
};

// Verdict of the key-polynomial predicate.  A NotKey witness is re-verified
// exactly before emission: deg(witness) < deg(Q) and eps(witness) >= eps(Q).
struct KeyVerdict {
    enum class Kind { Key, NotKey, UnknownAtBound };
    Kind kind = Kind::UnknownAtBound;
    Poly witness;
    std::string note;

    bool is_key() const { return kind == Kind::Key; }
    bool not_key() const { return kind == Kind::NotKey; }
    bool unknown() const { return kind == Kind::UnknownAtBound; }
};

// Exact supremum of V(x - c) over rational c, with the center attaining it.
// For a monomial valuation this is delta at c = b; for a chain it is gamma
// of the last linear step at that step's center (linear steps can only sit
// at the front since degrees are nondecreasing).
Value linear_candidate_sup(const Valuation& V, Rational& argmax_center);

// Q is a key polynomial iff eps(f) >= eps(Q) forces deg f >= deg Q.
// Reducible Q is dispatched through a factor (key polynomials are
// irreducible); linear candidates are compared against their exact
// supremum, which makes the verdict complete for deg Q <= 2.  For
// deg Q >= 3 a bounded candidate scan can still produce a witness,
// otherwise the verdict is UnknownAtBound.
KeyVerdict is_key(const Valuation& V, const Poly& Q, const SearchBound& bound);

// Minimal-pair predicate for (a, delta(Q)), a a root of Q at maximal
// mu-distance from x.  A violation is a lower-degree b' (given by its
// minimal polynomial) with mu(b' - a) >= delta(Q); distances are Newton
// polygon slopes of shifted/resultant polynomials, which do not depend on
// the chosen extension of v_p.  For chains with deg Q >= 3 the predicate is
// routed through is_key via the key<->minimal-pair equivalence and flagged
// theorem_backed.
struct MinimalPairResult {
    enum class Kind { NoViolation, NoViolationAtBound, Violation };
    Kind kind = Kind::NoViolationAtBound;
    Poly witness_minpoly;  // minimal polynomial of the violating b'
    Value distance;        // best mu-distance achieved by the witness
    Value delta_q;
    bool theorem_backed = false;
    std::string note;

    bool violated() const { return kind == Kind::Violation; }
};

MinimalPairResult minimal_pair_check(const Valuation& V, const Poly& Q, const SearchBound& bound);

// Runs is_key and minimal_pair_check independently and compares polarities
// (Key <-> NoViolation, NotKey <-> Violation).  An unknown or theorem-backed
// side yields ConsistentWithCaveat, never Inconsistent.
struct Theorem1Result {
    enum class Kind { Consistent, ConsistentWithCaveat, Inconsistent };
    Kind kind = Kind::Inconsistent;
    KeyVerdict key;
    MinimalPairResult pair;
    std::string details;

    bool consistent() const { return kind != Kind::Inconsistent; }
};

Theorem1Result theorem1_crosscheck(const Valuation& V, const Poly& Q, const SearchBound& bound);

// Structural trichotomy for the finitely represented valuations: a value
// with nonzero minor coordinate is torsion-free over the base group (value-
// transcendental); otherwise a finite representation equals its own
// truncation at the last key polynomial and is residue-transcendental.  PCS
// prefixes stay unclassified: finite data never certifies the limit.
enum class Classification { ValueTranscendental, ResidueTranscendental, NotFinitelyRepresented };

struct ClassifyReport {
    Classification kind = Classification::NotFinitelyRepresented;
    std::string basis;
};

ClassifyReport classify(const Valuation& V);

// Minimal-degree monic q (within the bound) whose value has a nonzero minor
// coordinate.  Verifies on the corpus that distinct expansion terms take
// distinct values and that nu = nu_q, as the value-transcendental
// construction promises.  Requires classify(V) = ValueTranscendental.
struct FindQResult {
    bool found = false;
    Poly q;
    std::string note;
};

FindQResult minimal_degree_torsionfree_q(const Valuation& V, const SearchBound& bound,
                                         const std::vector<Poly>& corpus);

// Desk-scale surrogate for a complete sequence without last element: depth-1
// stages nu_{a_i, eps_i} with strictly increasing eps.  Emits the centers
// with their eps values and checks v_p(a_j - a_i) = eps_i for all i < j,
// which also makes the center sequence pseudo-convergent.
struct PcsStageCheck {
    std::size_t i, j;
    Value actual;    // v_p(a_j - a_i)
    Value expected;  // eps_i
    bool ok;
};

struct PcsStageReport {
    std::vector<std::pair<Rational, Value>> stages;  // (center, eps)
    std::vector<PcsStageCheck> checks;
    bool all_ok = true;
};

PcsStageReport pcs_from_chain(const std::vector<MonomialValuation>& stages);

// Res_y(g(y), Q(x+y)); its roots are the differences a - b over roots a of
// Q and b of g, so its Newton polygon slopes are the mutual root distances.
Poly root_difference_poly(const Poly& g, const Poly& Q);

// Deterministic ascending-height enumeration of monic polynomials of the
// given degree with coefficient heights <= height; visit returns true to
// stop.  Returns false when the budget ran out before the space was
// exhausted.
bool enumerate_monic_candidates(int degree, const Integer& height, long& budget,
                                const std::function<bool(const Poly&)>& visit);

}  // namespace keypoly

#include <doctest.h>

#include "helpers.hpp"

using namespace kt;

namespace {

const SearchBound kBound{2, Integer(64)};

}  // namespace

TEST_CASE("candidate enumeration is deterministic and height-ordered") {
    std::vector<Poly> seen;
    long budget = 1000;
    const bool finished = enumerate_monic_candidates(1, Integer(2), budget, [&](const Poly& f) {
        seen.push_back(f);
        return false;
    });
    CHECK(finished);
    REQUIRE(seen.size() == 7);  // c in {-1,0,1} then {-2,2,-1/2,1/2}
    CHECK(seen[0] == P("x-1"));
    CHECK(seen[1] == P("x"));
    CHECK(seen[2] == P("x+1"));
    CHECK(seen[3] == P("x-2"));
    CHECK(seen[6] == P("x+1/2"));

    // budget exhaustion is reported
    long tiny = 3;
    CHECK_FALSE(enumerate_monic_candidates(2, Integer(4), tiny, [](const Poly&) { return false; }));
}

TEST_CASE("linear candidate supremum") {
    Rational c;
    CHECK(linear_candidate_sup(Valuation(monomial(2, "3/4", "5/2")), c) == W("5/2"));
    CHECK(c == R("3/4"));

    CHECK(linear_candidate_sup(demo_chain(), c) == W("1/2"));
    CHECK(c == R("0"));

    // a linear augmentation step dominates the depth-0 delta
    const AugmentedChain lin(monomial(2, "1/2", "1"), {{P("x-5/2"), W("3")}});
    CHECK(linear_candidate_sup(Valuation(lin), c) == W("3"));
    CHECK(c == R("5/2"));
    // and the supremum is attained
    CHECK(Valuation(lin)(Poly::x() - Poly(c)) == W("3"));
}

TEST_CASE("is_key on the flagship instances") {
    // x^2 is not a key polynomial for the Gauss valuation, yet nu = nu_{x^2}
    const Valuation gauss(monomial(2, "0", "1"));
    const KeyVerdict v1 = is_key(gauss, P("x^2"), kBound);
    REQUIRE(v1.not_key());
    CHECK(v1.witness.degree() == 1);
    CHECK(epsilon(gauss, v1.witness).epsilon >= epsilon(gauss, P("x^2")).epsilon);

    // linear polynomials are always keys
    CHECK(is_key(gauss, P("x-7/3"), kBound).is_key());
    CHECK(is_key(demo_chain(), P("x"), kBound).is_key());

    // x^2-2 under the bare depth-1 valuation: not a key (tie with x)
    const KeyVerdict v2 = is_key(Valuation(monomial(2, "0", "1/2")), P("x^2-2"), kBound);
    REQUIRE(v2.not_key());
    CHECK(v2.witness == P("x"));

    // under the augmented chain it becomes a key, and the verdict is complete
    const KeyVerdict v3 = is_key(demo_chain(), P("x^2-2"), SearchBound{1, Integer(1024)});
    CHECK(v3.is_key());
}

TEST_CASE("is_key witnesses are re-verified exactly") {
    CorpusGen gen(51);
    const std::vector<Valuation> vals = {Valuation(monomial(2, "0", "1")), Valuation(monomial(3, "1", "1/2")),
                                         Valuation(monomial(5, "1/2", "3/2")), demo_chain()};
    int not_key_seen = 0;
    for (int i = 0; i < 60; ++i) {
        const Poly Q = gen.poly(2, 40, true, 2);
        const Valuation& V = vals[static_cast<std::size_t>(i) % vals.size()];
        const KeyVerdict v = is_key(V, Q, kBound);
        if (v.not_key()) {
            ++not_key_seen;
            CHECK(v.witness.degree() < Q.degree());
            CHECK(epsilon(V, v.witness).epsilon >= epsilon(V, Q).epsilon);
        }
    }
    CHECK(not_key_seen > 0);
}

TEST_CASE("is_key above degree 2 stays honest") {
    // x^3-2 under the depth-1 valuation: the linear x already ties
    const KeyVerdict v1 = is_key(Valuation(monomial(2, "0", "1")), P("x^3-2"), SearchBound{2, Integer(8)});
    REQUIRE(v1.not_key());
    CHECK(v1.witness.degree() == 1);

    // a degree-4 key over its chain cannot be certified, only not refuted
    const Valuation V = chain1(2, "0", "1/4", "x^4-4x^2+2", "2");
    const KeyVerdict v2 = is_key(V, P("x^4-4x^2+2"), SearchBound{2, Integer(3)});
    CHECK(v2.unknown());
}

TEST_CASE("the last key polynomial of a chain is never refuted") {
    const std::vector<Valuation> chains = {
        demo_chain(),
        chain1(2, "0", "1/2", "x^2-2", "(2,1)"),
        chain1(2, "0", "1/3", "x^3-2", "3/2"),
        chain1(2, "0", "1/4", "x^4-4x^2+2", "2"),
        Valuation(AugmentedChain(monomial(2, "0", "1/2"), {{P("x^2-2"), W("3/2")}, {P("x^2+2x-2"), W("2")}})),
        Valuation(AugmentedChain(monomial(2, "1/2", "1"), {{P("x-5/2"), W("3")}})),
    };
    const SearchBound bound{3, Integer(6)};
    for (const Valuation& V : chains) {
        for (std::size_t i = 1; i <= V.chain().depth(); ++i) {
            const Valuation prefix(V.chain().prefix(i));
            const KeyVerdict v = is_key(prefix, V.chain().steps()[i - 1].key, bound);
            CHECK_FALSE(v.not_key());
        }
    }
    // degree <= 2 keys are certified outright, higher degrees stay unknown
    CHECK(is_key(demo_chain(), P("x^2-2"), bound).is_key());
    CHECK(is_key(chain1(2, "0", "1/3", "x^3-2", "3/2"), P("x^3-2"), bound).unknown());
}

TEST_CASE("minimal pair checks at depth 1 and along chains") {
    // depth 1: the center b'=0 already violates (sqrt(2), 1/2)
    const MinimalPairResult r1 = minimal_pair_check(Valuation(monomial(2, "0", "1/2")), P("x^2-2"), kBound);
    REQUIRE(r1.violated());
    CHECK(r1.witness_minpoly == P("x"));
    CHECK(r1.distance == W("1/2"));
    CHECK(r1.delta_q == W("1/2"));
    CHECK_FALSE(r1.theorem_backed);

    // the chain raises delta(Q) to 1; no rational gets closer than 1/2
    const MinimalPairResult r2 = minimal_pair_check(demo_chain(), P("x^2-2"), SearchBound{1, Integer(64)});
    CHECK(r2.kind == MinimalPairResult::Kind::NoViolationAtBound);
    CHECK(r2.delta_q == W("1"));
    CHECK_FALSE(r2.theorem_backed);

    // linear Q: nothing of smaller degree exists
    const MinimalPairResult r3 = minimal_pair_check(Valuation(monomial(2, "0", "1")), P("x-3"), kBound);
    CHECK(r3.kind == MinimalPairResult::Kind::NoViolation);

    CHECK_THROWS_AS(minimal_pair_check(Valuation(monomial(2, "0", "1")), P("x^2-1"), kBound),
                    std::invalid_argument);
}

TEST_CASE("minimal pair for a cubic at depth 1") {
    const MinimalPairResult r = minimal_pair_check(Valuation(monomial(2, "0", "1")), P("x^3-2"), kBound);
    REQUIRE(r.violated());
    CHECK(r.delta_q == W("1/3"));
    CHECK(r.witness_minpoly == P("x"));
    CHECK(r.distance >= r.delta_q);
}

TEST_CASE("root difference polynomial against a hand expansion") {
    // Res_y(y^2-2, (x+y)^3-2) = (x+sqrt2)^3-2 times its conjugate
    const Poly r = root_difference_poly(P("x^2-2"), P("x^3-2"));
    CHECK(r == P("x^6-6x^4-4x^3+12x^2-24x-4"));
    const NewtonPolygon np = newton_polygon(r, 2);
    REQUIRE(np.slopes.size() == 1);
    CHECK(np.slopes[0] == std::pair<Rational, long>(R("1/3"), 6));
}

TEST_CASE("root difference polynomial on split inputs") {
    // for g = prod (x-b_j) and Q = prod (x-a_i) the result is
    // prod over pairs (x - (a_i - b_j))
    CorpusGen gen(52);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> as, bs, diffs;
        const int m = static_cast<int>(gen.int_in(1, 3));
        const int n = static_cast<int>(gen.int_in(1, 3));
        for (int k = 0; k < m; ++k) bs.push_back(gen.rational(8));
        for (int k = 0; k < n; ++k) as.push_back(gen.rational(8));
        for (const Rational& a : as)
            for (const Rational& b : bs) diffs.push_back(a - b);
        CHECK(root_difference_poly(Poly::from_roots(bs), Poly::from_roots(as)) == Poly::from_roots(diffs));
    }
}

TEST_CASE("theorem 1 crosschecks") {
    const Theorem1Result r1 = theorem1_crosscheck(Valuation(monomial(2, "0", "1/2")), P("x^2-2"), kBound);
    CHECK(r1.kind == Theorem1Result::Kind::Consistent);
    CHECK(r1.details == "both negative");

    const Theorem1Result r2 = theorem1_crosscheck(demo_chain(), P("x^2-2"), kBound);
    CHECK(r2.kind == Theorem1Result::Kind::Consistent);
    CHECK(r2.details == "both positive (pair side bound-relative)");

    const Theorem1Result r3 = theorem1_crosscheck(Valuation(monomial(2, "0", "1")), P("x-3"), kBound);
    CHECK(r3.kind == Theorem1Result::Kind::Consistent);
    CHECK(r3.details == "both positive");

    CHECK_THROWS_AS(theorem1_crosscheck(Valuation(monomial(2, "0", "1")), P("x^2"), kBound),
                    std::invalid_argument);
}

TEST_CASE("classification of finite representations") {
    CHECK(classify(Valuation(monomial(2, "0", "(0,1)"))).kind == Classification::ValueTranscendental);
    CHECK(classify(demo_chain()).kind == Classification::ResidueTranscendental);
    CHECK(classify(Valuation{pcs(2, {"1", "3", "7", "15"})}).kind == Classification::NotFinitelyRepresented);
    CHECK(classify(chain1(2, "0", "1/2", "x^2-2", "(2,1)")).kind == Classification::ValueTranscendental);

    // structural dichotomy: value-transcendental iff some minor coordinate is nonzero
    const std::vector<Valuation> vals = {Valuation(monomial(3, "1", "1/2")),
                                         Valuation(monomial(3, "1", "(0,1)")), demo_chain(),
                                         chain1(2, "0", "1/2", "x^2-2", "(3/2,-1)")};
    for (const Valuation& V : vals) {
        bool any_minor = !V.depth1_core().delta().is_torsion_over_base();
        if (V.kind() == Valuation::Kind::Chain)
            for (const ChainStep& s : V.chain().steps())
                any_minor = any_minor || !s.gamma.is_torsion_over_base();
        const Classification got = classify(V).kind;
        CHECK(got == (any_minor ? Classification::ValueTranscendental : Classification::ResidueTranscendental));
    }
}

TEST_CASE("minimal-degree torsion-free q") {
    const auto corpus = make_poly_corpus(CorpusSpec{5, 12, 7}, 80, false);

    const FindQResult r1 =
        minimal_degree_torsionfree_q(Valuation(monomial(2, "0", "(0,1)")), SearchBound{3, Integer(8)}, corpus);
    REQUIRE(r1.found);
    CHECK(r1.q == P("x"));

    const FindQResult r2 =
        minimal_degree_torsionfree_q(chain1(2, "0", "1/2", "x^2-2", "(2,1)"), SearchBound{3, Integer(8)}, corpus);
    REQUIRE(r2.found);
    CHECK(r2.q == P("x^2-2"));

    CHECK_THROWS_AS(minimal_degree_torsionfree_q(demo_chain(), SearchBound{3, Integer(8)}, corpus),
                    std::invalid_argument);
}

TEST_CASE("pcs stages from ascending chains") {
    const std::vector<MonomialValuation> stages = {monomial(2, "1", "1"), monomial(2, "3", "2"),
                                                   monomial(2, "7", "3")};
    const PcsStageReport r = pcs_from_chain(stages);
    CHECK(r.all_ok);
    REQUIRE(r.checks.size() == 3);
    for (const PcsStageCheck& c : r.checks) {
        CHECK(c.ok);
        CHECK(c.actual == c.expected);
    }

    // the emitted centers always form a pseudo-convergent prefix
    std::vector<Rational> centers;
    for (const auto& [center, eps] : r.stages) centers.push_back(center);
    CHECK(pcs_check(PcsPrefix(BaseValuation(Integer(2)), centers)));

    // equal eps across stages is rejected
    CHECK_THROWS_AS(pcs_from_chain({monomial(2, "1", "1"), monomial(2, "3", "1")}), std::invalid_argument);
    // a single stage is trivially valid
    CHECK(pcs_from_chain({monomial(2, "1", "1")}).all_ok);
    // mismatching primes are rejected
    CHECK_THROWS_AS(pcs_from_chain({monomial(2, "1", "1"), monomial(3, "3", "2")}), std::invalid_argument);

    // a stack violating the distance law is reported, not thrown
    const PcsStageReport bad = pcs_from_chain({monomial(2, "1", "1"), monomial(2, "2", "2")});
    CHECK_FALSE(bad.all_ok);
}

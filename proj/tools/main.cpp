#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "keypoly/io.hpp"

using namespace keypoly;

namespace {

// 0 = success/positive verdict, 1 = verified negative verdict, 2 = input error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string valuation_text;
    long prime = 0;
    std::string poly_text;
    std::string q_text;
    int bound_deg = 2;
    std::string bound_height = "64";
    int corpus_deg = 6;
    long corpus_height = 16;
    std::uint64_t seed = 1;
    std::size_t corpus_count = 200;
    long extend = 0;
    std::string format = "table";

    bool structured() const { return format == "structured"; }
};

Json load_config_json(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot open valuation config file '" + text + "'");
    Json j;
    in >> j;
    return j;
}

Valuation get_valuation(const Options& o) {
    if (!o.valuation_text.empty()) return valuation_from_json(load_config_json(o.valuation_text));
    if (o.prime > 0)
        // shortcut: Gauss valuation nu_{0,1} at the given prime
        return Valuation(MonomialValuation(BaseValuation(Integer(o.prime)), Rational(0), Value(Rational(1))));
    throw std::invalid_argument("missing --valuation (or the --prime Gauss shortcut)");
}

Poly get_poly(const Options& o) {
    if (o.poly_text.empty()) throw std::invalid_argument("missing --poly");
    return Poly::parse(o.poly_text);
}

Poly get_q(const Options& o) {
    if (o.q_text.empty()) throw std::invalid_argument("missing --q");
    return Poly::parse(o.q_text);
}

SearchBound get_bound(const Options& o) { return SearchBound{o.bound_deg, Integer(o.bound_height)}; }

CorpusSpec get_corpus_spec(const Options& o) { return CorpusSpec{o.corpus_deg, o.corpus_height, o.seed}; }

void emit(const Options& o, const Json& structured, const std::string& table) {
    if (o.structured())
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << table;
}

std::string expansion_table(const ExpansionReport& r) {
    std::ostringstream os;
    os << "q-expansion of " << r.input.str() << " by " << r.q.str() << "\n";
    os << "  i | p_i | value of p_i*q^i\n";
    for (const ExpansionTerm& t : r.terms)
        os << "  " << t.index << " | " << t.part.str() << " | " << t.value.str() << "\n";
    os << "min = " << r.min_value.str() << " at i in {";
    for (std::size_t k = 0; k < r.argmin.size(); ++k) os << (k ? "," : "") << r.argmin[k];
    os << "}\n";
    return os.str();
}

std::string epsilon_table(const EpsilonReport& r) {
    std::ostringstream os;
    os << "nu(f) = " << r.nu_f.str() << "\n";
    os << "  r | nu(d_r f) | (nu(f)-nu(d_r f))/r\n";
    for (const EpsilonTerm& t : r.terms)
        os << "  " << t.r << " | " << t.deriv_value.str() << " | " << t.quotient.str() << "\n";
    os << "eps = " << r.epsilon.str() << " (argmax r = " << r.argmax_r << ")\n";
    return os.str();
}

int cmd_eval(const Options& o) {
    const Valuation V = get_valuation(o);
    const Value v = V(get_poly(o));
    Json j;
    j["value"] = v.str();
    emit(o, j, v.str() + "\n");
    return kExitOk;
}

int cmd_expand(const Options& o) {
    const Poly f = get_poly(o);
    const Poly q = get_q(o);
    const std::vector<Poly> parts = f.q_expansion(q);
    Json j;
    j["input"] = f.str();
    j["q"] = q.str();
    j["terms"] = Json::array();
    std::ostringstream os;
    os << "q-expansion of " << f.str() << " by " << q.str() << "\n";
    os << "  i | p_i\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        j["terms"].push_back({{"i", i}, {"p_i", parts[i].str()}});
        os << "  " << i << " | " << parts[i].str() << "\n";
    }
    emit(o, j, os.str());
    return kExitOk;
}

int cmd_truncate(const Options& o) {
    const ExpansionReport r = truncate(get_valuation(o), get_q(o), get_poly(o));
    emit(o, to_json(r), expansion_table(r));
    return kExitOk;
}

int cmd_epsilon(const Options& o) {
    const EpsilonReport r = epsilon(get_valuation(o), get_poly(o));
    emit(o, to_json(r), epsilon_table(r));
    return kExitOk;
}

int cmd_delta(const Options& o) {
    const Valuation V = get_valuation(o);
    const MonomialValuation& w = V.monomial();  // depth-1 only
    const Poly f = get_poly(o);
    const Value d = delta_depth1(w, f);
    const NewtonPolygon np = newton_polygon(f.taylor_shift(w.center()), w.base().prime());
    Json j;
    j["delta"] = d.str();
    j["newton_polygon_of_shift"] = to_json(np);
    std::ostringstream os;
    os << "delta = " << d.str() << "\n";
    os << "root distances v_p(b - a_i): ";
    for (std::size_t k = 0; k < np.slopes.size(); ++k)
        os << (k ? ", " : "") << to_string(np.slopes[k].first) << " x" << np.slopes[k].second;
    if (np.order_at_zero > 0) os << (np.slopes.empty() ? "" : ", ") << "inf x" << np.order_at_zero;
    os << "\n";
    emit(o, j, os.str());
    return kExitOk;
}

int cmd_crosscheck(const Options& o) {
    const Valuation V = get_valuation(o);
    const CrosscheckResult r = epsilon_delta_crosscheck(V.monomial(), get_poly(o));
    std::ostringstream os;
    if (r.agree)
        os << "Agree(" << r.eps.str() << ")\n";
    else
        os << "Disagree(eps = " << r.eps.str() << ", delta = " << r.delta.str() << ")\n";
    emit(o, to_json(r), os.str());
    return r.agree ? kExitOk : kExitNegative;
}

int cmd_iskey(const Options& o) {
    const KeyVerdict v = is_key(get_valuation(o), get_q(o), get_bound(o));
    std::ostringstream os;
    switch (v.kind) {
        case KeyVerdict::Kind::Key: os << "Key"; break;
        case KeyVerdict::Kind::NotKey: os << "NotKey(witness " << v.witness.str() << ")"; break;
        default: os << "UnknownAtBound"; break;
    }
    os << "\n";
    if (!v.note.empty()) os << "note: " << v.note << "\n";
    emit(o, to_json(v), os.str());
    return v.not_key() ? kExitNegative : kExitOk;
}

int cmd_minpair(const Options& o) {
    const MinimalPairResult r = minimal_pair_check(get_valuation(o), get_q(o), get_bound(o));
    std::ostringstream os;
    switch (r.kind) {
        case MinimalPairResult::Kind::NoViolation: os << "NoViolation"; break;
        case MinimalPairResult::Kind::NoViolationAtBound: os << "NoViolationAtBound"; break;
        default:
            os << "Violation(b' with minimal polynomial " << r.witness_minpoly.str() << ", mu-distance "
               << r.distance.str() << ")";
            break;
    }
    os << "\n";
    os << "delta(Q) = " << r.delta_q.str() << "\n";
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    emit(o, to_json(r), os.str());
    return r.violated() ? kExitNegative : kExitOk;
}

int cmd_theorem1(const Options& o) {
    const Theorem1Result r = theorem1_crosscheck(get_valuation(o), get_q(o), get_bound(o));
    std::ostringstream os;
    switch (r.kind) {
        case Theorem1Result::Kind::Consistent: os << "Consistent (" << r.details << ")"; break;
        case Theorem1Result::Kind::ConsistentWithCaveat: os << "ConsistentWithCaveat (" << r.details << ")"; break;
        default: os << "Inconsistent (" << r.details << ")"; break;
    }
    os << "\n";
    emit(o, to_json(r), os.str());
    return r.kind == Theorem1Result::Kind::Inconsistent ? kExitNegative : kExitOk;
}

int cmd_classify(const Options& o) {
    const ClassifyReport r = classify(get_valuation(o));
    emit(o, to_json(r), classification_name(r.kind) + "\n" + "basis: " + r.basis + "\n");
    return kExitOk;
}

PcsPrefix get_pcs(const Options& o) {
    const Valuation V = get_valuation(o);
    PcsPrefix s = V.pcs();
    if (o.extend > 0) s = s.extended(static_cast<std::size_t>(o.extend));
    return s;
}

int cmd_pcs_check(const Options& o) {
    const bool ok = pcs_check(get_pcs(o));
    Json j;
    j["pseudo_convergent"] = ok;
    emit(o, j, std::string(ok ? "true" : "false") + "\n");
    return ok ? kExitOk : kExitNegative;
}

int cmd_pcs_trace(const Options& o) {
    const PcsTrace t = pcs_value_trace(get_pcs(o), get_poly(o));
    std::ostringstream os;
    os << "values: ";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? ", " : "") << t.values[i].str();
    os << "\nverdict: " << pcs_verdict_name(t.verdict);
    if (t.verdict == PcsTraceVerdict::FixedAtIndex) os << "(" << t.fixed_index << ")";
    os << "\nnote: " << t.note << "\n";
    emit(o, to_json(t), os.str());
    return kExitOk;
}

int cmd_pcs_from_chain(const Options& o) {
    if (o.valuation_text.empty()) throw std::invalid_argument("missing --valuation (stack config)");
    const std::vector<MonomialValuation> stages = stages_from_json(load_config_json(o.valuation_text));
    const PcsStageReport r = pcs_from_chain(stages);
    std::ostringstream os;
    os << "  stage | center | eps\n";
    for (std::size_t i = 0; i < r.stages.size(); ++i)
        os << "  " << i << " | " << to_string(r.stages[i].first) << " | " << r.stages[i].second.str() << "\n";
    os << "  (i,j) | v_p(a_j - a_i) | expected eps_i | ok\n";
    for (const PcsStageCheck& c : r.checks)
        os << "  (" << c.i << "," << c.j << ") | " << c.actual.str() << " | " << c.expected.str() << " | "
           << (c.ok ? "yes" : "NO") << "\n";
    os << (r.all_ok ? "pcs axiom holds on all pairs\n" : "pcs axiom violated\n");
    emit(o, to_json(r), os.str());
    return r.all_ok ? kExitOk : kExitNegative;
}

int cmd_scan_multiplicativity(const Options& o) {
    const Valuation V = get_valuation(o);
    const Poly q = get_q(o);
    const CorpusSpec spec = get_corpus_spec(o);
    std::vector<std::pair<Poly, Poly>> pairs;
    // adversarial built-ins: q against itself and low-degree cofactors
    std::vector<Poly> small = {q,
                               Poly::x(),
                               Poly::parse("x-1"),
                               Poly::parse("x+1"),
                               Poly::parse("x-2"),
                               Poly::parse("x^2-1"),
                               Poly::parse("x^2-2")};
    for (const Poly& a : small)
        for (const Poly& b : small) pairs.emplace_back(a, b);
    for (auto& pr : make_pair_corpus(spec, o.corpus_count)) pairs.push_back(std::move(pr));

    const MultiplicativityScan r = truncation_multiplicativity_scan(V, q, pairs);
    std::ostringstream os;
    if (r.valid)
        os << "Valid on " << pairs.size() << " pairs (" << corpus_note(spec, o.corpus_count)
           << " plus built-in adversarial pairs)\n";
    else
        os << "Counterexample(f = " << r.f.str() << ", g = " << r.g.str() << "): nu_q(fg) = " << r.vq_fg.str()
           << " but nu_q(f) + nu_q(g) = " << (r.vq_f + r.vq_g).str() << "\n";
    emit(o, to_json(r), os.str());
    return r.valid ? kExitOk : kExitNegative;
}

int cmd_trunc_equal(const Options& o) {
    const Valuation V = get_valuation(o);
    const Poly q = get_q(o);
    const CorpusSpec spec = get_corpus_spec(o);
    const std::vector<Poly> corpus = make_poly_corpus(spec, o.corpus_count, false);
    const TruncationScan r = truncation_equals(V, q, corpus, corpus_note(spec, o.corpus_count));
    std::ostringstream os;
    if (r.equal)
        os << "Equal on the corpus (" << r.corpus_note << "); equality is corpus-relative\n";
    else
        os << "Differs(witness " << r.witness.str() << ", nu_q = " << r.truncated.str() << ", nu = "
           << r.direct.str() << ")\n";
    emit(o, to_json(r), os.str());
    return r.equal ? kExitOk : kExitNegative;
}

int cmd_find_q(const Options& o) {
    const Valuation V = get_valuation(o);
    const CorpusSpec spec = get_corpus_spec(o);
    const std::vector<Poly> corpus = make_poly_corpus(spec, o.corpus_count, false);
    const FindQResult r = minimal_degree_torsionfree_q(V, get_bound(o), corpus);
    std::ostringstream os;
    if (r.found)
        os << "q = " << r.q.str() << "\n";
    else
        os << "NotFound\n";
    os << "note: " << r.note << "\n";
    emit(o, to_json(r), os.str());
    return r.found ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact valuations, key polynomials and truncations on Q[x]"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--valuation", o.valuation_text, "valuation config (inline JSON or a file path)");
    app.add_option("--prime", o.prime, "Gauss-valuation shortcut: nu_{0,1} at this prime");
    app.add_option("--poly", o.poly_text, "polynomial, e.g. \"x^2 - 2\"");
    app.add_option("--q", o.q_text, "monic polynomial q");
    app.add_option("--bound-deg", o.bound_deg, "search bound: max candidate degree");
    app.add_option("--bound-height", o.bound_height, "search bound: max coefficient height");
    app.add_option("--corpus-deg", o.corpus_deg, "corpus: max degree");
    app.add_option("--corpus-height", o.corpus_height, "corpus: coefficient height");
    app.add_option("--corpus-count", o.corpus_count, "corpus: number of samples");
    app.add_option("--seed", o.seed, "corpus: RNG seed");
    app.add_option("--extend", o.extend, "pcs: extend the prefix by n elements using its rule");
    app.add_option("--format", o.format, "output format: table or structured")
        ->check(CLI::IsMember({"table", "structured"}));

    struct Cmd {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Cmd cmds[] = {
        {"eval", "evaluate the valuation on a polynomial", cmd_eval},
        {"expand", "q-expansion of a polynomial", cmd_expand},
        {"truncate", "q-expansion valued termwise (nu_q)", cmd_truncate},
        {"epsilon", "eps(f) via Hasse derivatives", cmd_epsilon},
        {"delta", "delta(f) via Newton polygon root distances (depth-1)", cmd_delta},
        {"crosscheck", "compare eps(f) and delta(f) exactly", cmd_crosscheck},
        {"iskey", "key-polynomial predicate", cmd_iskey},
        {"minpair", "minimal-pair predicate", cmd_minpair},
        {"theorem1", "cross-validate iskey against minpair", cmd_theorem1},
        {"classify", "value-/residue-transcendental classifier", cmd_classify},
        {"pcs-check", "pseudo-convergence predicate", cmd_pcs_check},
        {"pcs-trace", "value trace of f along a pcs prefix", cmd_pcs_trace},
        {"pcs-from-chain", "pcs axiom checks for ascending-eps stages", cmd_pcs_from_chain},
        {"scan-multiplicativity", "scan nu_q(fg) = nu_q(f) + nu_q(g)", cmd_scan_multiplicativity},
        {"trunc-equal", "compare nu_q with nu on a corpus", cmd_trunc_equal},
        {"find-q", "minimal-degree q with torsion-free value", cmd_find_q},
    };
    for (const Cmd& c : cmds) app.add_subcommand(c.name, c.help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;  // 0 covers --help
    }

    try {
        for (const Cmd& c : cmds)
            if (app.got_subcommand(c.name)) return c.run(o);
        std::cerr << "error: no command\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

#include "keypoly/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace keypoly {

long CorpusGen::int_in(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
}

Rational CorpusGen::rational(long height) {
    if (height < 1) throw std::invalid_argument("height must be positive");
    const long num = int_in(-height, height);
    const long den = int_in(1, height);
    return make_rational(num, den);  // reduction can only shrink the height
}

Poly CorpusGen::poly(int max_degree, long height, bool monic, int min_degree) {
    if (min_degree < 0 || max_degree < min_degree) throw std::invalid_argument("bad degree range");
    const int degree = static_cast<int>(int_in(min_degree, max_degree));
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) coeffs[static_cast<std::size_t>(i)] = rational(height);
    if (monic) {
        coeffs[static_cast<std::size_t>(degree)] = 1;
    } else {
        Rational lead = rational(height);
        while (lead == 0) lead = rational(height);
        coeffs[static_cast<std::size_t>(degree)] = lead;
    }
    return Poly::from_coeffs(std::move(coeffs));
}

std::vector<Poly> make_poly_corpus(const CorpusSpec& spec, std::size_t count, bool monic, int min_degree) {
    CorpusGen gen(spec.seed);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.poly(spec.max_degree, spec.height, monic, min_degree));
    return out;
}

std::vector<std::pair<Poly, Poly>> make_pair_corpus(const CorpusSpec& spec, std::size_t count) {
    CorpusGen gen(spec.seed);
    std::vector<std::pair<Poly, Poly>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Poly f = gen.poly(spec.max_degree, spec.height, false);
        Poly g = gen.poly(spec.max_degree, spec.height, false);
        out.emplace_back(std::move(f), std::move(g));
    }
    return out;
}

std::string corpus_note(const CorpusSpec& spec, std::size_t count) {
    std::ostringstream os;
    os << "corpus(count=" << count << ", max_degree=" << spec.max_degree << ", height=" << spec.height
       << ", seed=" << spec.seed << ")";
    return os.str();
}

}  // namespace keypoly

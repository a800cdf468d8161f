#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "keypoly/poly.hpp"

namespace keypoly {

// Parameters of a reproducible random polynomial corpus.
struct CorpusSpec {
    int max_degree = 6;
    long height = 16;  // coefficient height cap: max(|num|, den)
    std::uint64_t seed = 1;
};

// Deterministic generator.  Draws are reduced modulo the range instead of
// going through a distribution object, so identical seeds give identical
// corpora on every platform.
class CorpusGen {
public:
    explicit CorpusGen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }
    long int_in(long lo, long hi);  // inclusive
    Rational rational(long height);
    Poly poly(int max_degree, long height, bool monic, int min_degree = 0);

private:
    std::mt19937_64 rng_;
};

std::vector<Poly> make_poly_corpus(const CorpusSpec& spec, std::size_t count, bool monic,
                                   int min_degree = 0);
std::vector<std::pair<Poly, Poly>> make_pair_corpus(const CorpusSpec& spec, std::size_t count);

std::string corpus_note(const CorpusSpec& spec, std::size_t count);

}  // namespace keypoly

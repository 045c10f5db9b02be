#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "bocskit/bocs.hpp"
#include "bocskit/rep.hpp"

// shared test utilities: the seeded RNG and the running three-vertex example

inline uint64_t testSeed() {
    if (const char* env = std::getenv("BOCSKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 20250811u;
}

inline std::mt19937_64& testRng() {
    static std::mt19937_64 rng(testSeed());
    return rng;
}

inline int randInt(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(testRng());
}

inline const std::string& runningExampleText() {
    static const std::string text = R"(
vertices 3
solid a: 1 -> 2
solid b: 2 -> 3
solid c: 1 -> 3
dashed phi: 1 -> 2
dashed psi: 2 -> 3
dashed chi: 1 -> 3
d(c) = psi*a + b*phi
d(chi) = psi @ phi
)";
    return text;
}

inline bocskit::DiffBiquiver runningExample() {
    return bocskit::parseBiquiver(runningExampleText());
}

// random L-linear map Y -> Vbar (x) Y, entries in {-1,0,1}; L-linearity means
// an entry is only allowed when the pair lands at the vertex of the source
inline bocskit::Matrix randomCMap(const bocskit::Bocs& b, const bocskit::LModule& y,
                                  int sparsity = 2) {
    bocskit::PairBasis vbarY = bocskit::tensorPairBasis(b, 1, y);
    bocskit::Matrix c(vbarY.size(), y.total());
    for (int r = 0; r < c.rows(); ++r)
        for (int col = 0; col < c.cols(); ++col) {
            if (vbarY.dstVertex(r) != y.vertexOfFlat(col)) continue;
            if (randInt(0, sparsity) != 0) continue;
            c.at(r, col) = bocskit::Rational(randInt(0, 1) ? 1 : -1);
        }
    return c;
}

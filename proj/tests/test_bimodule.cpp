#include <doctest.h>

#include "bocskit/bocs.hpp"
#include "bocskit/classify.hpp"
#include "helpers.hpp"

using namespace bocskit;

TEST_SUITE_BEGIN("bimodule");

TEST_CASE("kernel bimodule basis of the running example") {
    Bocs b(runningExample());
    const TensorPowerBasis& vb = b.vbar();
    CHECK(vb.size() == 5);
    std::vector<std::string> names;
    for (int i = 0; i < vb.size(); ++i) names.push_back(vb.displayItem(i));
    CHECK(names == std::vector<std::string>{"chi", "phi", "b*phi", "psi", "psi*a"});
    // dimension per vertex pair
    CHECK(vb.slice(2, 1).size() == 1);
    CHECK(vb.slice(3, 1).size() == 3);
    CHECK(vb.slice(3, 2).size() == 1);
}

TEST_CASE("no dashed arrows means zero kernel bimodule") {
    DiffBiquiver dbq;
    dbq.quiver = Quiver(3, {{"a", 1, 2, 0}, {"b", 2, 3, 0}});
    Bocs b(std::move(dbq));
    CHECK(b.vbar().size() == 0);
    CHECK(b.tensorSquare().size() == 0);
}

TEST_CASE("four-vertex curve-like skeleton has the expected dimensions") {
    Bocs b(canonicalBiquiver(4));
    CHECK(b.algebra().dim() == 15);
    CHECK(b.vbar().size() == 17);
    CHECK(b.tensorSquare().size() == 7);
    std::vector<std::string> t2;
    for (int i = 0; i < 7; ++i) t2.push_back(b.tensorSquare().displayItem(i));
    std::vector<std::string> expected = {"psi @ phi",   "c*psi @ phi", "rho @ chi",
                                         "rho @ psi",   "rho @ psi*a", "rho*b @ phi",
                                         "sigma @ phi"};
    std::sort(t2.begin(), t2.end());
    std::sort(expected.begin(), expected.end());
    CHECK(t2 == expected);
}

TEST_CASE("tensor square of the running example is one dimensional") {
    Bocs b(runningExample());
    REQUIRE(b.tensorSquare().size() == 1);
    CHECK(b.tensorSquare().displayItem(0) == "psi @ phi");
}

TEST_CASE("left and right actions commute (bimodule compatibility)") {
    Bocs b(runningExample());
    const PathAlgebra& alg = b.algebra();
    for (int a = 0; a < alg.dim(); ++a)
        for (int x = 0; x < b.vbar().size(); ++x)
            for (int c = 0; c < alg.dim(); ++c) {
                LinComb ea, ec, ex;
                ea[a] = Rational(1);
                ec[c] = Rational(1);
                ex[x] = Rational(1);
                LinComb left = b.ops().leftMul(ea, b.ops().rightMul(ex, ec, 1), 1);
                LinComb right = b.ops().rightMul(b.ops().leftMul(ea, ex, 1), ec, 1);
                CHECK(left == right);
            }
}

TEST_CASE("tensor concatenation covers the square and respects the middle action") {
    Bocs b(runningExample());
    // surjectivity: every T2 item is hit by some L-pair
    std::vector<bool> hit(b.tensorSquare().size(), false);
    for (int x = 0; x < b.vbar().size(); ++x)
        for (int y = 0; y < b.vbar().size(); ++y) {
            if (b.vbar().src(x) != b.vbar().dst(y)) continue;
            for (const auto& [z, c] : b.ops().tensorItems(x, 1, y, 1)) hit[z] = true;
        }
    for (bool h : hit) CHECK(h);
    // balance: (x.a) (x) y == x (x) (a.y)
    const PathAlgebra& alg = b.algebra();
    for (int x = 0; x < b.vbar().size(); ++x)
        for (int y = 0; y < b.vbar().size(); ++y)
            for (int a = 0; a < alg.dim(); ++a) {
                LinComb ea, ex, ey;
                ea[a] = Rational(1);
                ex[x] = Rational(1);
                ey[y] = Rational(1);
                LinComb lhs = b.ops().tensor(b.ops().rightMul(ex, ea, 1), 1, ey, 1);
                LinComb rhs = b.ops().tensor(ex, 1, b.ops().leftMul(ea, ey, 1), 1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("the kernel of the projection is spanned by the balance differences") {
    Bocs b(runningExample());
    // m_V as a matrix from composable L-pairs to the tensor square
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < b.vbar().size(); ++x)
        for (int y = 0; y < b.vbar().size(); ++y)
            if (b.vbar().src(x) == b.vbar().dst(y)) pairs.push_back({x, y});
    Matrix mv(b.tensorSquare().size(), static_cast<int>(pairs.size()));
    for (size_t k = 0; k < pairs.size(); ++k)
        for (const auto& [z, c] : b.ops().tensorItems(pairs[k].first, 1, pairs[k].second, 1))
            mv.at(z, static_cast<int>(k)) = c;
    int kernelDim = static_cast<int>(pairs.size()) - mv.rank();
    // span of (x.a) (x) y - x (x) (a.y) over all basis triples
    RowSpace differences(static_cast<int>(pairs.size()));
    std::map<std::pair<int, int>, int> pairIndex;
    for (size_t k = 0; k < pairs.size(); ++k) pairIndex[pairs[k]] = static_cast<int>(k);
    for (int x = 0; x < b.vbar().size(); ++x)
        for (int y = 0; y < b.vbar().size(); ++y)
            for (int a = 0; a < b.algebra().dim(); ++a) {
                LinComb xa = b.ops().rightMulBasis(x, a, 1);
                LinComb ay = b.ops().leftMulBasis(a, y, 1);
                std::vector<Rational> v(pairs.size());
                bool nonzero = false;
                for (const auto& [xi, c] : xa) {
                    auto it = pairIndex.find({xi, y});
                    if (it == pairIndex.end()) continue;
                    v[it->second] += c;
                    nonzero = true;
                }
                for (const auto& [yi, c] : ay) {
                    auto it = pairIndex.find({x, yi});
                    if (it == pairIndex.end()) continue;
                    v[it->second] -= c;
                    nonzero = true;
                }
                if (nonzero) differences.insert(std::move(v));
            }
    CHECK(differences.rank() == kernelDim);
}

TEST_CASE("directedness bound: tensor powers vanish at the vertex count") {
    Bocs b3(runningExample());
    CHECK(b3.ops().powerBasis(3).size() == 0);
    Bocs b4(canonicalBiquiver(4));
    CHECK(b4.ops().powerBasis(3).size() > 0);
    CHECK(b4.ops().powerBasis(4).size() == 0);
}

TEST_SUITE_END();

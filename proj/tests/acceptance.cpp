// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "bocskit/classify.hpp"
#include "bocskit/json_io.hpp"
#include "bocskit/koszul.hpp"
#include "bocskit/rep.hpp"
#include "helpers.hpp"

using namespace bocskit;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> run;  // throws on failure
};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

int vbarItemByName(const Bocs& b, const std::string& name) {
    for (int i = 0; i < b.vbar().size(); ++i)
        if (b.vbar().displayItem(i) == name) return i;
    throw std::runtime_error("missing vbar item " + name);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// --- shared example data ---

struct Worked {
    Bocs b;
    LModule y;
    Matrix c;
    Matrix cBad;
    Worked() : b(runningExample()), y(3) {
        y.dims[1] = 1;
        y.dims[2] = 1;
        y.dims[3] = 2;
        PairBasis vbarY = tensorPairBasis(b, 1, y);
        c = Matrix(vbarY.size(), y.total());
        int psi = vbarItemByName(b, "psi");
        int chi = vbarItemByName(b, "chi");
        c.at(vbarY.indexOf(psi, 1), 2) = Rational(1);
        c.at(vbarY.indexOf(psi, 1), 3) = Rational(1);
        cBad = c;
        cBad.at(vbarY.indexOf(psi, 1), 3) = Rational(0);
        cBad.at(vbarY.indexOf(chi, 0), 3) = Rational(1);
    }
};

// --- random generators for the property suites ---

DiffBiquiver randomBiquiverAttempt() {
    int n = randInt(2, 4);
    std::vector<Arrow> arrows;
    int solidId = 0, dashedId = 0;
    for (int i = 1; i <= n; ++i)
        for (int l = i + 1; l <= n; ++l) {
            if (randInt(0, 2) != 0)
                arrows.push_back(Arrow{"s" + std::to_string(solidId++), i, l, 0});
            if (randInt(0, 2) != 0)
                arrows.push_back(Arrow{"v" + std::to_string(dashedId++), i, l, 1});
        }
    DiffBiquiver dbq;
    dbq.quiver = Quiver(n, std::move(arrows));
    Bocs skeleton{DiffBiquiver(dbq)};
    // random sparse differential with coefficients in {-1, 0, 1}
    DiffBiquiver out = skeleton.biquiver();
    for (int ai : out.quiver.solidIndices()) {
        const Arrow& a = out.quiver.arrow(ai);
        VbarExpr expr;
        for (int item : skeleton.vbar().slice(a.dst, a.src)) {
            int coef = randInt(-1, 1);
            if (coef == 0 || randInt(0, 1)) continue;
            VbarExpr termExpr = vbarElemToExpr(skeleton, LinComb{{item, Rational(coef)}});
            expr.push_back(termExpr[0]);
        }
        if (!expr.empty()) out.d0[a.name] = std::move(expr);
    }
    const TensorPowerBasis& t2 = skeleton.tensorSquare();
    for (int ai : out.quiver.dashedIndices()) {
        const Arrow& a = out.quiver.arrow(ai);
        TensorExpr expr;
        for (int z = 0; z < t2.size(); ++z) {
            if (t2.src(z) != a.src || t2.dst(z) != a.dst) continue;
            int coef = randInt(-1, 1);
            if (coef == 0 || randInt(0, 1)) continue;
            TensorExpr termExpr = tensorElemToExpr(skeleton, LinComb{{z, Rational(coef)}});
            expr.push_back(termExpr[0]);
        }
        if (!expr.empty()) out.d1[a.name] = std::move(expr);
    }
    return out;
}

DiffBiquiver randomValidBiquiver() {
    for (int tries = 0; tries < 200; ++tries) {
        DiffBiquiver dbq = randomBiquiverAttempt();
        if (validateBiquiver(dbq).pass) return dbq;
    }
    throw std::runtime_error("could not sample a valid biquiver");
}

// test-side oracle, independent of rightAlgebraDim: solve the left-linearity
// equations for maps Vbar -> A and add dim A for the grouplike part
long long rightAlgebraOracle(const Bocs& b) {
    const PathAlgebra& alg = b.algebra();
    const TensorPowerBasis& vb = b.vbar();
    std::vector<std::pair<int, int>> slots;
    std::map<std::pair<int, int>, int> slotIndex;
    for (int x = 0; x < vb.size(); ++x)
        for (int p = 0; p < alg.dim(); ++p) {
            if (alg.basisPath(p).dst != vb.dst(x)) continue;
            slotIndex[{x, p}] = static_cast<int>(slots.size());
            slots.push_back({x, p});
        }
    std::vector<std::vector<Rational>> rows;
    for (int ai : b.quiver().solidIndices()) {
        auto fp = alg.freePathIndex({ai});
        LinComb arrowElem;
        if (fp) {
            LinComb f;
            f[*fp] = Rational(1);
            arrowElem = alg.reduceFree(f);
        }
        for (int x = 0; x < vb.size(); ++x) {
            if (b.quiver().arrow(ai).src != vb.dst(x)) continue;
            LinComb ax;
            for (const auto& [ab, ca] : arrowElem)
                linAdd(ax, b.ops().leftMulBasis(ab, x, 1), ca);
            for (int q = 0; q < alg.dim(); ++q) {
                if (alg.basisPath(q).dst != b.quiver().arrow(ai).dst) continue;
                std::vector<Rational> row(slots.size());
                bool nonzero = false;
                for (const auto& [x2, c] : ax) {
                    auto it = slotIndex.find({x2, q});
                    if (it != slotIndex.end()) {
                        row[it->second] += c;
                        nonzero = true;
                    }
                }
                for (int p = 0; p < alg.dim(); ++p) {
                    auto it = slotIndex.find({x, p});
                    if (it == slotIndex.end()) continue;
                    LinComb prod = alg.mul(arrowElem, LinComb{{p, Rational(1)}});
                    auto f = prod.find(q);
                    if (f != prod.end()) {
                        row[it->second] -= f->second;
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    Matrix sys(static_cast<int>(rows.size()), static_cast<int>(slots.size()));
    for (int r = 0; r < sys.rows(); ++r)
        for (int c = 0; c < sys.cols(); ++c) sys.at(r, c) = rows[r][c];
    return alg.dim() + static_cast<long long>(slots.size()) - sys.rank();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1: box and diamond dimension vectors of the running example", [] {
        Bocs b(runningExample());
        require(boxComplex(b, 1).totalDims() == std::vector<int>{4, 4, 1}, "Box_1 dims");
        require(boxComplex(b, 2).totalDims() == std::vector<int>{2, 1}, "Box_2 dims");
        require(boxComplex(b, 3).totalDims() == std::vector<int>{1}, "Box_3 dims");
        BocsComplex d3 = diamondComplex(b, 3);
        require(d3.totalDims() == std::vector<int>{1, 4, 4}, "Diamond_3 dims");
        require(d3.minDegree() == -2 && d3.maxDegree() == 0, "Diamond_3 degrees");
    }});

    criteria.push_back({"2: comodule condition accepts c_Y and rejects the twisted map", [] {
        Worked w;
        NCheck good = checkNObject(NObject{&w.b, w.y, w.c});
        require(good.ok, "c_Y must satisfy the condition");
        NCheck bad = checkNObject(NObject{&w.b, w.y, w.cBad});
        require(!bad.ok, "twisted map must fail");
        require(bad.residue.find("psi @ phi (x) y_0") != std::string::npos,
                "residue must be psi phi (x) v_1, got: " + bad.residue);
        // the expansion fails to be a complex exactly at d^2(omega)(e3 (x) w3)
        BocsComplex xi = xiExpand(w.b, w.y, w.cBad);
        require(!verifyComplex(xi).ok, "expansion of the twisted map must fail");
        BocsMorphism sq = compose(xi.differential.at(1), xi.differential.at(0));
        // degree-0 basis at vertex 3: pairs (e3, v3), (e3, w3), (ba,...), (c,...)
        PairBasis deg0 = algebraPairBasis(w.b, w.y);
        int e3 = w.b.algebra().idempotent(3);
        int col = -1, pos = 0;
        for (int i = 0; i < deg0.size(); ++i) {
            if (deg0.dstVertex(i) != 3) continue;
            auto [p, yf] = deg0.pair(i);
            if (p == e3 && yf == 3) col = pos;
            ++pos;
        }
        require(col >= 0, "degree-0 basis vector e3 (x) w3 not found");
        // the composite evaluates to (psi phi) (x) v1 up to sign
        PairBasis deg2 = tensorPairBasis(w.b, 2, w.y);
        int psiPhi = -1;
        for (int z = 0; z < w.b.tensorSquare().size(); ++z)
            if (w.b.tensorSquare().displayItem(z) == "psi @ phi") psiPhi = z;
        int expectPair = deg2.indexOf(psiPhi, 0);
        require(expectPair >= 0, "pair (psi phi, v1) not found");
        int expectRow = 0;
        {
            int pos = 0;
            for (int i = 0; i < deg2.size(); ++i) {
                if (deg2.dstVertex(i) != 3) continue;
                if (i == expectPair) expectRow = pos;
                ++pos;
            }
        }
        for (int r = 0; r < sq.omega[3].rows(); ++r) {
            const Rational& v = sq.omega[3].at(r, col);
            if (r == expectRow) {
                require(v * v == Rational(1), "entry at (psi phi)(x)v1 must be a sign");
            } else {
                require(v.isZero(), "d^2(omega)(e3 (x) w3) must be supported on (psi phi)(x)v1");
            }
        }
    }});

    criteria.push_back({"3: dualised action of the worked example", [] {
        Worked w;
        auto s = psiMap(w.b, w.c, w.y, w.y, true);
        int psi = vbarItemByName(w.b, "psi");
        for (int x = 0; x < w.b.vbar().size(); ++x) {
            if (x == psi) {
                Matrix expect(4, 4);
                expect.at(1, 2) = Rational(1);
                expect.at(1, 3) = Rational(1);
                require(s[x] == expect, "s(psi) must send v3 and w3 to v2");
            } else {
                require(s[x].isZero(), "all other generator images must vanish");
            }
        }
    }});

    criteria.push_back({"4: the dual presentation of the running example", [] {
        Bocs b(runningExample());
        DualPresentation dual = koszulDual(b);
        require(dual.degree0Names.size() == 5, "five degree-0 generators");
        require(dual.degree1Names.size() == 4, "four dashed generators");
        require(dual.biquiver.relations.size() == 1, "one relation");
        require(displayAlgExpr(dual.biquiver.relations[0]) == "h_chi + h_psi*h_phi",
                "relation chi + psi phi");
        require(displayVbarExpr(*dual.biquiver.differential0("h_psi_a")) == "h_c + h_psi*h_a",
                "d(psi a) = c + psi (x) a");
        require(displayVbarExpr(*dual.biquiver.differential0("h_b_phi")) == "h_c + h_b*h_phi",
                "d(b phi) = c + b (x) phi");
        require(displayTensorExpr(*dual.biquiver.differential1("h_b_a")) == "h_b @ h_a",
                "d(ba) = b (x) a");
    }});

    criteria.push_back({"5: regularisation of the dual presentation", [] {
        Bocs b(runningExample());
        DualPresentation reg = regularize(koszulDual(b));
        require(sorted(reg.degree0Names) == sorted({"h_phi", "h_psi", "h_b_phi"}),
                "degree-0 remainder");
        require(sorted(reg.degree1Names) == sorted({"h_a", "h_b", "h_b_a"}),
                "dashed remainder");
        require(displayVbarExpr(*reg.biquiver.differential0("h_b_phi")) ==
                    "-h_psi*h_a + h_b*h_phi",
                "d(b phi) = b (x) phi - psi (x) a");
    }});

    criteria.push_back({"6: dual-dimension exclusions for four simples", [] {
        auto cands = enumerateCandidates(4);
        std::map<std::string, std::pair<int, int>> counts;
        for (const auto& c : cands) {
            if (c.caseLabel != "D" && c.caseLabel != "H" && c.caseLabel != "E" &&
                c.caseLabel != "F")
                continue;
            Bocs b(c.toBiquiver());
            DualPresentation reg = regularize(ringelDual(b));
            counts[c.caseLabel] = {static_cast<int>(reg.degree0Names.size()),
                                   static_cast<int>(reg.degree1Names.size())};
        }
        require(counts.at("D") == std::make_pair(8, 7), "case D counts (8, 7)");
        require(counts.at("H") == std::make_pair(6, 6), "case H counts (6, 6)");
        ConstraintResult res = applyConstraints(cands);
        std::set<std::string> excluded;
        for (const auto& e : res.excluded) excluded.insert(e.candidate.substr(0, 1));
        require(excluded == std::set<std::string>{"D", "E", "F"}, "exactly D, E, F excluded");
    }});

    criteria.push_back({"7: classification counts, labels and the duality pairing", [] {
        ClassificationReport two = classify(2);
        require(two.classes.size() == 1, "one class for two simples");
        ClassificationReport three = classify(3);
        std::vector<std::string> l3;
        for (const auto& c : three.classes) l3.push_back(c.label);
        require(l3 == std::vector<std::string>{"2A", "2B", "2C"}, "three-simples labels");
        ClassificationReport four = classify(4);
        std::vector<std::string> l4;
        for (const auto& c : four.classes) l4.push_back(c.label);
        require(l4 == std::vector<std::string>{"A1", "A2", "B1", "B2", "C", "G1", "G2", "H1",
                                               "H2", "I1", "I2", "J", "K"},
                "four-simples labels");
        ringelPairing(four);
        std::map<std::string, std::string> expect = {
            {"A1", "G1"}, {"A2", "G2"}, {"B1", "B1"}, {"B2", "B2"}, {"C", "J"},
            {"G1", "A1"}, {"G2", "A2"}, {"H1", "I1"}, {"H2", "I2"}, {"I1", "H1"},
            {"I2", "H2"}, {"J", "C"},   {"K", "K"}};
        for (const auto& c : four.classes)
            require(c.ringelDualLabel == expect.at(c.label),
                    "pairing of " + c.label + " must be " + expect.at(c.label) + ", got " +
                        c.ringelDualLabel);
    }});

    criteria.push_back({"8a: dual validity and transform round-trips on random data", [] {
        int biquivers = 0;
        while (biquivers < 200) {
            DiffBiquiver dbq = randomValidBiquiver();
            ++biquivers;
            Bocs b{DiffBiquiver(dbq)};
            DualPresentation dual = koszulDual(b);  // aborts if d^2 != 0
            require(validateBiquiver(dual.biquiver).pass, "dual must validate");
        }
        // Psi/Phi round trip and the comodule-complex equivalence
        int pairs = 0;
        while (pairs < 50) {
            DiffBiquiver dbq = randomValidBiquiver();
            Bocs b(std::move(dbq));
            LModule y(b.vertexCount());
            for (int v = 1; v <= b.vertexCount(); ++v) y.dims[v] = randInt(0, 2);
            if (y.total() == 0) continue;
            ++pairs;
            Matrix c = randomCMap(b, y);
            require(phiMap(b, psiMap(b, c, y, y, true), y, y, true) == c, "round trip");
            bool viaDagger = checkNObject(NObject{&b, y, c}).ok;
            bool viaComplex = verifyComplex(xiExpand(b, y, c)).ok;
            require(viaDagger == viaComplex, "condition equivalent to complex property");
        }
    }});

    criteria.push_back({"8b: double dual preserves generator counts on regular inputs", [] {
        int done = 0;
        while (done < 50) {
            DiffBiquiver dbq = randomValidBiquiver();
            if (!dbq.relations.empty() || !isRegular(dbq)) continue;
            ++done;
            DualPresentation cmp;
            {
                Bocs b0{DiffBiquiver(dbq)};
                cmp.biquiver = canonicalizeDifferentials(b0);
                cmp.refreshNames();
            }
            Bocs b{DiffBiquiver(dbq)};
            DualPresentation once = regularize(ringelDual(b));
            Bocs bd(once.biquiver);
            DualPresentation twice = regularize(ringelDual(bd));
            require(twice.solidCounts() == cmp.solidCounts(), "solid counts stable");
            require(twice.dashedCounts() == cmp.dashedCounts(), "dashed counts stable");
        }
    }});

    criteria.push_back({"8c: regularisation order independence", [] {
        int done = 0;
        while (done < 25) {
            DiffBiquiver dbq = randomValidBiquiver();
            Bocs b(std::move(dbq));
            DualPresentation dual = koszulDual(b);
            ++done;
            DualPresentation a = regularize(dual, RegularizationOrder::Canonical);
            DualPresentation z = regularize(dual, RegularizationOrder::Alternate);
            require(a.solidCounts() == z.solidCounts(), "solid counts order independent");
            require(a.dashedCounts() == z.dashedCounts(), "dashed counts order independent");
        }
        for (const auto& cand : enumerateCandidates(4)) {
            Bocs b(cand.toBiquiver());
            DualPresentation dual = koszulDual(b);
            DualPresentation a = regularize(dual, RegularizationOrder::Canonical);
            DualPresentation z = regularize(dual, RegularizationOrder::Alternate);
            require(a.solidCounts() == z.solidCounts(), "solid counts order independent");
            require(a.dashedCounts() == z.dashedCounts(), "dashed counts order independent");
        }
    }});

    criteria.push_back({"9: right algebra dimension against the brute-force oracle", [] {
        Bocs b(runningExample());
        RightAlgebraDim dim = rightAlgebraDim(b);
        require(dim.total == 21, "dim 21");
        require(dim.total == rightAlgebraOracle(b), "oracle agreement");
        for (int i = 0; i < 10; ++i) {
            DiffBiquiver dbq = randomValidBiquiver();
            Bocs rb(std::move(dbq));
            require(rightAlgebraDim(rb).total == rightAlgebraOracle(rb), "oracle agreement");
        }
    }});

    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.run();
            std::cout << "PASS criterion " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion " << c.name << ": " << e.what() << "\n";
        }
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

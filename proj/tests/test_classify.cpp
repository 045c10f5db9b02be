#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bocskit/classify.hpp"
#include "helpers.hpp"

using namespace bocskit;

TEST_SUITE_BEGIN("classify");

TEST_CASE("canonical skeletons") {
    DiffBiquiver two = canonicalBiquiver(2);
    CHECK(two.quiver.solidIndices().size() == 1);
    CHECK(two.quiver.dashedIndices().size() == 1);
    DiffBiquiver three = canonicalBiquiver(3);
    CHECK(three.quiver.solidIndices().size() == 3);
    DiffBiquiver four = canonicalBiquiver(4);
    CHECK(four.quiver.solidIndices().size() == 6);
    CHECK(four.quiver.dashedIndices().size() == 6);
    for (const char* nm : {"a", "b", "c", "d", "e", "f", "phi", "psi", "rho", "chi", "sigma",
                           "tau"})
        CHECK(four.quiver.hasArrow(nm));
    CHECK_THROWS_AS(canonicalBiquiver(5), BocsError);
    CHECK_THROWS_AS(canonicalBiquiver(1), BocsError);
}

TEST_CASE("candidate enumeration counts") {
    CHECK(enumerateCandidates(2).size() == 1);
    auto three = enumerateCandidates(3);
    CHECK(three.size() == 8);
    std::set<std::string> labels;
    for (const auto& c : three) labels.insert(c.caseLabel);
    CHECK(labels == std::set<std::string>{"1A", "1B", "1C", "1D", "2A", "2B", "2C", "2D"});
    auto four = enumerateCandidates(4);
    CHECK(four.size() == 11);
    std::set<std::string> cases;
    for (const auto& c : four) cases.insert(c.caseLabel);
    CHECK(cases ==
          std::set<std::string>{"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"});
}

TEST_CASE("every enumerated candidate has a valid differential") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : enumerateCandidates(n)) {
            CHECK(validateBiquiver(c.toBiquiver()).pass);
        }
}

TEST_CASE("case 2C builds the running example") {
    CurvelikeCandidate c2c;
    for (const auto& c : enumerateCandidates(3))
        if (c.caseLabel == "2C") c2c = c;
    DiffBiquiver built = c2c.toBiquiver();
    CHECK(displayVbarExpr(*built.differential0("c")) == "b*phi + psi*a");
    CHECK(displayTensorExpr(*built.differential1("chi")) == "psi @ phi");
}

TEST_CASE("constraints select the three surviving structures for n = 3") {
    ConstraintResult res = applyConstraints(enumerateCandidates(3));
    std::vector<std::string> survivors;
    for (const auto& c : res.survivors) survivors.push_back(c.caseLabel);
    CHECK(survivors == std::vector<std::string>{"2A", "2B", "2C"});
    std::map<std::string, std::string> reasons;
    for (const auto& e : res.excluded) reasons[e.candidate.substr(0, 2)] = e.reason;
    CHECK(reasons.at("1A") == "hom-composition");
    CHECK(reasons.at("1B") == "hom-composition");
    CHECK(reasons.at("1C") == "hom-composition");
    CHECK(reasons.at("1D") == "hom-composition");
    CHECK(reasons.at("2D") == "mixed-composition");
}

TEST_CASE("constraints exclude D, E, F for n = 4 by dual dimensions") {
    ConstraintResult res = applyConstraints(enumerateCandidates(4));
    std::set<std::string> survivors;
    for (const auto& c : res.survivors) survivors.insert(c.caseLabel);
    CHECK(survivors == std::set<std::string>{"A", "B", "C", "G", "H", "I", "J", "K"});
    std::map<std::string, std::pair<std::string, std::string>> excluded;
    for (const auto& e : res.excluded)
        excluded[e.candidate.substr(0, 1)] = {e.reason, e.witness};
    for (const char* c : {"D", "E", "F"}) {
        REQUIRE(excluded.count(c));
        CHECK(excluded[c].first == "dual-dimension");
        CHECK(excluded[c].second.find("(8 degree-0, 7 degree-1)") != std::string::npos);
        CHECK(excluded[c].second.find("(6, 6)") != std::string::npos);
    }
}

TEST_CASE("normalisation clears exactly the movable higher products") {
    auto cands = enumerateCandidates(4);
    CurvelikeCandidate caseA, caseC;
    for (const auto& c : cands) {
        if (c.caseLabel == "A") caseA = c;
        if (c.caseLabel == "C") caseC = c;
    }
    // case C: all three slots clear
    CurvelikeCandidate c = caseC;
    c.m3["f:rho*ba"] = Rational(1);
    c.m3["f:c*psi*a"] = Rational(1);
    c.m3["f:cb*phi"] = Rational(1);
    NormalizedCandidate norm = normalizeClass(c);
    for (const auto& [slot, value] : norm.canonical.m3) CHECK(value.isZero());
    CHECK(norm.movesApplied.size() == 3);
    // case A: the rho*ba slot has no clearing move
    CurvelikeCandidate a = caseA;
    a.m3["f:rho*ba"] = Rational(1);
    a.m3["f:c*psi*a"] = Rational(1);
    NormalizedCandidate na = normalizeClass(a);
    CHECK(na.canonical.m3.at("f:rho*ba") == Rational(1));
    CHECK(na.canonical.m3.at("f:c*psi*a").isZero());
    // idempotence
    NormalizedCandidate again = normalizeClass(na.canonical);
    CHECK(again.canonical.m3 == na.canonical.m3);
    CHECK(again.movesApplied.empty());
}

TEST_CASE("classification counts and labels") {
    ClassificationReport two = classify(2);
    CHECK(two.classes.size() == 1);
    ClassificationReport three = classify(3);
    std::vector<std::string> l3;
    for (const auto& c : three.classes) l3.push_back(c.label);
    CHECK(l3 == std::vector<std::string>{"2A", "2B", "2C"});
    ClassificationReport four = classify(4);
    std::vector<std::string> l4;
    for (const auto& c : four.classes) l4.push_back(c.label);
    CHECK(l4 == std::vector<std::string>{"A1", "A2", "B1", "B2", "C", "G1", "G2", "H1", "H2",
                                         "I1", "I2", "J", "K"});
    // representatives are valid and survive both composition filters
    ConstraintResult check = applyConstraints(
        [&] {
            std::vector<CurvelikeCandidate> reps;
            for (const auto& c : four.classes) reps.push_back(c.representative);
            return reps;
        }());
    CHECK(check.survivors.size() == four.classes.size());
}

TEST_CASE("the four exotic classes are flagged") {
    ClassificationReport four = classify(4);
    std::set<std::string> flagged;
    for (const auto& c : four.classes)
        if (c.beyondGeometric) flagged.insert(c.label);
    CHECK(flagged == std::set<std::string>{"A1", "B1", "B2", "G1"});
}

TEST_CASE("ringel pairing is the expected involution") {
    ClassificationReport four = classify(4);
    ringelPairing(four);
    std::map<std::string, std::string> pairing;
    for (const auto& c : four.classes) pairing[c.label] = c.ringelDualLabel;
    CHECK(pairing.at("A1") == "G1");
    CHECK(pairing.at("A2") == "G2");
    CHECK(pairing.at("B1") == "B1");
    CHECK(pairing.at("B2") == "B2");
    CHECK(pairing.at("C") == "J");
    CHECK(pairing.at("G1") == "A1");
    CHECK(pairing.at("G2") == "A2");
    CHECK(pairing.at("H1") == "I1");
    CHECK(pairing.at("H2") == "I2");
    CHECK(pairing.at("I1") == "H1");
    CHECK(pairing.at("I2") == "H2");
    CHECK(pairing.at("J") == "C");
    CHECK(pairing.at("K") == "K");

    ClassificationReport three = classify(3);
    ringelPairing(three);
    std::map<std::string, std::string> p3;
    for (const auto& c : three.classes) p3[c.label] = c.ringelDualLabel;
    CHECK(p3.at("2A") == "2B");
    CHECK(p3.at("2B") == "2A");
    CHECK(p3.at("2C") == "2C");

    ClassificationReport twoR = classify(2);
    ringelPairing(twoR);
    CHECK(twoR.classes[0].ringelDualLabel == twoR.classes[0].label);
}

TEST_CASE("the stored case K document matches the class representative") {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/caseK.bocs");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    DiffBiquiver fromFile = parseBiquiver(ss.str());
    CHECK(validateBiquiver(fromFile).pass);
    ClassificationReport four = classify(4);
    const ClassInfo* k = nullptr;
    for (const auto& c : four.classes)
        if (c.label == "K") k = &c;
    REQUIRE(k);
    CHECK(printBiquiver(fromFile) == printBiquiver(k->representative.toBiquiver()));
}

TEST_CASE("regularised duals of survivors are curve-like shaped") {
    ClassificationReport four = classify(4);
    for (const auto& info : four.classes) {
        Bocs b(info.representative.toBiquiver());
        DualPresentation reg = regularize(ringelDual(b));
        auto sc = reg.solidCounts();
        auto dc = reg.dashedCounts();
        for (int i = 1; i <= 4; ++i)
            for (int l = i + 1; l <= 4; ++l) {
                CHECK(sc[i][l] == 1);
                CHECK(dc[i][l] == 1);
            }
    }
}

TEST_SUITE_END();

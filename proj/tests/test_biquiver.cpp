#include <doctest.h>

#include "bocskit/bocs.hpp"
#include "bocskit/classify.hpp"
#include "helpers.hpp"

using namespace bocskit;

TEST_SUITE_BEGIN("biquiver");

TEST_CASE("parses the running example") {
    DiffBiquiver dbq = runningExample();
    CHECK(dbq.quiver.vertexCount() == 3);
    CHECK(dbq.quiver.solidIndices().size() == 3);
    CHECK(dbq.quiver.dashedIndices().size() == 3);
    REQUIRE(dbq.differential0("c"));
    CHECK(dbq.differential0("c")->size() == 2);
    REQUIRE(dbq.differential1("chi"));
    CHECK(dbq.differential1("chi")->size() == 1);
    CHECK(dbq.differential0("a") == nullptr);
}

TEST_CASE("a document with no differential lines parses with zero differential") {
    DiffBiquiver dbq = parseBiquiver("vertices 2\nsolid a: 1 -> 2\ndashed phi: 1 -> 2\n");
    CHECK(dbq.d0.empty());
    CHECK(dbq.d1.empty());
    CHECK(validateBiquiver(dbq).pass);
}

TEST_CASE("rejects a downward arrow") {
    CHECK_THROWS_WITH_AS(parseBiquiver("vertices 3\nsolid x: 3 -> 1\n"),
                         doctest::Contains("source must precede target"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parseBiquiver("vertices 3\nsolid a: 1 -> 2\nd(a) = nosuch\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("nosuch") != std::string::npos);
    }
}

TEST_CASE("coefficients parse as rationals") {
    DiffBiquiver dbq = parseBiquiver(
        "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 1 -> 3\n"
        "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed chi: 1 -> 3\n"
        "d(c) = -1/2 psi*a + 2 b*phi\n"
        "d(chi) = -3/4 psi @ phi\n");
    const VbarExpr& e = *dbq.differential0("c");
    REQUIRE(e.size() == 2);
    CHECK(e[0].coeff.toString() == "-1/2");
    CHECK(e[1].coeff.toString() == "2");
    CHECK((*dbq.differential1("chi"))[0].coeff.toString() == "-3/4");
}

TEST_CASE("structural document errors are rejected") {
    CHECK_THROWS_AS(parseBiquiver("solid a: 1 -> 2\nvertices 3\n"), ParseError);
    CHECK_THROWS_AS(parseBiquiver("vertices 2\nvertices 2\n"), ParseError);
    CHECK_THROWS_AS(parseBiquiver("vertices 2\nsolid a: 1 -> 2\ndashed phi: 1 -> 2\n"
                                  "d(a) = phi\nd(a) = phi\n"),
                    ParseError);
    CHECK_THROWS_AS(parseBiquiver("vertices 2\nrelation a\n"), ParseError);
}

TEST_CASE("degree errors in differential lines are rejected") {
    std::string base =
        "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 1 -> 3\n"
        "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed chi: 1 -> 3\n";
    CHECK_THROWS_AS(parseBiquiver(base + "d(c) = psi @ phi\n"), ParseError);
    CHECK_THROWS_AS(parseBiquiver(base + "d(chi) = psi*a\n"), ParseError);
    CHECK_THROWS_AS(parseBiquiver(base + "d(c) = b*a\n"), ParseError);   // no dashed factor
    CHECK_THROWS_AS(parseBiquiver(base + "d(c) = psi*phi\n"), ParseError);  // two dashed
    CHECK_THROWS_AS(parseBiquiver(base + "d(b) = phi\n"), ParseError);  // endpoints mismatch
}

TEST_CASE("validation of the running example passes") {
    CHECK(validateBiquiver(runningExample()).pass);
}

TEST_CASE("a broken differential reports the Leibniz residue") {
    DiffBiquiver dbq = parseBiquiver(
        "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 1 -> 3\n"
        "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed chi: 1 -> 3\n"
        "d(a) = phi\nd(c) = psi*a\n");
    ValidationReport rep = validateBiquiver(dbq);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].where == "d^2(c)");
    CHECK(rep.violations[0].residue == "-psi @ phi");
}

TEST_CASE("relations must be annihilated by the differential") {
    // relation ba with d(a) = phi: d(ba) = b phi != 0 in the quotient
    DiffBiquiver dbq = parseBiquiver(
        "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\n"
        "dashed phi: 1 -> 2\n"
        "relation b*a\n"
        "d(a) = phi\n");
    ValidationReport rep = validateBiquiver(dbq);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violations[0].where.find("relation") != std::string::npos);
}

TEST_CASE("the four-vertex case K representative validates") {
    // forced dashed differentials d(chi)=psi phi, d(sigma)=rho psi,
    // d(tau)=sigma phi + rho chi, with d(f) carrying the sign forced over Q
    ClassificationReport rep = classify(4);
    const ClassInfo* k = nullptr;
    for (const auto& c : rep.classes)
        if (c.label == "K") k = &c;
    REQUIRE(k);
    DiffBiquiver dbq = k->representative.toBiquiver();
    CHECK(validateBiquiver(dbq).pass);
    // the literal all-positive sign pattern does not square to zero over Q
    DiffBiquiver literal = dbq;
    literal.d0["f"] = parseBiquiver(
                          "vertices 4\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 3 -> 4\n"
                          "solid d: 1 -> 3\nsolid e: 2 -> 4\nsolid f: 1 -> 4\n"
                          "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed rho: 3 -> 4\n"
                          "dashed chi: 1 -> 3\ndashed sigma: 2 -> 4\ndashed tau: 1 -> 4\n"
                          "d(f) = rho*d + sigma*a + c*chi + e*phi\n")
                          .d0["f"];
    CHECK_FALSE(validateBiquiver(literal).pass);
}

TEST_CASE("opposite is an involution up to the canonical relabeling") {
    DiffBiquiver dbq = runningExample();
    DiffBiquiver twice = opposite(opposite(dbq));
    CHECK(printBiquiver(twice) == printBiquiver(dbq));
    // arrow counts per pair agree after double opposite
    Bocs b(std::move(dbq));
    CHECK(validateBiquiver(opposite(b.biquiver())).pass);
}

TEST_CASE("opposite of the 1B structure carries the reversed table") {
    // 1B: d(chi) = 0, d(c) = b phi; its opposite has d(c) = a psi read in the
    // relabeled quiver (transport term-by-term)
    DiffBiquiver dbq = parseBiquiver(
        "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 1 -> 3\n"
        "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed chi: 1 -> 3\n"
        "d(c) = b*phi\n");
    DiffBiquiver op = opposite(dbq);
    REQUIRE(op.differential0("c"));
    CHECK(displayVbarExpr(*op.differential0("c")) == "phi*b");
    // in the opposite, phi runs 2 -> 3 and b runs 1 -> 2
    CHECK(op.quiver.arrow(op.quiver.arrowIndex("phi")).src == 2);
    CHECK(op.quiver.arrow(op.quiver.arrowIndex("b")).dst == 2);
}

TEST_CASE("opposite of an arrowless biquiver is itself") {
    DiffBiquiver dbq;
    dbq.quiver = Quiver(3, {});
    CHECK(printBiquiver(opposite(dbq)) == printBiquiver(dbq));
}

TEST_CASE("print and parse round-trip") {
    DiffBiquiver dbq = runningExample();
    std::string text = printBiquiver(dbq);
    DiffBiquiver again = parseBiquiver(text);
    CHECK(printBiquiver(again) == text);
}

TEST_SUITE_END();

#pragma once

#include <map>
#include <string>
#include <vector>

#include "bocskit/quiver.hpp"
#include "bocskit/rational.hpp"

namespace bocskit {

// Differential biquiver in name-based form. Paths are written as lists of
// arrow names in display (composition) order: {"b","a"} means "a then b".
// Name-based terms survive quiver rewrites (opposite, regularisation); they
// are resolved against concrete bases when a Bocs is built.

using PathNames = std::vector<std::string>;

struct AlgTerm {
    Rational coeff;
    PathNames path;  // nonempty, solid arrow names
};
using AlgExpr = std::vector<AlgTerm>;

struct VbarTerm {
    Rational coeff;
    PathNames left;    // acts last
    std::string gen;   // dashed arrow name
    PathNames right;   // acts first
};
using VbarExpr = std::vector<VbarTerm>;

struct TensorTerm {
    Rational coeff;
    VbarTerm x;  // outer factor (coeff fields inside are 1)
    VbarTerm y;  // inner factor
};
using TensorExpr = std::vector<TensorTerm>;

struct DiffBiquiver {
    Quiver quiver;
    std::vector<AlgExpr> relations;
    std::map<std::string, VbarExpr> d0;    // solid arrow -> value in Vbar
    std::map<std::string, TensorExpr> d1;  // dashed arrow -> value in Vbar (x) Vbar

    const VbarExpr* differential0(const std::string& solid) const;
    const TensorExpr* differential1(const std::string& dashed) const;
};

// Structural checks beyond Quiver's own: referenced names exist with the right
// degree, all terms are endpoint-homogeneous with their arrow. Throws BocsError.
void checkStructure(const DiffBiquiver& dbq);

// Reverse all arrows and relabel vertices i -> n+1-i, so directedness is kept.
DiffBiquiver opposite(const DiffBiquiver& dbq);

struct ParseError : BocsError {
    int line;
    ParseError(int line_, const std::string& what)
        : BocsError("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Line-oriented ".bocs" interchange format; see README for the grammar.
DiffBiquiver parseBiquiver(const std::string& text);
std::string printBiquiver(const DiffBiquiver& dbq);

// Combine like terms and drop zero coefficients.
AlgExpr combineAlgExpr(const AlgExpr& e);
VbarExpr combineVbarExpr(const VbarExpr& e);
TensorExpr combineTensorExpr(const TensorExpr& e);

std::string displayPath(const PathNames& p);       // "ba", "e" for trivial
std::string displayVbarTerm(const VbarTerm& t);    // "b*phi"
std::string displayVbarExpr(const VbarExpr& e);
std::string displayTensorExpr(const TensorExpr& e);
std::string displayAlgExpr(const AlgExpr& e);

}  // namespace bocskit

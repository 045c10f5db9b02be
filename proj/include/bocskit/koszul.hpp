#pragma once

#include <string>
#include <vector>

#include "bocskit/bocs.hpp"

namespace bocskit {

// Presentation of the dual bocs: a differential biquiver whose degree-0
// generators are duals of the kernel-bimodule basis and whose dashed
// generators are duals of the radical basis, together with the quadratic
// relations coming from the dual of the tensor-square.
struct DualPresentation {
    DiffBiquiver biquiver;
    bool ringel = false;
    int relationCountAtBirth = 0;           // = dim (Vbar (x)_A Vbar) of the input
    std::vector<std::string> degree0Names;  // current solid generators, in order
    std::vector<std::string> degree1Names;  // current dashed generators
    std::vector<std::string> log;           // elimination steps applied

    void refreshNames();
    // per-ordered-pair generator counts
    std::vector<std::vector<int>> solidCounts() const;
    std::vector<std::vector<int>> dashedCounts() const;
};

// Dual of the bar construction, truncated to the bocs degrees; the sign
// convention is the one forced by d^2 = 0 together with the generator
// normalisation that makes the small reference example print all-positive.
DualPresentation koszulDual(const Bocs& b);
// opposite . koszulDual . opposite
DualPresentation ringelDual(const Bocs& b);

struct SuperfluousPair {
    std::string solid;
    std::string dashed;
    Rational coeff;
};

// Solid arrows whose differential contains a bare dashed generator that occurs
// in no other term of that differential.
std::vector<SuperfluousPair> findSuperfluous(const DiffBiquiver& dbq);
bool isRegular(const DiffBiquiver& dbq);

// Remove one superfluous pair, substituting the dashed generator.
DiffBiquiver regularizeOnce(const DiffBiquiver& dbq, const SuperfluousPair& pair,
                            std::vector<std::string>* log = nullptr);

enum class RegularizationOrder { Canonical, Alternate };

// Fixed point of (linear-relation elimination + superfluous-pair removal).
// Canonical order: pairs keyed by minimal dashed generator, ties broken by
// maximal solid generator. Alternate order reverses both, for the
// order-independence property.
DualPresentation regularize(const DualPresentation& p,
                            RegularizationOrder order = RegularizationOrder::Canonical);
DiffBiquiver regularize(const DiffBiquiver& dbq, std::vector<std::string>* log = nullptr,
                        RegularizationOrder order = RegularizationOrder::Canonical);

// Rewrites the differentials in fully reduced basis form (used before printing
// and by the regularisation rewriting).
DiffBiquiver canonicalizeDifferentials(const Bocs& b);

// Regularity criterion by counting: the kernel bimodule has one generator per
// unit of Hom between the corresponding simples.
bool generatorCountCheck(const Bocs& b);

struct DimReport {
    int n = 0;
    std::vector<std::vector<int>> solidCount;   // [i][l]
    std::vector<std::vector<int>> dashedCount;  // [i][l]
    std::vector<std::vector<int>> homDim;       // dim Hom(Delta_i, Delta_l)
    std::vector<std::vector<int>> extDim;       // dim Ext^1(Delta_i, Delta_l)
    int dimA = 0;
    int dimVbar = 0;
    long long rightAlgebra = 0;
    bool regular = true;
    std::string toString() const;
};

DimReport homExtMatrices(const Bocs& b);

// dim Hom_A(V, A) with the per-summand breakdown dim(e_i A) * dim(e_l A).
struct RightAlgebraDim {
    long long total = 0;
    long long dimA = 0;
    std::vector<std::pair<std::string, long long>> summands;  // per dashed generator
};
RightAlgebraDim rightAlgebraDim(const Bocs& b);

// ---- rendering helpers shared with classify/CLI ----
VbarExpr vbarElemToExpr(const Bocs& b, const LinComb& elem);
TensorExpr tensorElemToExpr(const Bocs& b, const LinComb& elem);
AlgExpr algElemToExpr(const Bocs& b, const LinComb& elem);

}  // namespace bocskit

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bocskit/koszul.hpp"

namespace bocskit {

// The curve-like skeleton: one solid and one dashed arrow per pair i < l,
// named a,b,c,d,e,f and phi,psi,rho,chi,sigma,tau for n <= 4.
DiffBiquiver canonicalBiquiver(int n);

// A coefficient assignment on the canonical skeleton. Slot keys are the
// display names of the vbar items appearing in the differentials
// (e.g. "psi*a", "rho*d"); m3 slots are the length-two coefficient paths
// ("rho*ba", "c*psia", "cb*phi").
struct CurvelikeCandidate {
    int n = 0;
    std::string caseLabel;                  // enumeration case (A..K, 1A..2D)
    std::map<std::string, Rational> slots;  // solid differential coefficients
    std::map<std::string, Rational> m3;     // higher-product slots, {0,1}

    DiffBiquiver toBiquiver() const;
    std::string describe() const;
};

std::vector<CurvelikeCandidate> enumerateCandidates(int n);

struct Exclusion {
    std::string candidate;
    std::string reason;   // "hom-composition" | "mixed-composition" | "dual-dimension" | "validity"
    std::string witness;
};

struct ConstraintResult {
    std::vector<CurvelikeCandidate> survivors;
    std::vector<Exclusion> excluded;
};

// validity -> hom-composition filter -> mixed-composition filter ->
// dual-dimension filter, recording the first failing reason.
ConstraintResult applyConstraints(const std::vector<CurvelikeCandidate>& candidates);

// Clear the higher-product slots for which the case table provides a
// normalising move; returns the canonical representative and logs the moves.
struct NormalizedCandidate {
    CurvelikeCandidate canonical;
    std::vector<std::string> movesApplied;  // e.g. "F2(c psi, a) clears m3(c,psi,a)"
};
NormalizedCandidate normalizeClass(const CurvelikeCandidate& cand);

struct ClassInfo {
    std::string label;
    CurvelikeCandidate representative;
    std::string ringelDualLabel;  // filled by ringelPairing
    bool beyondGeometric = false; // not Morita equivalent to a geometric algebra
};

struct ClassificationReport {
    int n = 0;
    std::vector<ClassInfo> classes;
    std::vector<Exclusion> excluded;
};

ClassificationReport classify(int n);

// Computes the regularised Ringel dual of every class representative and
// matches it against the class list; throws on an unmatched dual.
void ringelPairing(ClassificationReport& report);

}  // namespace bocskit

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bocskit/matrix.hpp"
#include "bocskit/quiver.hpp"

namespace bocskit {

// Sparse linear combination over an indexed basis; context determines the basis.
using LinComb = std::map<int, Rational>;

void linAdd(LinComb& target, int index, const Rational& c);
void linAdd(LinComb& target, const LinComb& other, const Rational& scale = Rational(1));
bool linIsZero(const LinComb& c);
std::vector<Rational> linToVector(const LinComb& c, int dim);
LinComb linFromVector(const std::vector<Rational>& v);

// A path in the degree-0 part of a quiver, stored first-applied-first.
// The display name follows function composition: seq {a, b} prints as "ba".
struct Path {
    int src = 0;
    int dst = 0;
    std::vector<int> seq;  // arrow indices, application order
    bool trivial() const { return seq.empty(); }
    int length() const { return static_cast<int>(seq.size()); }
};

// Finite-dimensional path algebra A = kQ^0 / (relations) of a directed quiver.
// Directedness makes the free path space finite, so relations are handled by
// exact Gaussian elimination on that space; the chosen basis consists of the
// non-pivot paths.
class PathAlgebra {
public:
    // Relations are given over the free path space (see freePathIndex).
    PathAlgebra(const Quiver& quiver, const std::vector<LinComb>& freeRelations);

    const Quiver& quiver() const { return *quiver_; }

    // --- free path space ---
    int freePathCount() const { return static_cast<int>(freePaths_.size()); }
    const Path& freePath(int i) const { return freePaths_[i]; }
    // Index of a free path given its arrow sequence in application order.
    std::optional<int> freePathIndex(const std::vector<int>& seq) const;
    std::string freePathName(int i) const;

    // --- quotient basis ---
    int dim() const { return static_cast<int>(basis_.size()); }
    int basisFreeIndex(int b) const { return basis_[b]; }  // representative free path
    const Path& basisPath(int b) const { return freePaths_[basis_[b]]; }
    std::string basisName(int b) const { return freePathName(basis_[b]); }
    std::optional<int> basisIndexOfFree(int freeIdx) const;
    int idempotent(int vertex) const;  // basis index of e_vertex

    // Reduce an element of the free path space modulo the relation ideal.
    LinComb reduceFree(const LinComb& freeElem) const;

    // Multiplication x*y = "y then x" of quotient basis elements.
    LinComb mulBasis(int x, int y) const;
    LinComb mul(const LinComb& x, const LinComb& y) const;

    // Sub-basis of e_dst A e_src (paths src -> dst).
    std::vector<int> subBasis(int dst, int src) const;
    // Nontrivial basis elements == basis of rad A for directed quivers.
    std::vector<int> radicalBasis() const;

    int dimHom(int dst, int src) const { return static_cast<int>(subBasis(dst, src).size()); }

    std::string display(const LinComb& x) const;

private:
    const Quiver* quiver_;
    std::vector<Path> freePaths_;
    std::map<std::vector<int>, int> freeBySeq_;
    RowSpace ideal_;
    std::vector<int> basis_;               // free indices of quotient basis
    std::map<int, int> basisIndexByFree_;  // free idx -> basis idx
    std::vector<int> idempotentBasis_;     // per vertex
    // product cache; guarded so built algebras can be shared across threads
    mutable std::mutex mulMutex_;
    mutable std::map<std::pair<int, int>, LinComb> mulCache_;

    void enumeratePaths();
    void buildIdeal(const std::vector<LinComb>& freeRelations);
};

}  // namespace bocskit

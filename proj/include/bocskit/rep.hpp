#pragma once

#include <map>
#include <string>
#include <vector>

#include "bocskit/bocs.hpp"

namespace bocskit {

// Semisimple module over L = k^n: just a dimension per vertex (1-based).
struct LModule {
    std::vector<int> dims;  // dims[0] unused

    explicit LModule(int n = 0) : dims(n + 1, 0) {}
    int vertexCount() const { return static_cast<int>(dims.size()) - 1; }
    int total() const;
    int offset(int vertex) const;          // first flat index of the vertex block
    int vertexOfFlat(int flat) const;      // vertex of a flat basis index
    static LModule simple(int n, int vertex);
};

// Pairs (item, moduleBasis) with src(item) == vertex(moduleBasis): the basis of
// U (x)_L Y for U one of the tensor power bases or the algebra itself.
class PairBasis {
public:
    PairBasis() = default;
    // srcOf(item) gives the vertex the item eats from; dstOf where it lands.
    PairBasis(int itemCount, const std::vector<int>& srcOf, const std::vector<int>& dstOf,
              const LModule& y);

    int size() const { return static_cast<int>(pairs_.size()); }
    std::pair<int, int> pair(int i) const { return pairs_[i]; }
    int indexOf(int item, int yFlat) const;
    int dstVertex(int i) const { return dst_[i]; }

private:
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> dst_;
    std::map<std::pair<int, int>, int> index_;
};

PairBasis algebraPairBasis(const Bocs& b, const LModule& y);   // A (x)_L Y
PairBasis tensorPairBasis(const Bocs& b, int power, const LModule& y);  // Vbar^j (x)_L Y

// A-module: dimension vector plus an action matrix per solid arrow.
struct BocsModule {
    const Bocs* bocs = nullptr;
    LModule shape;
    std::map<int, Matrix> action;  // solid arrow index -> M_dst x M_src

    static BocsModule simple(const Bocs& b, int vertex);
    static BocsModule projective(const Bocs& b, int vertex);  // A e_vertex

    // Action of an algebra basis element (via its representative path).
    Matrix actionOf(int algebraBasis) const;
    // Relations must act by zero and shapes must match.
    ValidationReport validate() const;
    int total() const { return shape.total(); }
};

// Morphism datum of Proposition-style bocs representations: matrices on the
// grouplike components and on the dashed generators.
struct BocsMorphism {
    const BocsModule* source = nullptr;
    const BocsModule* target = nullptr;
    std::vector<Matrix> omega;     // per vertex, target_i x source_i
    std::map<int, Matrix> dashed;  // dashed arrow index -> target_{dst} x source_{src}

    static BocsMorphism zero(const BocsModule& src, const BocsModule& dst);
    static BocsMorphism identity(const BocsModule& m);

    // Value on a vbar basis element: action(p) . f(v) . action(q).
    Matrix onVbarItem(int item) const;
    bool isZero() const;
};

struct MorphismCheck {
    bool ok = true;
    std::vector<std::string> residues;
};

// f(omega_l a - a omega_i + d0 a) = 0 for every solid arrow a.
MorphismCheck checkMorphism(const BocsMorphism& f);

// Composition with the Sweedler correction from d1.
BocsMorphism compose(const BocsMorphism& g, const BocsMorphism& f);

// Dimension (and basis) of Hom(M, N) in the bocs representation category.
int morphismSpaceDim(const BocsModule& m, const BocsModule& n);
std::vector<BocsMorphism> morphismSpaceBasis(const BocsModule& m, const BocsModule& n);

// Bounded complex of bocs modules.
struct BocsComplex {
    const Bocs* bocs = nullptr;
    std::map<int, BocsModule> modules;        // degree -> module
    std::map<int, BocsMorphism> differential; // degree j -> d^j : C^j -> C^{j+1}

    // move-only: the differentials point at the module map's nodes
    BocsComplex() = default;
    BocsComplex(BocsComplex&&) = default;
    BocsComplex& operator=(BocsComplex&&) = default;
    BocsComplex(const BocsComplex&) = delete;
    BocsComplex& operator=(const BocsComplex&) = delete;

    int minDegree() const { return modules.empty() ? 0 : modules.begin()->first; }
    int maxDegree() const { return modules.empty() ? 0 : modules.rbegin()->first; }
    std::vector<int> totalDims() const;  // per degree
};

struct ComplexCheck {
    bool ok = true;
    std::vector<std::string> residues;
};

ComplexCheck verifyComplex(const BocsComplex& c);

// The homotopically projective complex attached to a vertex.
BocsComplex boxComplex(const Bocs& b, int vertex);
// k-dual of the box complex of the opposite bocs at the mirrored vertex.
BocsComplex diamondComplex(const Bocs& b, int vertex);

// Scalar cohomology of (C, d(omega_vertex)) per degree.
std::map<int, int> cohomologyDims(const BocsComplex& c, int vertex);
// dim Hom in the homotopy category from the box complex = H^0(d(omega_vertex)).
int homClasses(const BocsComplex& c, int vertex);

// ---- duality ----
// Module over b -> module over buildBocs(opposite(b.biquiver())) and back;
// `target` is the bocs the result lives over (its biquiver must be the
// opposite of m.bocs's, with vertices relabeled i -> n+1-i and names kept).
BocsModule dualizeModule(const Bocs& target, const BocsModule& m);
BocsMorphism dualizeMorphism(const Bocs& target, const BocsMorphism& f,
                             const BocsModule& dualTargetModule,
                             const BocsModule& dualSourceModule);
BocsComplex dualizeComplex(const Bocs& target, const BocsComplex& c);

// ---- the category N: pairs (Y, c_Y) ----
struct NObject {
    const Bocs* bocs = nullptr;
    LModule y;
    Matrix c;  // (vbar (x) Y) x Y, bases as in tensorPairBasis(b, 1, y)
};

struct NCheck {
    bool ok = true;
    std::string residue;       // display of the first failing column
    int filtrationLength = 0;  // kernel tower length (= dim Y when ok)
};

// Condition (dagger) plus the kernel-tower filtration witness.
NCheck checkNObject(const NObject& obj);

// Morphism datum c_f : Y -> A (x) Z; condition (dagger dagger).
struct NMorphismCheck {
    bool ok = true;
    std::string residue;
};
NMorphismCheck checkNMorphism(const Bocs& b, const Matrix& cf, const NObject& source,
                              const NObject& targetObj);
// Unit morphism y -> 1 (x) y.
Matrix nIdentity(const Bocs& b, const LModule& y);

// Expansion functor: (Y, c_Y) -> complex with Vbar^j (x) Y in degree j.
// c_Y need not satisfy (dagger); invalid data yields a non-complex, which is
// exactly how such data is diagnosed.
BocsComplex xiExpand(const Bocs& b, const LModule& y, const Matrix& cY);

// ---- the category R: dualised data ----
struct RObject {
    const Bocs* bocs = nullptr;
    LModule y;
    std::vector<Matrix> s;  // per vbar item: Y x Y
};

// Psi: maps c : Y -> U (x) Z to s : DU -> Hom(Y, Z); U is the vbar basis
// (uTensor = true) or the algebra (uTensor = false).
std::vector<Matrix> psiMap(const Bocs& b, const Matrix& c, const LModule& y, const LModule& z,
                           bool uIsVbar);
Matrix phiMap(const Bocs& b, const std::vector<Matrix>& s, const LModule& y, const LModule& z,
              bool uIsVbar);

struct RCheck {
    bool ok = true;
    std::string residue;
};
RCheck checkRObject(const RObject& obj);
RCheck checkRMorphism(const Bocs& b, const std::vector<Matrix>& sf, const RObject& source,
                      const RObject& target);

}  // namespace bocskit

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bocskit/bimodule.hpp"
#include "bocskit/biquiver.hpp"

namespace bocskit {

struct ValidationReport {
    struct Violation {
        std::string where;
        std::string residue;
    };
    bool pass = true;
    std::vector<Violation> violations;

    void add(std::string where, std::string residue) {
        pass = false;
        violations.push_back({std::move(where), std::move(residue)});
    }
    std::string toString() const;
};

// A directed normal bocs realised from a differential biquiver (with optional
// relations in the degree-0 part). Owns the path algebra, the kernel-bimodule
// bases and the resolved differential, and provides the Leibniz extension on
// all tensor powers.
class Bocs {
public:
    explicit Bocs(DiffBiquiver dbq);
    ~Bocs();
    Bocs(const Bocs&) = delete;
    Bocs& operator=(const Bocs&) = delete;
    Bocs(Bocs&&) noexcept;
    Bocs& operator=(Bocs&&) = delete;

    const DiffBiquiver& biquiver() const { return *dbq_; }
    const Quiver& quiver() const { return dbq_->quiver; }
    int vertexCount() const { return dbq_->quiver.vertexCount(); }
    const PathAlgebra& algebra() const { return *algebra_; }
    const BimoduleOps& ops() const { return *ops_; }
    const TensorPowerBasis& vbar() const { return ops_->vbar(); }
    const TensorPowerBasis& tensorSquare() const { return ops_->powerBasis(2); }

    // Resolved differential on generators.
    const LinComb& d0Arrow(int solidArrowIdx) const;  // value in vbar
    const LinComb& d1Arrow(int dashedArrowIdx) const; // value in tensor square

    // Leibniz extension: on an algebra basis element (power 0 -> 1), on a
    // power-j item (j -> j+1), and on linear combinations.
    LinComb dAlgebraBasis(int basisIdx) const;
    LinComb dFreePathSeq(const std::vector<int>& seq) const;
    LinComb dTensorItem(int power, int item) const;
    LinComb dTensor(int power, const LinComb& elem) const;  // power 0 = algebra

    // Differential checks: Leibniz kills relations, d^2 = 0 on all generators.
    ValidationReport validateDifferential() const;

    // --- matrices of the structure maps ---
    Matrix partial0Matrix() const;  // vbar x A
    Matrix partial1Matrix() const;  // T2 x vbar
    // Structure constants: [m_A(q (x) r)]_p etc. are available through
    // algebra().mulBasis and ops().leftMul/rightMul/tensor.

    // --- coalgebra data on V = A omega (+) vbar ---
    int vDim() const;  // dim A + dim vbar
    int v2Dim() const;
    std::string displayV(const LinComb& v) const;
    Matrix muMatrix() const;   // V -> V (x)_A V in the canonical decomposition
    Matrix epsMatrix() const;  // V -> A
    ValidationReport checkCoalgebra(const Matrix* muOverride = nullptr) const;

    // vertex-homogeneous slices
    std::vector<int> vbarSlice(int dst, int src) const { return vbar().slice(dst, src); }

private:
    // held behind a stable pointer: the algebra and the bases keep interior
    // pointers into the quiver, which must survive moves of the Bocs
    std::unique_ptr<DiffBiquiver> dbq_;
    std::unique_ptr<PathAlgebra> algebra_;
    std::unique_ptr<BimoduleOps> ops_;
    std::vector<LinComb> d0ByArrow_;  // indexed by arrow index; empty for unset
    std::vector<LinComb> d1ByArrow_;
    mutable std::mutex cacheMutex_;
    mutable std::vector<std::optional<LinComb>> dAlgebraCache_;

    LinComb resolveVbarTerm(const VbarTerm& t) const;
    LinComb resolveVbarExpr(const VbarExpr& e) const;
    LinComb resolveTensorExpr(const TensorExpr& e) const;
    LinComb resolvePathToAlg(const PathNames& names) const;

    // canonical V^{(x)2} and V^{(x)3} layouts for the coalgebra checks
    struct V2Layout;
    struct V3Layout;
    const V2Layout& v2() const;
    const V3Layout& v3() const;
    mutable std::unique_ptr<V2Layout> v2_;
    mutable std::unique_ptr<V3Layout> v3_;
};

// Build a bocs, requiring the differential to validate; throws BocsError on
// semantic failure. This is the only way the rest of the library obtains one.
Bocs buildBocs(DiffBiquiver dbq);

// Parse-and-validate convenience used by the CLI.
ValidationReport validateBiquiver(const DiffBiquiver& dbq);

}  // namespace bocskit

#include "bocskit/bocs.hpp"

#include <sstream>

namespace bocskit {

std::string ValidationReport::toString() const {
    if (pass) return "ok\n";
    std::ostringstream os;
    for (const auto& v : violations) os << v.where << ": residue " << v.residue << "\n";
    return os.str();
}

namespace {

LinComb freeElemFromAlgExpr(const PathAlgebra& alg, const Quiver& q, const AlgExpr& expr) {
    LinComb out;
    for (const AlgTerm& t : expr) {
        std::vector<int> seq;
        for (auto it = t.path.rbegin(); it != t.path.rend(); ++it) seq.push_back(q.arrowIndex(*it));
        auto idx = alg.freePathIndex(seq);
        if (!idx) throw BocsError("relation path " + displayPath(t.path) + " does not compose");
        linAdd(out, *idx, t.coeff);
    }
    return out;
}

}  // namespace

Bocs::~Bocs() = default;

Bocs::Bocs(Bocs&& other) noexcept
    : dbq_(std::move(other.dbq_)),
      algebra_(std::move(other.algebra_)),
      ops_(std::move(other.ops_)),
      d0ByArrow_(std::move(other.d0ByArrow_)),
      d1ByArrow_(std::move(other.d1ByArrow_)),
      dAlgebraCache_(std::move(other.dAlgebraCache_)),
      v2_(std::move(other.v2_)),
      v3_(std::move(other.v3_)) {}

Bocs::Bocs(DiffBiquiver dbq) : dbq_(std::make_unique<DiffBiquiver>(std::move(dbq))) {
    checkStructure(*dbq_);
    // relations resolve over the free path space
    std::vector<LinComb> freeRelations;
    {
        // need free paths first; build a throwaway relation-free algebra to
        // resolve sequences, then the real one
        PathAlgebra freeAlg(dbq_->quiver, {});
        for (const AlgExpr& rel : dbq_->relations)
            freeRelations.push_back(freeElemFromAlgExpr(freeAlg, dbq_->quiver, rel));
    }
    algebra_ = std::make_unique<PathAlgebra>(dbq_->quiver, freeRelations);
    ops_ = std::make_unique<BimoduleOps>(dbq_->quiver, *algebra_);

    d0ByArrow_.resize(dbq_->quiver.arrowCount());
    d1ByArrow_.resize(dbq_->quiver.arrowCount());
    for (const auto& [name, expr] : dbq_->d0)
        d0ByArrow_[dbq_->quiver.arrowIndex(name)] = resolveVbarExpr(expr);
    for (const auto& [name, expr] : dbq_->d1)
        d1ByArrow_[dbq_->quiver.arrowIndex(name)] = resolveTensorExpr(expr);
    dAlgebraCache_.resize(algebra_->dim());
}

LinComb Bocs::resolvePathToAlg(const PathNames& names) const {
    if (names.empty()) throw BocsError("internal: empty path in term");
    std::vector<int> seq;
    for (auto it = names.rbegin(); it != names.rend(); ++it)
        seq.push_back(dbq_->quiver.arrowIndex(*it));
    auto idx = algebra_->freePathIndex(seq);
    if (!idx) throw BocsError("path " + displayPath(names) + " does not compose");
    LinComb freeElem;
    freeElem[*idx] = Rational(1);
    return algebra_->reduceFree(freeElem);
}

LinComb Bocs::resolveVbarTerm(const VbarTerm& t) const {
    int v = dbq_->quiver.arrowIndex(t.gen);
    auto bare = vbar().bareIndex(v);
    if (!bare) throw BocsError("internal: missing bare generator item");
    LinComb elem;
    elem[*bare] = t.coeff;
    if (!t.right.empty()) elem = ops_->rightMul(elem, resolvePathToAlg(t.right), 1);
    if (!t.left.empty()) elem = ops_->leftMul(resolvePathToAlg(t.left), elem, 1);
    return elem;
}

LinComb Bocs::resolveVbarExpr(const VbarExpr& e) const {
    LinComb out;
    for (const VbarTerm& t : e) linAdd(out, resolveVbarTerm(t));
    return out;
}

LinComb Bocs::resolveTensorExpr(const TensorExpr& e) const {
    LinComb out;
    for (const TensorTerm& t : e) {
        VbarTerm x = t.x;
        x.coeff = Rational(1);
        VbarTerm y = t.y;
        y.coeff = Rational(1);
        LinComb xs = resolveVbarTerm(x);
        LinComb ys = resolveVbarTerm(y);
        LinComb prod = ops_->tensor(xs, 1, ys, 1);
        linAdd(out, prod, t.coeff);
    }
    return out;
}

const LinComb& Bocs::d0Arrow(int solidArrowIdx) const { return d0ByArrow_[solidArrowIdx]; }
const LinComb& Bocs::d1Arrow(int dashedArrowIdx) const { return d1ByArrow_[dashedArrowIdx]; }

LinComb Bocs::dFreePathSeq(const std::vector<int>& seq) const {
    // Leibniz over the arrows of the path, all of degree 0.
    LinComb out;
    for (size_t j = 0; j < seq.size(); ++j) {
        const LinComb& dj = d0ByArrow_[seq[j]];
        if (dj.empty()) continue;
        // suffix (applied before j), prefix (applied after j)
        std::vector<int> before(seq.begin(), seq.begin() + j);
        std::vector<int> after(seq.begin() + j + 1, seq.end());
        LinComb term = dj;
        if (!before.empty()) {
            auto idx = algebra_->freePathIndex(before);
            if (!idx) throw BocsError("internal: subpath missing");
            LinComb rb;
            rb[*idx] = Rational(1);
            term = ops_->rightMul(term, algebra_->reduceFree(rb), 1);
        }
        if (!after.empty()) {
            auto idx = algebra_->freePathIndex(after);
            if (!idx) throw BocsError("internal: subpath missing");
            LinComb lb;
            lb[*idx] = Rational(1);
            term = ops_->leftMul(algebra_->reduceFree(lb), term, 1);
        }
        linAdd(out, term);
    }
    return out;
}

LinComb Bocs::dAlgebraBasis(int basisIdx) const {
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        if (dAlgebraCache_[basisIdx]) return *dAlgebraCache_[basisIdx];
    }
    LinComb value = dFreePathSeq(algebra_->basisPath(basisIdx).seq);
    std::lock_guard<std::mutex> lock(cacheMutex_);
    dAlgebraCache_[basisIdx] = value;
    return value;
}

LinComb Bocs::dTensorItem(int power, int item) const {
    const TensorPowerBasis& basis = ops_->powerBasis(power);
    const auto& it = basis.item(item);
    LinComb out;
    auto algebraElem = [&](int b) {
        LinComb c;
        c[b] = Rational(1);
        return c;
    };
    // helper: sub-item of consecutive dashed slots [from, to) of it, with
    // explicit boundary paths
    auto subItem = [&](int from, int to, int pB, int qB) {
        TensorPowerBasis::Item s;
        s.dashed.assign(it.dashed.begin() + from, it.dashed.begin() + to);
        s.mids.assign(it.mids.begin() + from, it.mids.begin() + (to - 1));
        s.p = pB;
        s.q = qB;
        s.dst = algebra_->basisPath(pB).dst;
        s.src = algebra_->basisPath(qB).src;
        auto idx = ops_->powerBasis(to - from).indexOf(s);
        if (!idx) throw BocsError("internal: sub-item missing");
        LinComb c;
        c[*idx] = Rational(1);
        return c;
    };
    int j = power;
    auto trivialAt = [&](int vertex) { return algebra_->idempotent(vertex); };

    // slot p (0 dashed letters before it): sign +
    {
        LinComb dp = dAlgebraBasis(it.p);
        if (!dp.empty()) {
            LinComb rest = subItem(0, j, trivialAt(dbq_->quiver.arrow(it.dashed[0]).dst), it.q);
            linAdd(out, ops_->tensor(dp, 1, rest, j));
        }
    }
    // slots v_k, k = 1..j (k-1 dashed before): sign (-1)^{k-1}
    for (int k = 1; k <= j; ++k) {
        const LinComb& dv = d1ByArrow_[it.dashed[k - 1]];
        if (dv.empty()) continue;
        Rational sign((k - 1) % 2 == 0 ? 1 : -1);
        LinComb piece = dv;  // power 2
        int piecePower = 2;
        if (k == 1) {
            piece = ops_->leftMul(algebraElem(it.p), piece, piecePower);
        } else {
            LinComb prefix = subItem(0, k - 1, it.p, it.mids[k - 2]);
            piece = ops_->tensor(prefix, k - 1, piece, piecePower);
            piecePower += k - 1;
        }
        if (k == j) {
            piece = ops_->rightMul(piece, algebraElem(it.q), piecePower);
        } else {
            LinComb suffix = subItem(k, j, it.mids[k - 1], it.q);
            piece = ops_->tensor(piece, piecePower, suffix, j - k);
        }
        linAdd(out, piece, sign);
    }
    // slots m_k, k = 1..j-1 (k dashed before): sign (-1)^k
    for (int k = 1; k <= j - 1; ++k) {
        LinComb dm = dAlgebraBasis(it.mids[k - 1]);
        if (dm.empty()) continue;
        Rational sign(k % 2 == 0 ? 1 : -1);
        const Arrow& vk = dbq_->quiver.arrow(it.dashed[k - 1]);
        const Arrow& vk1 = dbq_->quiver.arrow(it.dashed[k]);
        LinComb prefix = subItem(0, k, it.p, trivialAt(vk.src));
        LinComb suffix = subItem(k, j, trivialAt(vk1.dst), it.q);
        LinComb piece = ops_->tensor(prefix, k, dm, 1);
        piece = ops_->tensor(piece, k + 1, suffix, j - k);
        linAdd(out, piece, sign);
    }
    // slot q (j dashed before): sign (-1)^j
    {
        LinComb dq = dAlgebraBasis(it.q);
        if (!dq.empty()) {
            Rational sign(j % 2 == 0 ? 1 : -1);
            LinComb head = subItem(0, j, it.p, trivialAt(dbq_->quiver.arrow(it.dashed[j - 1]).src));
            linAdd(out, ops_->tensor(head, j, dq, 1), sign);
        }
    }
    return out;
}

LinComb Bocs::dTensor(int power, const LinComb& elem) const {
    LinComb out;
    if (power == 0) {
        for (const auto& [b, c] : elem) linAdd(out, dAlgebraBasis(b), c);
        return out;
    }
    for (const auto& [i, c] : elem) linAdd(out, dTensorItem(power, i), c);
    return out;
}

ValidationReport Bocs::validateDifferential() const {
    ValidationReport report;
    // (a) relations are annihilated by the Leibniz extension
    {
        for (const AlgExpr& rel : dbq_->relations) {
            LinComb image;
            for (const AlgTerm& t : rel) {
                std::vector<int> seq;
                for (auto it = t.path.rbegin(); it != t.path.rend(); ++it)
                    seq.push_back(dbq_->quiver.arrowIndex(*it));
                linAdd(image, dFreePathSeq(seq), t.coeff);
            }
            if (!image.empty())
                report.add("d(relation " + displayAlgExpr(rel) + ")", vbar().display(image));
        }
    }
    // (b) d^2 = 0 on solid arrows
    for (int ai : dbq_->quiver.solidIndices()) {
        const LinComb& d0 = d0ByArrow_[ai];
        if (d0.empty()) continue;
        LinComb sq = dTensor(1, d0);
        if (!sq.empty())
            report.add("d^2(" + dbq_->quiver.arrow(ai).name + ")",
                       ops_->powerBasis(2).display(sq));
    }
    // (c) d^2 = 0 on dashed arrows
    for (int ai : dbq_->quiver.dashedIndices()) {
        const LinComb& d1 = d1ByArrow_[ai];
        if (d1.empty()) continue;
        LinComb sq = dTensor(2, d1);
        if (!sq.empty())
            report.add("d^2(" + dbq_->quiver.arrow(ai).name + ")",
                       ops_->powerBasis(3).display(sq));
    }
    return report;
}

Matrix Bocs::partial0Matrix() const {
    Matrix m(vbar().size(), algebra_->dim());
    for (int b = 0; b < algebra_->dim(); ++b)
        for (const auto& [i, c] : dAlgebraBasis(b)) m.at(i, b) = c;
    return m;
}

Matrix Bocs::partial1Matrix() const {
    Matrix m(tensorSquare().size(), vbar().size());
    for (int x = 0; x < vbar().size(); ++x)
        for (const auto& [i, c] : dTensorItem(1, x)) m.at(i, x) = c;
    return m;
}

// ---- coalgebra layouts ----

struct Bocs::V2Layout {
    // piece offsets in the canonical decomposition of V (x)_A V
    int dimA = 0, dimV = 0, dimT2 = 0;
    int offAOmegaOmega = 0, offVbarOmega = 0, offOmegaVbar = 0, offT2 = 0, total = 0;
};

struct Bocs::V3Layout {
    int dimA = 0, dimV = 0, dimT2 = 0, dimT3 = 0;
    std::vector<std::pair<int, int>> vbarPairs;  // composable (outer, inner) item pairs
    std::map<std::pair<int, int>, int> pairIndex;
    int offAOOO = 0, offVOO = 0, offOVO = 0, offOOV = 0, offT2O = 0, offOT2 = 0, offXOY = 0,
        offT3 = 0, total = 0;
};

const Bocs::V2Layout& Bocs::v2() const {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    if (!v2_) {
        auto lay = std::make_unique<V2Layout>();
        lay->dimA = algebra_->dim();
        lay->dimV = vbar().size();
        lay->dimT2 = tensorSquare().size();
        lay->offAOmegaOmega = 0;
        lay->offVbarOmega = lay->dimA;
        lay->offOmegaVbar = lay->dimA + lay->dimV;
        lay->offT2 = lay->dimA + 2 * lay->dimV;
        lay->total = lay->offT2 + lay->dimT2;
        v2_ = std::move(lay);
    }
    return *v2_;
}

const Bocs::V3Layout& Bocs::v3() const {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    if (!v3_) {
        auto lay = std::make_unique<V3Layout>();
        lay->dimA = algebra_->dim();
        lay->dimV = vbar().size();
        lay->dimT2 = tensorSquare().size();
        lay->dimT3 = ops_->powerBasis(3).size();
        for (int x = 0; x < lay->dimV; ++x)
            for (int y = 0; y < lay->dimV; ++y)
                if (vbar().src(x) == vbar().dst(y)) {
                    lay->pairIndex[{x, y}] = static_cast<int>(lay->vbarPairs.size());
                    lay->vbarPairs.push_back({x, y});
                }
        int off = 0;
        lay->offAOOO = off;
        off += lay->dimA;
        lay->offVOO = off;
        off += lay->dimV;
        lay->offOVO = off;
        off += lay->dimV;
        lay->offOOV = off;
        off += lay->dimV;
        lay->offT2O = off;
        off += lay->dimT2;
        lay->offOT2 = off;
        off += lay->dimT2;
        lay->offXOY = off;
        off += static_cast<int>(lay->vbarPairs.size());
        lay->offT3 = off;
        off += lay->dimT3;
        lay->total = off;
        v3_ = std::move(lay);
    }
    return *v3_;
}

int Bocs::vDim() const { return algebra_->dim() + vbar().size(); }
int Bocs::v2Dim() const { return v2().total; }

std::string Bocs::displayV(const LinComb& v) const {
    std::ostringstream os;
    bool first = true;
    int dimA = algebra_->dim();
    for (const auto& [i, c] : v) {
        std::string term =
            i < dimA ? algebra_->basisName(i) + "*w" : vbar().displayItem(i - dimA);
        if (!first) os << " + ";
        os << c.toString() << " " << term;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Matrix Bocs::muMatrix() const {
    const V2Layout& lay = v2();
    Matrix m(lay.total, vDim());
    // mu(p omega) = p omega (x) omega
    for (int p = 0; p < lay.dimA; ++p) m.at(lay.offAOmegaOmega + p, p) = Rational(1);
    // mu(x) = omega (x) x + x (x) omega + d1-extension(x)
    for (int x = 0; x < lay.dimV; ++x) {
        int col = lay.dimA + x;
        m.at(lay.offVbarOmega + x, col) = Rational(1);
        m.at(lay.offOmegaVbar + x, col) = Rational(1);
        for (const auto& [z, c] : dTensorItem(1, x)) m.at(lay.offT2 + z, col) = c;
    }
    return m;
}

Matrix Bocs::epsMatrix() const {
    Matrix m(algebra_->dim(), vDim());
    for (int p = 0; p < algebra_->dim(); ++p) m.at(p, p) = Rational(1);
    return m;
}

ValidationReport Bocs::checkCoalgebra(const Matrix* muOverride) const {
    ValidationReport report;
    const V2Layout& lay = v2();
    const V3Layout& l3 = v3();
    Matrix mu = muOverride ? *muOverride : muMatrix();
    if (mu.rows() != lay.total || mu.cols() != vDim()) {
        report.add("mu", "matrix has wrong shape");
        return report;
    }

    // counit: (eps (x) 1) mu = id = (1 (x) eps) mu
    Matrix epsLeft(vDim(), lay.total), epsRight(vDim(), lay.total);
    for (int p = 0; p < lay.dimA; ++p) {
        epsLeft.at(p, lay.offAOmegaOmega + p) = Rational(1);
        epsRight.at(p, lay.offAOmegaOmega + p) = Rational(1);
    }
    for (int x = 0; x < lay.dimV; ++x) {
        epsLeft.at(lay.dimA + x, lay.offOmegaVbar + x) = Rational(1);
        epsRight.at(lay.dimA + x, lay.offVbarOmega + x) = Rational(1);
    }
    Matrix idV = Matrix::identity(vDim());
    if (!(epsLeft * mu == idV)) report.add("counit", "(eps(x)1)mu != id");
    if (!(epsRight * mu == idV)) report.add("counit", "(1(x)eps)mu != id");

    // grouplike: mu(omega) = omega (x) omega, eps(omega) = 1
    for (int i = 1; i <= vertexCount(); ++i) {
        int p = algebra_->idempotent(i);
        std::vector<Rational> col(vDim());
        col[p] = Rational(1);
        std::vector<Rational> img = mu.apply(col);
        for (int r = 0; r < lay.total; ++r) {
            bool expectOne = r == lay.offAOmegaOmega + p;
            if (img[r] != (expectOne ? Rational(1) : Rational(0))) {
                report.add("grouplike", "mu(omega_" + std::to_string(i) + ") != omega(x)omega");
                break;
            }
        }
    }

    // mu restricted to vbar must be (omega(x)id, id(x)omega, d1)
    Matrix canonical = muMatrix();
    for (int x = 0; x < lay.dimV; ++x) {
        for (int r = 0; r < lay.total; ++r) {
            if (mu.at(r, lay.dimA + x) != canonical.at(r, lay.dimA + x)) {
                report.add("mubar", "mu(" + vbar().displayItem(x) +
                                        ") deviates from (omega(x)id, id(x)omega, d1)");
                break;
            }
        }
    }

    // coassociativity: (mu (x) 1) mu = (1 (x) mu) mu on V
    Matrix muL(l3.total, lay.total), muR(l3.total, lay.total);
    // (mu (x) 1)
    for (int p = 0; p < lay.dimA; ++p) muL.at(l3.offAOOO + p, lay.offAOmegaOmega + p) = Rational(1);
    for (int x = 0; x < lay.dimV; ++x) {
        // x (x) omega -> mu(x) (x) omega
        muL.at(l3.offOVO + x, lay.offVbarOmega + x) = Rational(1);
        muL.at(l3.offVOO + x, lay.offVbarOmega + x) = Rational(1);
        for (const auto& [z, c] : dTensorItem(1, x))
            muL.at(l3.offT2O + z, lay.offVbarOmega + x) = c;
        // omega (x) x -> omega (x) omega (x) x
        muL.at(l3.offOOV + x, lay.offOmegaVbar + x) = Rational(1);
    }
    for (int z = 0; z < lay.dimT2; ++z) {
        // z = x' (x) y' -> mu(x') (x) y'
        const auto& zi = tensorSquare().item(z);
        // split z into outer vbar item x' = (p, v1, m1) and inner y' = (v2, q)
        TensorPowerBasis::Item xPart;
        xPart.dashed = {zi.dashed[0]};
        xPart.p = zi.p;
        xPart.q = zi.mids[0];
        xPart.dst = zi.dst;
        xPart.src = algebra_->basisPath(zi.mids[0]).src;
        TensorPowerBasis::Item yPart;
        yPart.dashed = {zi.dashed[1]};
        yPart.p = algebra_->idempotent(dbq_->quiver.arrow(zi.dashed[1]).dst);
        yPart.q = zi.q;
        yPart.src = zi.src;
        yPart.dst = dbq_->quiver.arrow(zi.dashed[1]).dst;
        int xIdx = *vbar().indexOf(xPart);
        int yIdx = *vbar().indexOf(yPart);
        // omega (x) x' (x) y' lands in OT2
        muL.at(l3.offOT2 + z, lay.offT2 + z) = Rational(1);
        // x' (x) omega (x) y'
        muL.at(l3.offXOY + l3.pairIndex.at({xIdx, yIdx}), lay.offT2 + z) = Rational(1);
        // d(x') (x) y'
        LinComb dx = dTensorItem(1, xIdx);
        LinComb yElem;
        yElem[yIdx] = Rational(1);
        LinComb t3 = ops_->tensor(dx, 2, yElem, 1);
        for (const auto& [t, c] : t3) muL.at(l3.offT3 + t, lay.offT2 + z) = c;
    }
    // (1 (x) mu)
    for (int p = 0; p < lay.dimA; ++p) muR.at(l3.offAOOO + p, lay.offAOmegaOmega + p) = Rational(1);
    for (int x = 0; x < lay.dimV; ++x) {
        muR.at(l3.offVOO + x, lay.offVbarOmega + x) = Rational(1);
        muR.at(l3.offOOV + x, lay.offOmegaVbar + x) = Rational(1);
        muR.at(l3.offOVO + x, lay.offOmegaVbar + x) = Rational(1);
        for (const auto& [z, c] : dTensorItem(1, x))
            muR.at(l3.offOT2 + z, lay.offOmegaVbar + x) = c;
    }
    for (int z = 0; z < lay.dimT2; ++z) {
        const auto& zi = tensorSquare().item(z);
        TensorPowerBasis::Item xPart;
        xPart.dashed = {zi.dashed[0]};
        xPart.p = zi.p;
        xPart.q = zi.mids[0];
        xPart.dst = zi.dst;
        xPart.src = algebra_->basisPath(zi.mids[0]).src;
        TensorPowerBasis::Item yPart;
        yPart.dashed = {zi.dashed[1]};
        yPart.p = algebra_->idempotent(dbq_->quiver.arrow(zi.dashed[1]).dst);
        yPart.q = zi.q;
        yPart.src = zi.src;
        yPart.dst = dbq_->quiver.arrow(zi.dashed[1]).dst;
        int xIdx = *vbar().indexOf(xPart);
        int yIdx = *vbar().indexOf(yPart);
        muR.at(l3.offT2O + z, lay.offT2 + z) = Rational(1);
        muR.at(l3.offXOY + l3.pairIndex.at({xIdx, yIdx}), lay.offT2 + z) = Rational(1);
        LinComb dy = dTensorItem(1, yIdx);
        LinComb xElem;
        xElem[xIdx] = Rational(1);
        LinComb t3 = ops_->tensor(xElem, 1, dy, 2);
        for (const auto& [t, c] : t3) muR.at(l3.offT3 + t, lay.offT2 + z) = c;
    }
    Matrix lhs = muL * mu;
    Matrix rhs = muR * mu;
    if (!(lhs == rhs)) report.add("coassociativity", "(mu(x)1)mu != (1(x)mu)mu");

    return report;
}

Bocs buildBocs(DiffBiquiver dbq) {
    Bocs b(std::move(dbq));
    ValidationReport report = b.validateDifferential();
    if (!report.pass) throw BocsError("differential does not validate:\n" + report.toString());
    return b;
}

ValidationReport validateBiquiver(const DiffBiquiver& dbq) {
    DiffBiquiver copy = dbq;
    Bocs b(std::move(copy));
    return b.validateDifferential();
}

}  // namespace bocskit

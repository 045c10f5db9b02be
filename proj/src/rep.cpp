#include "bocskit/rep.hpp"

#include <algorithm>
#include <sstream>

namespace bocskit {

int LModule::total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

int LModule::offset(int vertex) const {
    int off = 0;
    for (int v = 1; v < vertex; ++v) off += dims[v];
    return off;
}

int LModule::vertexOfFlat(int flat) const {
    int off = 0;
    for (int v = 1; v <= vertexCount(); ++v) {
        off += dims[v];
        if (flat < off) return v;
    }
    throw BocsError("internal: flat index out of range");
}

LModule LModule::simple(int n, int vertex) {
    LModule m(n);
    m.dims[vertex] = 1;
    return m;
}

PairBasis::PairBasis(int itemCount, const std::vector<int>& srcOf, const std::vector<int>& dstOf,
                     const LModule& y) {
    for (int it = 0; it < itemCount; ++it) {
        for (int flat = 0; flat < y.total(); ++flat) {
            if (y.vertexOfFlat(flat) != srcOf[it]) continue;
            index_[{it, flat}] = static_cast<int>(pairs_.size());
            pairs_.push_back({it, flat});
            dst_.push_back(dstOf[it]);
        }
    }
}

int PairBasis::indexOf(int item, int yFlat) const {
    auto it = index_.find({item, yFlat});
    if (it == index_.end()) return -1;
    return it->second;
}

PairBasis algebraPairBasis(const Bocs& b, const LModule& y) {
    const PathAlgebra& alg = b.algebra();
    std::vector<int> src(alg.dim()), dst(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        src[i] = alg.basisPath(i).src;
        dst[i] = alg.basisPath(i).dst;
    }
    return PairBasis(alg.dim(), src, dst, y);
}

PairBasis tensorPairBasis(const Bocs& b, int power, const LModule& y) {
    const TensorPowerBasis& basis = b.ops().powerBasis(power);
    std::vector<int> src(basis.size()), dst(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        src[i] = basis.src(i);
        dst[i] = basis.dst(i);
    }
    return PairBasis(basis.size(), src, dst, y);
}

// ---- modules ----

BocsModule BocsModule::simple(const Bocs& b, int vertex) {
    BocsModule m;
    m.bocs = &b;
    m.shape = LModule::simple(b.vertexCount(), vertex);
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        m.action[ai] = Matrix(m.shape.dims[a.dst], m.shape.dims[a.src]);
    }
    return m;
}

BocsModule BocsModule::projective(const Bocs& b, int vertex) {
    BocsModule m;
    m.bocs = &b;
    m.shape = LModule(b.vertexCount());
    const PathAlgebra& alg = b.algebra();
    // basis of A e_vertex grouped by target vertex, in basis order
    std::vector<std::vector<int>> at(b.vertexCount() + 1);
    for (int i = 0; i < alg.dim(); ++i) {
        const Path& p = alg.basisPath(i);
        if (p.src == vertex) at[p.dst].push_back(i);
    }
    for (int v = 1; v <= b.vertexCount(); ++v) m.shape.dims[v] = static_cast<int>(at[v].size());
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        Matrix mat(m.shape.dims[a.dst], m.shape.dims[a.src]);
        LinComb arrowElem;
        {
            auto fp = alg.freePathIndex({ai});
            if (fp) {
                LinComb f;
                f[*fp] = Rational(1);
                arrowElem = alg.reduceFree(f);
            }
        }
        for (size_t col = 0; col < at[a.src].size(); ++col) {
            LinComb one;
            one[at[a.src][col]] = Rational(1);
            LinComb img = alg.mul(arrowElem, one);
            for (const auto& [bi, c] : img) {
                auto pos = std::find(at[a.dst].begin(), at[a.dst].end(), bi);
                if (pos == at[a.dst].end()) throw BocsError("internal: projective action");
                mat.at(static_cast<int>(pos - at[a.dst].begin()), static_cast<int>(col)) = c;
            }
        }
        m.action[ai] = std::move(mat);
    }
    return m;
}

Matrix BocsModule::actionOf(int algebraBasis) const {
    const PathAlgebra& alg = bocs->algebra();
    const Path& p = alg.basisPath(algebraBasis);
    Matrix m = Matrix::identity(shape.dims[p.src]);
    for (int ai : p.seq) m = action.at(ai) * m;
    return m;
}

ValidationReport BocsModule::validate() const {
    ValidationReport rep;
    for (int ai : bocs->quiver().solidIndices()) {
        const Arrow& a = bocs->quiver().arrow(ai);
        auto it = action.find(ai);
        if (it == action.end() || it->second.rows() != shape.dims[a.dst] ||
            it->second.cols() != shape.dims[a.src]) {
            rep.add("action(" + a.name + ")", "missing or mis-shaped matrix");
            return rep;
        }
    }
    // relations act by zero
    for (const AlgExpr& rel : bocs->biquiver().relations) {
        // evaluate the free expression on the module
        int src = -1, dst = -1;
        Matrix sum;
        for (const AlgTerm& t : rel) {
            std::vector<int> seq;
            for (auto itn = t.path.rbegin(); itn != t.path.rend(); ++itn)
                seq.push_back(bocs->quiver().arrowIndex(*itn));
            int s = bocs->quiver().arrow(seq.front()).src;
            int d = bocs->quiver().arrow(seq.back()).dst;
            Matrix m = Matrix::identity(shape.dims[s]);
            for (int ai : seq) m = action.at(ai) * m;
            if (src < 0) {
                src = s;
                dst = d;
                sum = Matrix(shape.dims[dst], shape.dims[src]);
            }
            sum = sum + m * t.coeff;
        }
        if (src >= 0 && !sum.isZero())
            rep.add("relation " + displayAlgExpr(rel), "does not act by zero");
    }
    return rep;
}

// ---- morphisms ----

BocsMorphism BocsMorphism::zero(const BocsModule& src, const BocsModule& dst) {
    BocsMorphism f;
    f.source = &src;
    f.target = &dst;
    int n = src.bocs->vertexCount();
    f.omega.resize(n + 1);
    for (int v = 1; v <= n; ++v) f.omega[v] = Matrix(dst.shape.dims[v], src.shape.dims[v]);
    for (int di : src.bocs->quiver().dashedIndices()) {
        const Arrow& a = src.bocs->quiver().arrow(di);
        f.dashed[di] = Matrix(dst.shape.dims[a.dst], src.shape.dims[a.src]);
    }
    return f;
}

BocsMorphism BocsMorphism::identity(const BocsModule& m) {
    BocsMorphism f = zero(m, m);
    for (int v = 1; v <= m.bocs->vertexCount(); ++v)
        f.omega[v] = Matrix::identity(m.shape.dims[v]);
    return f;
}

Matrix BocsMorphism::onVbarItem(int item) const {
    const Bocs& b = *source->bocs;
    const auto& it = b.vbar().item(item);
    Matrix left = target->actionOf(it.p);
    Matrix right = source->actionOf(it.q);
    return left * dashed.at(it.dashed[0]) * right;
}

bool BocsMorphism::isZero() const {
    for (size_t v = 1; v < omega.size(); ++v)
        if (!omega[v].isZero()) return false;
    for (const auto& [d, m] : dashed)
        if (!m.isZero()) return false;
    return true;
}

MorphismCheck checkMorphism(const BocsMorphism& f) {
    MorphismCheck out;
    const Bocs& b = *f.source->bocs;
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        Matrix lhs = f.omega[a.dst] * f.source->action.at(ai) -
                     f.target->action.at(ai) * f.omega[a.src];
        for (const auto& [item, c] : b.d0Arrow(ai)) lhs = lhs + f.onVbarItem(item) * c;
        if (!lhs.isZero()) {
            out.ok = false;
            out.residues.push_back("f(omega_" + std::to_string(a.dst) + " " + a.name + " - " +
                                   a.name + " omega_" + std::to_string(a.src) + " + d(" + a.name +
                                   ")) != 0");
        }
    }
    return out;
}

BocsMorphism compose(const BocsMorphism& g, const BocsMorphism& f) {
    if (f.target != g.source) throw BocsError("compose: middle modules differ");
    const Bocs& b = *f.source->bocs;
    BocsMorphism h = BocsMorphism::zero(*f.source, *g.target);
    for (int v = 1; v <= b.vertexCount(); ++v) h.omega[v] = g.omega[v] * f.omega[v];
    const TensorPowerBasis& t2 = b.tensorSquare();
    for (int di : b.quiver().dashedIndices()) {
        const Arrow& a = b.quiver().arrow(di);
        Matrix m = g.omega[a.dst] * f.dashed.at(di) + g.dashed.at(di) * f.omega[a.src];
        for (const auto& [z, c] : b.d1Arrow(di)) {
            const auto& zi = t2.item(z);
            // z = (p v1 m1) (x) (v2 q); g acts through the outer factor
            Matrix term = g.target->actionOf(zi.p) * g.dashed.at(zi.dashed[0]) *
                          g.source->actionOf(zi.mids[0]) * f.dashed.at(zi.dashed[1]) *
                          f.source->actionOf(zi.q);
            m = m + term * c;
        }
        h.dashed[di] = std::move(m);
    }
    return h;
}

int morphismSpaceDim(const BocsModule& m, const BocsModule& n) {
    return static_cast<int>(morphismSpaceBasis(m, n).size());
}

std::vector<BocsMorphism> morphismSpaceBasis(const BocsModule& m, const BocsModule& n) {
    const Bocs& b = *m.bocs;
    // unknown layout: omega blocks then dashed blocks
    std::vector<int> offsets;
    int total = 0;
    for (int v = 1; v <= b.vertexCount(); ++v) {
        offsets.push_back(total);
        total += n.shape.dims[v] * m.shape.dims[v];
    }
    std::vector<int> dashedOffsets;
    for (int di : b.quiver().dashedIndices()) {
        const Arrow& a = b.quiver().arrow(di);
        dashedOffsets.push_back(total);
        total += n.shape.dims[a.dst] * m.shape.dims[a.src];
    }
    auto omegaSlot = [&](int v, int r, int c) {
        return offsets[v - 1] + r * m.shape.dims[v] + c;
    };
    auto dashedSlot = [&](int dPos, int di, int r, int c) {
        return dashedOffsets[dPos] + r * m.shape.dims[b.quiver().arrow(di).src] + c;
    };

    // rows: one per entry of each solid-arrow constraint
    std::vector<std::vector<Rational>> rows;
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        int R = n.shape.dims[a.dst], C = m.shape.dims[a.src];
        if (R == 0 || C == 0) continue;
        // entry (r,c) of  f(omega_dst) M_a - N_a f(omega_src) + sum f-terms
        std::vector<std::vector<Rational>> block(
            static_cast<size_t>(R) * C, std::vector<Rational>(total));
        const Matrix& Ma = m.action.at(ai);
        const Matrix& Na = n.action.at(ai);
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) {
                auto& row = block[static_cast<size_t>(r) * C + c];
                // f(omega_dst) M_a : coefficient of fOmega_dst(r, k) is Ma(k, c)
                for (int k = 0; k < m.shape.dims[a.dst]; ++k)
                    row[omegaSlot(a.dst, r, k)] += Ma.at(k, c);
                // - N_a f(omega_src): coefficient of fOmega_src(k, c) is -Na(r, k)
                for (int k = 0; k < n.shape.dims[a.src]; ++k)
                    row[omegaSlot(a.src, k, c)] -= Na.at(r, k);
            }
        for (const auto& [item, coef] : b.d0Arrow(ai)) {
            const auto& it = b.vbar().item(item);
            Matrix left = n.actionOf(it.p);
            Matrix right = m.actionOf(it.q);
            int dPos = -1;
            {
                const auto& ds = b.quiver().dashedIndices();
                dPos = static_cast<int>(std::find(ds.begin(), ds.end(), it.dashed[0]) - ds.begin());
            }
            const Arrow& v = b.quiver().arrow(it.dashed[0]);
            for (int r = 0; r < R; ++r)
                for (int c = 0; c < C; ++c) {
                    auto& row = block[static_cast<size_t>(r) * C + c];
                    // left(r, u) f(v)(u, w) right(w, c)
                    for (int u = 0; u < n.shape.dims[v.dst]; ++u)
                        for (int w = 0; w < m.shape.dims[v.src]; ++w) {
                            Rational coefTotal = coef * left.at(r, u) * right.at(w, c);
                            if (!coefTotal.isZero())
                                row[dashedSlot(dPos, it.dashed[0], u, w)] += coefTotal;
                        }
                }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }

    Matrix sys(static_cast<int>(rows.size()), total);
    for (int r = 0; r < sys.rows(); ++r)
        for (int c = 0; c < total; ++c) sys.at(r, c) = rows[r][c];
    std::vector<std::vector<Rational>> kernel =
        total == 0 ? std::vector<std::vector<Rational>>{} : sys.kernelBasis();
    if (sys.rows() == 0 && total > 0) {
        kernel.clear();
        for (int i = 0; i < total; ++i) {
            std::vector<Rational> v(total);
            v[i] = Rational(1);
            kernel.push_back(std::move(v));
        }
    }

    std::vector<BocsMorphism> basis;
    for (const auto& vec : kernel) {
        BocsMorphism f = BocsMorphism::zero(m, n);
        for (int v = 1; v <= b.vertexCount(); ++v)
            for (int r = 0; r < n.shape.dims[v]; ++r)
                for (int c = 0; c < m.shape.dims[v]; ++c)
                    f.omega[v].at(r, c) = vec[omegaSlot(v, r, c)];
        int dPos = 0;
        for (int di : b.quiver().dashedIndices()) {
            const Arrow& a = b.quiver().arrow(di);
            for (int r = 0; r < n.shape.dims[a.dst]; ++r)
                for (int c = 0; c < m.shape.dims[a.src]; ++c)
                    f.dashed[di].at(r, c) = vec[dashedSlot(dPos, di, r, c)];
            ++dPos;
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

// ---- complexes ----

std::vector<int> BocsComplex::totalDims() const {
    std::vector<int> out;
    for (const auto& [deg, m] : modules) out.push_back(m.total());
    return out;
}

ComplexCheck verifyComplex(const BocsComplex& c) {
    ComplexCheck out;
    for (const auto& [deg, d] : c.differential) {
        MorphismCheck mc = checkMorphism(d);
        if (!mc.ok) {
            out.ok = false;
            for (const auto& r : mc.residues)
                out.residues.push_back("d^" + std::to_string(deg) + ": " + r);
        }
    }
    for (const auto& [deg, d] : c.differential) {
        auto next = c.differential.find(deg + 1);
        if (next == c.differential.end()) continue;
        BocsMorphism sq = compose(next->second, d);
        if (!sq.isZero()) {
            out.ok = false;
            out.residues.push_back("d^" + std::to_string(deg + 1) + " d^" + std::to_string(deg) +
                                   " != 0");
        }
    }
    return out;
}

namespace {

// Build the module Vbar^j (x) Y (A (x) Y for j = 0) together with its pair basis.
struct GradedPiece {
    PairBasis pairs;
    BocsModule module;
    // flat position of each pair inside its vertex block
    std::vector<int> posInVertex;
    std::vector<std::vector<int>> atVertex;  // vertex -> pair indices
};

GradedPiece buildPiece(const Bocs& b, int power, const LModule& y) {
    GradedPiece piece;
    piece.pairs = power == 0 ? algebraPairBasis(b, y) : tensorPairBasis(b, power, y);
    piece.module.bocs = &b;
    piece.module.shape = LModule(b.vertexCount());
    piece.atVertex.assign(b.vertexCount() + 1, {});
    piece.posInVertex.resize(piece.pairs.size());
    for (int i = 0; i < piece.pairs.size(); ++i) {
        int v = piece.pairs.dstVertex(i);
        piece.posInVertex[i] = static_cast<int>(piece.atVertex[v].size());
        piece.atVertex[v].push_back(i);
        piece.module.shape.dims[v]++;
    }
    // solid action: left multiplication on the item part
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        Matrix mat(piece.module.shape.dims[a.dst], piece.module.shape.dims[a.src]);
        LinComb arrowElem;
        if (auto fp = b.algebra().freePathIndex({ai})) {
            LinComb f;
            f[*fp] = Rational(1);
            arrowElem = b.algebra().reduceFree(f);
        }
        for (int pi : piece.atVertex[a.src]) {
            auto [item, yFlat] = piece.pairs.pair(pi);
            LinComb img;
            if (power == 0) {
                LinComb one;
                one[item] = Rational(1);
                img = b.algebra().mul(arrowElem, one);
            } else {
                LinComb one;
                one[item] = Rational(1);
                img = b.ops().leftMul(arrowElem, one, power);
            }
            for (const auto& [newItem, c] : img) {
                int pj = piece.pairs.indexOf(newItem, yFlat);
                if (pj < 0) throw BocsError("internal: action left the pair basis");
                mat.at(piece.posInVertex[pj], piece.posInVertex[pi]) += c;
            }
        }
        piece.module.action[ai] = std::move(mat);
    }
    return piece;
}

}  // namespace

BocsComplex xiExpand(const Bocs& b, const LModule& y, const Matrix& cY) {
    int n = b.vertexCount();
    PairBasis vbarY = tensorPairBasis(b, 1, y);
    if (cY.rows() != vbarY.size() || cY.cols() != y.total())
        throw BocsError("xiExpand: c_Y has wrong shape");
    for (int r = 0; r < cY.rows(); ++r)
        for (int col = 0; col < cY.cols(); ++col)
            if (!cY.at(r, col).isZero() && vbarY.dstVertex(r) != y.vertexOfFlat(col))
                throw BocsError("xiExpand: c_Y is not L-linear");

    BocsComplex complex;
    complex.bocs = &b;
    std::vector<GradedPiece> pieces;
    for (int j = 0; j <= n - 1; ++j) {
        pieces.push_back(buildPiece(b, j, y));
        if (j > 0 && pieces.back().pairs.size() == 0) {
            pieces.pop_back();
            break;
        }
    }
    for (size_t j = 0; j < pieces.size(); ++j)
        complex.modules[static_cast<int>(j)] = pieces[j].module;

    for (size_t j = 0; j + 1 < pieces.size(); ++j) {
        const GradedPiece& cur = pieces[j];
        const GradedPiece& nxt = pieces[j + 1];
        BocsMorphism d = BocsMorphism::zero(complex.modules[static_cast<int>(j)],
                                            complex.modules[static_cast<int>(j) + 1]);
        Rational signJ(j % 2 == 0 ? 1 : -1);
        // omega components: -(d x)(x) y + (-1)^j x (x) c(y)
        for (int pi = 0; pi < cur.pairs.size(); ++pi) {
            auto [item, yFlat] = cur.pairs.pair(pi);
            int vtx = cur.pairs.dstVertex(pi);
            auto addTarget = [&](const LinComb& items, int yTo, const Rational& c) {
                for (const auto& [ni, cc] : items) {
                    int pj = nxt.pairs.indexOf(ni, yTo);
                    if (pj < 0) throw BocsError("internal: xi differential left basis");
                    d.omega[vtx].at(nxt.posInVertex[pj], cur.posInVertex[pi]) += cc * c;
                }
            };
            // -(d x) (x) y
            LinComb dx = b.dTensor(static_cast<int>(j), LinComb{{item, Rational(1)}});
            addTarget(dx, yFlat, Rational(-1));
            // (-1)^j x (x) c(y): c(y) over vbar pairs
            for (int row = 0; row < vbarY.size(); ++row) {
                const Rational& coef = cY.at(row, yFlat);
                if (coef.isZero()) continue;
                auto [xPrime, yTo] = vbarY.pair(row);
                LinComb joined;
                if (j == 0) {
                    LinComb one;
                    one[xPrime] = Rational(1);
                    LinComb pElem;
                    pElem[item] = Rational(1);
                    joined = b.ops().leftMul(pElem, one, 1);
                } else {
                    joined = b.ops().tensorItems(item, static_cast<int>(j), xPrime, 1);
                }
                addTarget(joined, yTo, signJ * coef);
            }
        }
        // dashed components: v (x) x (x) y
        for (int di : b.quiver().dashedIndices()) {
            const Arrow& a = b.quiver().arrow(di);
            Matrix& mat = d.dashed[di];
            auto bare = b.vbar().bareIndex(di);
            for (int pi : cur.atVertex[a.src]) {
                auto [item, yFlat] = cur.pairs.pair(pi);
                LinComb out;
                if (j == 0) {
                    out = b.ops().rightMulBasis(*bare, item, 1);
                } else {
                    out = b.ops().tensorItems(*bare, 1, item, static_cast<int>(j));
                }
                for (const auto& [ni, cc] : out) {
                    int pj = nxt.pairs.indexOf(ni, yFlat);
                    if (pj < 0) throw BocsError("internal: xi dashed differential left basis");
                    mat.at(nxt.posInVertex[pj], cur.posInVertex[pi]) += cc;
                }
            }
        }
        complex.differential[static_cast<int>(j)] = std::move(d);
    }
    return complex;
}

BocsComplex boxComplex(const Bocs& b, int vertex) {
    LModule y = LModule::simple(b.vertexCount(), vertex);
    PairBasis vbarY = tensorPairBasis(b, 1, y);
    Matrix zero(vbarY.size(), y.total());
    return xiExpand(b, y, zero);
}

BocsComplex diamondComplex(const Bocs& b, int vertex) {
    Bocs opp = buildBocs(opposite(b.biquiver()));
    int mirrored = b.vertexCount() + 1 - vertex;
    BocsComplex box = boxComplex(opp, mirrored);
    return dualizeComplex(b, box);
}

std::map<int, int> cohomologyDims(const BocsComplex& c, int vertex) {
    std::map<int, int> out;
    auto blockOf = [&](int deg) -> Matrix {
        auto d = c.differential.find(deg);
        if (d == c.differential.end()) {
            int rows = 0, cols = 0;
            auto mNext = c.modules.find(deg + 1);
            auto mCur = c.modules.find(deg);
            rows = mNext == c.modules.end() ? 0 : mNext->second.shape.dims[vertex];
            cols = mCur == c.modules.end() ? 0 : mCur->second.shape.dims[vertex];
            return Matrix(rows, cols);
        }
        return d->second.omega[vertex];
    };
    for (const auto& [deg, m] : c.modules) {
        int dim = m.shape.dims[vertex];
        Matrix dj = blockOf(deg);
        Matrix dPrev = blockOf(deg - 1);
        int h = dim - dj.rank() - dPrev.rank();
        out[deg] = h;
    }
    return out;
}

int homClasses(const BocsComplex& c, int vertex) {
    auto h = cohomologyDims(c, vertex);
    auto it = h.find(0);
    return it == h.end() ? 0 : it->second;
}

// ---- duality ----

BocsModule dualizeModule(const Bocs& target, const BocsModule& m) {
    int n = target.vertexCount();
    BocsModule out;
    out.bocs = &target;
    out.shape = LModule(n);
    for (int v = 1; v <= n; ++v) out.shape.dims[v] = m.shape.dims[n + 1 - v];
    for (int ai : target.quiver().solidIndices()) {
        const Arrow& a = target.quiver().arrow(ai);
        int overOp = m.bocs->quiver().arrowIndex(a.name);
        out.action[ai] = m.action.at(overOp).transpose();
    }
    return out;
}

BocsMorphism dualizeMorphism(const Bocs& target, const BocsMorphism& f,
                             const BocsModule& dualTargetModule,
                             const BocsModule& dualSourceModule) {
    int n = target.vertexCount();
    BocsMorphism out = BocsMorphism::zero(dualTargetModule, dualSourceModule);
    for (int v = 1; v <= n; ++v) out.omega[v] = f.omega[n + 1 - v].transpose();
    // the dashed components flip sign: together with the Koszul sign in the
    // opposite's degree-1 differential this makes D(gf) = Df Dg exact
    for (int di : target.quiver().dashedIndices()) {
        const Arrow& a = target.quiver().arrow(di);
        int overOp = f.source->bocs->quiver().arrowIndex(a.name);
        out.dashed[di] = f.dashed.at(overOp).transpose() * Rational(-1);
    }
    return out;
}

BocsComplex dualizeComplex(const Bocs& target, const BocsComplex& c) {
    BocsComplex out;
    out.bocs = &target;
    for (const auto& [deg, m] : c.modules) out.modules[-deg] = dualizeModule(target, m);
    for (const auto& [deg, d] : c.differential) {
        // d : C^deg -> C^{deg+1} dualizes to (DC)^{-deg-1} -> (DC)^{-deg}
        out.differential[-deg - 1] =
            dualizeMorphism(target, d, out.modules.at(-deg - 1), out.modules.at(-deg));
    }
    return out;
}

// ---- category N ----

NCheck checkNObject(const NObject& obj) {
    const Bocs& b = *obj.bocs;
    NCheck out;
    PairBasis vbarY = tensorPairBasis(b, 1, obj.y);
    PairBasis t2Y = tensorPairBasis(b, 2, obj.y);
    if (obj.c.rows() != vbarY.size() || obj.c.cols() != obj.y.total())
        throw BocsError("checkNObject: c_Y has wrong shape");
    for (int r = 0; r < obj.c.rows(); ++r)
        for (int col = 0; col < obj.c.cols(); ++col)
            if (!obj.c.at(r, col).isZero() && vbarY.dstVertex(r) != obj.y.vertexOfFlat(col))
                throw BocsError("checkNObject: c_Y is not L-linear");

    // (dagger): (d1 (x) 1) c + (mV (x) 1)(1 (x) c) c = 0
    Matrix residue(t2Y.size(), obj.y.total());
    for (int col = 0; col < obj.y.total(); ++col) {
        for (int row = 0; row < vbarY.size(); ++row) {
            const Rational& c1 = obj.c.at(row, col);
            if (c1.isZero()) continue;
            auto [x1, y1] = vbarY.pair(row);
            // (d1 (x) 1)
            for (const auto& [z, cz] : b.dTensorItem(1, x1)) {
                int t = t2Y.indexOf(z, y1);
                if (t < 0) throw BocsError("internal: (dagger) left basis");
                residue.at(t, col) += cz * c1;
            }
            // (mV (x) 1)(1 (x) c)
            for (int row2 = 0; row2 < vbarY.size(); ++row2) {
                const Rational& c2 = obj.c.at(row2, y1);
                if (c2.isZero()) continue;
                auto [x2, y2] = vbarY.pair(row2);
                for (const auto& [z, cz] : b.ops().tensorItems(x1, 1, x2, 1)) {
                    int t = t2Y.indexOf(z, y2);
                    if (t < 0) throw BocsError("internal: (dagger) left basis");
                    residue.at(t, col) += cz * c1 * c2;
                }
            }
        }
    }
    if (!residue.isZero()) {
        out.ok = false;
        std::ostringstream os;
        for (int col = 0; col < obj.y.total() && os.tellp() == 0; ++col)
            for (int t = 0; t < t2Y.size(); ++t) {
                if (residue.at(t, col).isZero()) continue;
                auto [z, yf] = t2Y.pair(t);
                os << "(dagger)(y_" << col << ") contains " << residue.at(t, col).toString() << " "
                   << b.tensorSquare().displayItem(z) << " (x) y_" << yf;
                break;
            }
        out.residue = os.str();
    }

    // kernel tower: Y_1 = ker c, Y_{q+1} = c^{-1}(Vbar (x) Y_q)
    int dimY = obj.y.total();
    std::vector<std::vector<Rational>> span;  // columns spanning Y_q
    int lastDim = -1;
    int steps = 0;
    while (static_cast<int>(span.size()) < dimY) {
        // build Vbar (x) span
        std::vector<std::vector<Rational>> image;  // in vbarY coordinates
        for (int x = 0; x < b.vbar().size(); ++x) {
            for (const auto& w : span) {
                std::vector<Rational> col(vbarY.size());
                bool nonzero = false;
                for (int yf = 0; yf < dimY; ++yf) {
                    if (w[yf].isZero()) continue;
                    int p = vbarY.indexOf(x, yf);
                    if (p < 0) continue;  // tensor over L kills incompatible parts
                    col[p] = w[yf];
                    nonzero = true;
                }
                if (nonzero) image.push_back(std::move(col));
            }
        }
        // preimage of the image-span under c
        Matrix sys(vbarY.size(), static_cast<int>(image.size()) + dimY);
        for (size_t k = 0; k < image.size(); ++k)
            for (int r = 0; r < vbarY.size(); ++r) sys.at(r, static_cast<int>(k)) = image[k][r];
        for (int u = 0; u < dimY; ++u)
            for (int r = 0; r < vbarY.size(); ++r)
                sys.at(r, static_cast<int>(image.size()) + u) = obj.c.at(r, u);
        RowSpace next(dimY, false);
        for (const auto& k : sys.kernelBasis()) {
            std::vector<Rational> u(k.begin() + image.size(), k.end());
            next.insert(std::move(u));
        }
        std::vector<std::vector<Rational>> newSpan;
        for (const auto& [p, rowv] : next.rows()) newSpan.push_back(rowv);
        if (static_cast<int>(newSpan.size()) == lastDim) break;  // stabilised
        lastDim = static_cast<int>(newSpan.size());
        span = std::move(newSpan);
        ++steps;
        if (steps > dimY + 1) break;
    }
    if (static_cast<int>(span.size()) < dimY) {
        out.ok = false;
        if (out.residue.empty()) out.residue = "no exhaustive filtration (kernel tower stalls)";
    }
    out.filtrationLength = static_cast<int>(span.size());
    return out;
}

NMorphismCheck checkNMorphism(const Bocs& b, const Matrix& cf, const NObject& source,
                              const NObject& targetObj) {
    NMorphismCheck out;
    const LModule& y = source.y;
    const LModule& z = targetObj.y;
    PairBasis aZ = algebraPairBasis(b, z);
    PairBasis vbarZ = tensorPairBasis(b, 1, z);
    PairBasis vbarY = tensorPairBasis(b, 1, y);
    if (cf.rows() != aZ.size() || cf.cols() != y.total())
        throw BocsError("checkNMorphism: c_f has wrong shape");

    Matrix residue(vbarZ.size(), y.total());
    for (int col = 0; col < y.total(); ++col) {
        // -(m_l (x) 1)(1 (x) c_Z) c_f
        for (int row = 0; row < aZ.size(); ++row) {
            const Rational& c1 = cf.at(row, col);
            if (c1.isZero()) continue;
            auto [p, z1] = aZ.pair(row);
            for (int row2 = 0; row2 < vbarZ.size(); ++row2) {
                const Rational& c2 = targetObj.c.at(row2, z1);
                if (c2.isZero()) continue;
                auto [x2, z2] = vbarZ.pair(row2);
                LinComb img = b.ops().leftMulBasis(p, x2, 1);
                for (const auto& [xi, cc] : img) {
                    int t = vbarZ.indexOf(xi, z2);
                    if (t < 0) throw BocsError("internal: (daggerdagger) left basis");
                    residue.at(t, col) -= cc * c1 * c2;
                }
            }
            // (d0 (x) 1) c_f
            for (const auto& [xi, cc] : b.dAlgebraBasis(p)) {
                int t = vbarZ.indexOf(xi, z1);
                if (t < 0) throw BocsError("internal: (daggerdagger) left basis");
                residue.at(t, col) += cc * c1;
            }
        }
        // (m_r (x) 1)(1 (x) c_f) c_Y
        for (int row = 0; row < vbarY.size(); ++row) {
            const Rational& c1 = source.c.at(row, col);
            if (c1.isZero()) continue;
            auto [x1, y1] = vbarY.pair(row);
            for (int row2 = 0; row2 < aZ.size(); ++row2) {
                const Rational& c2 = cf.at(row2, y1);
                if (c2.isZero()) continue;
                auto [p2, z2] = aZ.pair(row2);
                LinComb img = b.ops().rightMulBasis(x1, p2, 1);
                for (const auto& [xi, cc] : img) {
                    int t = vbarZ.indexOf(xi, z2);
                    if (t < 0) throw BocsError("internal: (daggerdagger) left basis");
                    residue.at(t, col) += cc * c1 * c2;
                }
            }
        }
    }
    if (!residue.isZero()) {
        out.ok = false;
        out.residue = "(daggerdagger) violated";
    }
    return out;
}

Matrix nIdentity(const Bocs& b, const LModule& y) {
    PairBasis aY = algebraPairBasis(b, y);
    Matrix cf(aY.size(), y.total());
    for (int yf = 0; yf < y.total(); ++yf) {
        int v = y.vertexOfFlat(yf);
        int e = b.algebra().idempotent(v);
        int p = aY.indexOf(e, yf);
        if (p < 0) throw BocsError("internal: nIdentity");
        cf.at(p, yf) = Rational(1);
    }
    return cf;
}

// ---- category R ----

std::vector<Matrix> psiMap(const Bocs& b, const Matrix& c, const LModule& y, const LModule& z,
                           bool uIsVbar) {
    PairBasis pairs = uIsVbar ? tensorPairBasis(b, 1, z) : algebraPairBasis(b, z);
    int count = uIsVbar ? b.vbar().size() : b.algebra().dim();
    if (c.rows() != pairs.size() || c.cols() != y.total())
        throw BocsError("psiMap: c has wrong shape");
    std::vector<Matrix> s;
    for (int x = 0; x < count; ++x) {
        Matrix m(z.total(), y.total());
        for (int zf = 0; zf < z.total(); ++zf) {
            int p = pairs.indexOf(x, zf);
            if (p < 0) continue;
            for (int yf = 0; yf < y.total(); ++yf) m.at(zf, yf) = c.at(p, yf);
        }
        s.push_back(std::move(m));
    }
    return s;
}

Matrix phiMap(const Bocs& b, const std::vector<Matrix>& s, const LModule& y, const LModule& z,
              bool uIsVbar) {
    PairBasis pairs = uIsVbar ? tensorPairBasis(b, 1, z) : algebraPairBasis(b, z);
    Matrix c(pairs.size(), y.total());
    for (int p = 0; p < pairs.size(); ++p) {
        auto [x, zf] = pairs.pair(p);
        for (int yf = 0; yf < y.total(); ++yf) c.at(p, yf) = s[x].at(zf, yf);
    }
    return c;
}

RCheck checkRObject(const RObject& obj) {
    RCheck out;
    const Bocs& b = *obj.bocs;
    const TensorPowerBasis& t2 = b.tensorSquare();
    Matrix d1m = b.partial1Matrix();
    for (int z = 0; z < t2.size(); ++z) {
        Matrix residue(obj.y.total(), obj.y.total());
        // s_Y D(d1): sum over vbar items x of [d1(x)]_z s[x]
        for (int x = 0; x < b.vbar().size(); ++x) {
            const Rational& c = d1m.at(z, x);
            if (!c.isZero()) residue = residue + obj.s[x] * c;
        }
        // m(s (x) s) p D(mV): over composable L-pairs (x1 outer, x2 inner)
        for (int x1 = 0; x1 < b.vbar().size(); ++x1)
            for (int x2 = 0; x2 < b.vbar().size(); ++x2) {
                if (b.vbar().src(x1) != b.vbar().dst(x2)) continue;
                LinComb prod = b.ops().tensorItems(x1, 1, x2, 1);
                auto it = prod.find(z);
                if (it == prod.end()) continue;
                residue = residue + (obj.s[x2] * obj.s[x1]) * it->second;
            }
        if (!residue.isZero()) {
            out.ok = false;
            out.residue = "(dagger*) fails at " + t2.displayItem(z);
            return out;
        }
    }
    return out;
}

RCheck checkRMorphism(const Bocs& b, const std::vector<Matrix>& sf, const RObject& source,
                      const RObject& target) {
    RCheck out;
    for (int x = 0; x < b.vbar().size(); ++x) {
        Matrix residue(target.y.total(), source.y.total());
        // + m((s_f (x) s_Y) p D m_r): pairs (y vbar, a path) with m_r(y (x) a) = x;
        // the sum runs over the whole algebra basis, idempotents included
        for (int yv = 0; yv < b.vbar().size(); ++yv)
            for (int a = 0; a < b.algebra().dim(); ++a) {
                LinComb img = b.ops().rightMulBasis(yv, a, 1);
                auto it = img.find(x);
                if (it == img.end()) continue;
                residue = residue + (sf[a] * source.s[yv]) * it->second;
            }
        // - m((s_Z (x) s_f) p D m_l): pairs (a path, y vbar) with m_l(a (x) y) = x
        for (int a = 0; a < b.algebra().dim(); ++a) {
            for (int yv = 0; yv < b.vbar().size(); ++yv) {
                LinComb img = b.ops().leftMulBasis(a, yv, 1);
                auto it = img.find(x);
                if (it == img.end()) continue;
                residue = residue - (target.s[yv] * sf[a]) * it->second;
            }
        }
        // + s_f D d0
        for (int a = 0; a < b.algebra().dim(); ++a) {
            LinComb da = b.dAlgebraBasis(a);
            auto it = da.find(x);
            if (it == da.end()) continue;
            residue = residue + sf[a] * it->second;
        }
        if (!residue.isZero()) {
            out.ok = false;
            out.residue = "(daggerdagger*) fails at " + b.vbar().displayItem(x);
            return out;
        }
    }
    return out;
}

}  // namespace bocskit

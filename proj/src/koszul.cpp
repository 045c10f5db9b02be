#include "bocskit/koszul.hpp"

#include <algorithm>
#include <sstream>

#include "bocskit/rep.hpp"

namespace bocskit {

namespace {

PathNames basisPathNames(const Bocs& b, int basisIdx) {
    const Path& p = b.algebra().basisPath(basisIdx);
    PathNames out;
    for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it)
        out.push_back(b.quiver().arrow(*it).name);
    return out;
}

VbarTerm vbarItemToTerm(const Bocs& b, int item, const Rational& coeff) {
    const auto& it = b.vbar().item(item);
    VbarTerm t;
    t.coeff = coeff;
    t.left = basisPathNames(b, it.p);
    t.gen = b.quiver().arrow(it.dashed[0]).name;
    t.right = basisPathNames(b, it.q);
    return t;
}

}  // namespace

VbarExpr vbarElemToExpr(const Bocs& b, const LinComb& elem) {
    VbarExpr out;
    for (const auto& [i, c] : elem) out.push_back(vbarItemToTerm(b, i, c));
    return out;
}

TensorExpr tensorElemToExpr(const Bocs& b, const LinComb& elem) {
    TensorExpr out;
    const TensorPowerBasis& t2 = b.tensorSquare();
    for (const auto& [z, c] : elem) {
        const auto& zi = t2.item(z);
        TensorTerm t;
        t.coeff = c;
        t.x.coeff = Rational(1);
        t.x.left = basisPathNames(b, zi.p);
        t.x.gen = b.quiver().arrow(zi.dashed[0]).name;
        t.x.right = basisPathNames(b, zi.mids[0]);
        t.y.coeff = Rational(1);
        t.y.left = {};
        t.y.gen = b.quiver().arrow(zi.dashed[1]).name;
        t.y.right = basisPathNames(b, zi.q);
        out.push_back(std::move(t));
    }
    return out;
}

AlgExpr algElemToExpr(const Bocs& b, const LinComb& elem) {
    AlgExpr out;
    for (const auto& [i, c] : elem) out.push_back(AlgTerm{c, basisPathNames(b, i)});
    return out;
}

DiffBiquiver canonicalizeDifferentials(const Bocs& b) {
    DiffBiquiver out = b.biquiver();
    out.d0.clear();
    out.d1.clear();
    for (int ai : b.quiver().solidIndices()) {
        const LinComb& v = b.d0Arrow(ai);
        if (!v.empty()) out.d0[b.quiver().arrow(ai).name] = vbarElemToExpr(b, v);
    }
    for (int ai : b.quiver().dashedIndices()) {
        const LinComb& v = b.d1Arrow(ai);
        if (!v.empty()) out.d1[b.quiver().arrow(ai).name] = tensorElemToExpr(b, v);
    }
    return out;
}

void DualPresentation::refreshNames() {
    degree0Names.clear();
    degree1Names.clear();
    for (int i : biquiver.quiver.solidIndices()) degree0Names.push_back(biquiver.quiver.arrow(i).name);
    for (int i : biquiver.quiver.dashedIndices()) degree1Names.push_back(biquiver.quiver.arrow(i).name);
}

std::vector<std::vector<int>> DualPresentation::solidCounts() const {
    int n = biquiver.quiver.vertexCount();
    std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
    for (int i : biquiver.quiver.solidIndices())
        m[biquiver.quiver.arrow(i).src][biquiver.quiver.arrow(i).dst]++;
    return m;
}

std::vector<std::vector<int>> DualPresentation::dashedCounts() const {
    int n = biquiver.quiver.vertexCount();
    std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
    for (int i : biquiver.quiver.dashedIndices())
        m[biquiver.quiver.arrow(i).src][biquiver.quiver.arrow(i).dst]++;
    return m;
}

namespace {

// generator-normalisation weights: eta on radical paths, eps on vbar items;
// they rescale the dual generators so the reference example prints with
// positive coefficients while keeping d^2 = 0
Rational etaWeight(const Bocs& b, int radBasis) {
    int len = b.algebra().basisPath(radBasis).length();
    return Rational((len - 1) % 2 == 0 ? 1 : -1);
}

Rational epsWeight(const Bocs& b, int vbarItem) {
    const auto& it = b.vbar().item(vbarItem);
    int lp = b.algebra().basisPath(it.p).length();
    int lq = b.algebra().basisPath(it.q).length();
    int srcV = b.quiver().arrow(it.dashed[0]).src;
    int parity = lp + (lq >= 1 ? lq - 1 : 0) + srcV;
    return Rational(parity % 2 == 0 ? 1 : -1);
}

std::string mangled(const std::string& prefix, const std::vector<std::string>& components) {
    std::string s = prefix;
    for (const auto& c : components) s += "_" + c;
    return s;
}

}  // namespace

DualPresentation koszulDual(const Bocs& b) {
    const Quiver& q = b.quiver();
    const PathAlgebra& alg = b.algebra();
    const TensorPowerBasis& vb = b.vbar();
    const TensorPowerBasis& t2 = b.tensorSquare();

    // name the dual generators
    std::vector<std::string> solidName(vb.size());
    std::map<std::string, int> used;
    auto unique = [&](std::string s) {
        int& k = used[s];
        ++k;
        return k == 1 ? s : s + "_" + std::to_string(k);
    };
    for (int x = 0; x < vb.size(); ++x) {
        const auto& it = vb.item(x);
        std::vector<std::string> comps = basisPathNames(b, it.p);
        comps.push_back(q.arrow(it.dashed[0]).name);
        for (const auto& nm : basisPathNames(b, it.q)) comps.push_back(nm);
        solidName[x] = unique(mangled("h", comps));
    }
    std::vector<int> rad = alg.radicalBasis();
    std::map<int, std::string> dashedName;
    for (int p : rad) dashedName[p] = unique(mangled("h", basisPathNames(b, p)));

    DiffBiquiver dual;
    std::vector<Arrow> arrows;
    for (int x = 0; x < vb.size(); ++x)
        arrows.push_back(Arrow{solidName[x], vb.src(x), vb.dst(x), 0});
    for (int p : rad)
        arrows.push_back(
            Arrow{dashedName[p], alg.basisPath(p).src, alg.basisPath(p).dst, 1});
    dual.quiver = Quiver(q.vertexCount(), std::move(arrows));

    // relations: one per tensor-square dual
    for (int z = 0; z < t2.size(); ++z) {
        AlgExpr rel;
        for (int x = 0; x < vb.size(); ++x) {
            LinComb dx = b.dTensorItem(1, x);
            auto it = dx.find(z);
            if (it == dx.end()) continue;
            rel.push_back(AlgTerm{it->second * epsWeight(b, x), {solidName[x]}});
        }
        for (int x = 0; x < vb.size(); ++x)
            for (int y = 0; y < vb.size(); ++y) {
                if (vb.src(x) != vb.dst(y)) continue;
                LinComb prod = b.ops().tensorItems(x, 1, y, 1);
                auto it = prod.find(z);
                if (it == prod.end()) continue;
                rel.push_back(AlgTerm{it->second * epsWeight(b, x) * epsWeight(b, y),
                                      {solidName[x], solidName[y]}});
            }
        if (!rel.empty()) {
            // scale so the leading coefficient is +1
            Rational lead = rel.front().coeff;
            for (AlgTerm& t : rel) t.coeff = t.coeff / lead;
        }
        dual.relations.push_back(std::move(rel));
    }

    // d0 on degree-0 duals
    for (int x = 0; x < vb.size(); ++x) {
        VbarExpr expr;
        Rational ex = epsWeight(b, x);
        for (int p : rad) {
            LinComb dp = b.dAlgebraBasis(p);
            auto it = dp.find(x);
            if (it == dp.end()) continue;
            VbarTerm t;
            t.coeff = it->second * ex * etaWeight(b, p);
            t.gen = dashedName[p];
            expr.push_back(std::move(t));
        }
        for (int a : rad)
            for (int y = 0; y < vb.size(); ++y) {
                // m_l(a (x) y) = a.y : dual word "hat(a) then hat(y)", sign -1
                LinComb img = b.ops().leftMulBasis(a, y, 1);
                auto it = img.find(x);
                if (it == img.end()) continue;
                VbarTerm t;
                t.coeff = it->second * Rational(-1) * ex * etaWeight(b, a) * epsWeight(b, y);
                t.gen = dashedName[a];
                t.right = {solidName[y]};
                expr.push_back(std::move(t));
            }
        for (int y = 0; y < vb.size(); ++y)
            for (int a : rad) {
                // m_r(y (x) a) = y.a : dual word "hat(y) then hat(a)", sign +1
                LinComb img = b.ops().rightMulBasis(y, a, 1);
                auto it = img.find(x);
                if (it == img.end()) continue;
                VbarTerm t;
                t.coeff = it->second * ex * epsWeight(b, y) * etaWeight(b, a);
                t.gen = dashedName[a];
                t.left = {solidName[y]};
                expr.push_back(std::move(t));
            }
        if (!expr.empty()) dual.d0[solidName[x]] = std::move(expr);
    }

    // d1 on dashed duals: dual of the radical multiplication, sign -1
    for (int p : rad) {
        TensorExpr expr;
        Rational ep = etaWeight(b, p);
        for (int qq : rad)
            for (int r : rad) {
                const LinComb& prod = alg.mulBasis(qq, r);
                auto it = prod.find(p);
                if (it == prod.end()) continue;
                TensorTerm t;
                t.coeff = it->second * Rational(-1) * ep * etaWeight(b, qq) * etaWeight(b, r);
                t.x.coeff = Rational(1);
                t.x.gen = dashedName[qq];
                t.y.coeff = Rational(1);
                t.y.gen = dashedName[r];
                expr.push_back(std::move(t));
            }
        if (!expr.empty()) dual.d1[dashedName[p]] = std::move(expr);
    }

    checkStructure(dual);
    DualPresentation out;
    out.biquiver = std::move(dual);
    out.ringel = false;
    out.relationCountAtBirth = t2.size();
    out.refreshNames();

    // hard postcondition: the emitted presentation is a valid differential
    // biquiver (d^2 = 0 and relations annihilated)
    {
        Bocs check(out.biquiver);
        ValidationReport rep = check.validateDifferential();
        if (!rep.pass)
            throw BocsError("koszul dual postcondition failed (sign bug):\n" + rep.toString());
    }
    return out;
}

// The kernel-dual construction above keeps the vertex indexing of the input;
// the weights of the dual's right algebra carry the opposite order, so the
// Ringel dual presentation is the opposite of the Koszul dual (one mirror, not
// two: the second reversal is already inside the duality of the bar pairing).
DualPresentation ringelDual(const Bocs& b) {
    DualPresentation dual = koszulDual(b);
    DualPresentation out;
    out.biquiver = opposite(dual.biquiver);
    out.ringel = true;
    out.relationCountAtBirth = dual.relationCountAtBirth;
    out.refreshNames();
    {
        Bocs check(out.biquiver);
        ValidationReport rep = check.validateDifferential();
        if (!rep.pass)
            throw BocsError("ringel dual postcondition failed:\n" + rep.toString());
    }
    return out;
}

std::vector<SuperfluousPair> findSuperfluous(const DiffBiquiver& dbq) {
    DiffBiquiver copy = dbq;
    Bocs b(std::move(copy));
    std::vector<SuperfluousPair> out;
    for (int ai : b.quiver().solidIndices()) {
        const LinComb& d0 = b.d0Arrow(ai);
        if (d0.empty()) continue;
        for (const auto& [item, c] : d0) {
            const auto& it = b.vbar().item(item);
            if (!b.algebra().basisPath(it.p).trivial() || !b.algebra().basisPath(it.q).trivial())
                continue;  // not a bare generator
            int gen = it.dashed[0];
            // the generator must not occur in any other term
            bool occursElsewhere = false;
            for (const auto& [item2, c2] : d0) {
                if (item2 == item) continue;
                if (b.vbar().item(item2).dashed[0] == gen) {
                    occursElsewhere = true;
                    break;
                }
            }
            if (occursElsewhere) continue;
            out.push_back(SuperfluousPair{b.quiver().arrow(ai).name,
                                          b.quiver().arrow(gen).name, c});
        }
    }
    return out;
}

bool isRegular(const DiffBiquiver& dbq) { return findSuperfluous(dbq).empty(); }

namespace {

// term rewriting under solid-letter substitution; letters absent from the map
// stay themselves, letters mapped to an empty expression kill the word
using SolidSubst = std::map<std::string, AlgExpr>;

AlgExpr rewritePath(const PathNames& path, const SolidSubst& subst) {
    AlgExpr acc;
    acc.push_back(AlgTerm{Rational(1), {}});
    for (const std::string& letter : path) {
        AlgExpr next;
        auto it = subst.find(letter);
        if (it == subst.end()) {
            for (AlgTerm t : acc) {
                t.path.push_back(letter);
                next.push_back(std::move(t));
            }
        } else {
            for (const AlgTerm& t : acc)
                for (const AlgTerm& s : it->second) {
                    AlgTerm u;
                    u.coeff = t.coeff * s.coeff;
                    u.path = t.path;
                    u.path.insert(u.path.end(), s.path.begin(), s.path.end());
                    next.push_back(std::move(u));
                }
        }
        acc = std::move(next);
    }
    return acc;
}

AlgExpr rewriteAlgExpr(const AlgExpr& expr, const SolidSubst& subst) {
    AlgExpr out;
    for (const AlgTerm& t : expr)
        for (AlgTerm u : rewritePath(t.path, subst)) {
            u.coeff *= t.coeff;
            if (!u.coeff.isZero()) out.push_back(std::move(u));
        }
    return out;
}

// dashed-letter substitution: v -> a Vbar expression
using DashedSubst = std::map<std::string, VbarExpr>;

VbarExpr rewriteVbarExpr(const VbarExpr& expr, const SolidSubst& solidSubst,
                         const DashedSubst& dashedSubst) {
    VbarExpr out;
    for (const VbarTerm& t : expr) {
        AlgExpr lefts = rewritePath(t.left, solidSubst);
        AlgExpr rights = rewritePath(t.right, solidSubst);
        std::vector<VbarTerm> middles;
        auto it = dashedSubst.find(t.gen);
        if (it == dashedSubst.end()) {
            VbarTerm m;
            m.coeff = Rational(1);
            m.gen = t.gen;
            middles.push_back(std::move(m));
        } else {
            for (const VbarTerm& s : it->second) middles.push_back(s);
        }
        for (const AlgTerm& l : lefts)
            for (const VbarTerm& m : middles)
                for (const AlgTerm& r : rights) {
                    VbarTerm u;
                    u.coeff = t.coeff * l.coeff * m.coeff * r.coeff;
                    if (u.coeff.isZero()) continue;
                    u.left = l.path;
                    u.left.insert(u.left.end(), m.left.begin(), m.left.end());
                    u.gen = m.gen;
                    u.right = m.right;
                    u.right.insert(u.right.end(), r.path.begin(), r.path.end());
                    out.push_back(std::move(u));
                }
    }
    return out;
}

TensorExpr rewriteTensorExpr(const TensorExpr& expr, const SolidSubst& solidSubst,
                             const DashedSubst& dashedSubst) {
    TensorExpr out;
    for (const TensorTerm& t : expr) {
        VbarExpr xs = rewriteVbarExpr({t.x}, solidSubst, dashedSubst);
        VbarExpr ys = rewriteVbarExpr({t.y}, solidSubst, dashedSubst);
        for (const VbarTerm& x : xs)
            for (const VbarTerm& y : ys) {
                TensorTerm u;
                u.coeff = t.coeff * x.coeff * y.coeff;
                if (u.coeff.isZero()) continue;
                u.x = x;
                u.x.coeff = Rational(1);
                u.y = y;
                u.y.coeff = Rational(1);
                out.push_back(std::move(u));
            }
    }
    return out;
}

DiffBiquiver rebuildWithout(const DiffBiquiver& dbq, const std::vector<std::string>& removed,
                            const SolidSubst& solidSubst, const DashedSubst& dashedSubst) {
    std::vector<Arrow> arrows;
    for (const Arrow& a : dbq.quiver.arrows()) {
        if (std::find(removed.begin(), removed.end(), a.name) != removed.end()) continue;
        arrows.push_back(a);
    }
    DiffBiquiver out;
    out.quiver = Quiver(dbq.quiver.vertexCount(), std::move(arrows));
    for (const AlgExpr& rel : dbq.relations) {
        AlgExpr r = combineAlgExpr(rewriteAlgExpr(rel, solidSubst));
        if (!r.empty()) out.relations.push_back(std::move(r));
    }
    for (const auto& [name, expr] : dbq.d0) {
        if (std::find(removed.begin(), removed.end(), name) != removed.end()) continue;
        VbarExpr e = combineVbarExpr(rewriteVbarExpr(expr, solidSubst, dashedSubst));
        if (!e.empty()) out.d0[name] = std::move(e);
    }
    for (const auto& [name, expr] : dbq.d1) {
        if (std::find(removed.begin(), removed.end(), name) != removed.end()) continue;
        TensorExpr e = combineTensorExpr(rewriteTensorExpr(expr, solidSubst, dashedSubst));
        if (!e.empty()) out.d1[name] = std::move(e);
    }
    checkStructure(out);
    // re-canonicalise over the new bases so terms stay reduced
    Bocs b(std::move(out));
    return canonicalizeDifferentials(b);
}

// step 1: eliminate degree-0 generators that occur linearly in a relation
bool eliminateLinearRelation(DiffBiquiver& dbq, std::vector<std::string>* log) {
    for (size_t ri = 0; ri < dbq.relations.size(); ++ri) {
        const AlgExpr& rel = dbq.relations[ri];
        // candidate letters: length-one terms not occurring in any other term
        std::vector<int> candidates;
        for (int ti = 0; ti < static_cast<int>(rel.size()); ++ti) {
            if (rel[ti].path.size() != 1) continue;
            const std::string& letter = rel[ti].path[0];
            bool elsewhere = false;
            for (int tj = 0; tj < static_cast<int>(rel.size()); ++tj) {
                if (tj == ti) continue;
                for (const auto& nm : rel[tj].path)
                    if (nm == letter) elsewhere = true;
            }
            if (!elsewhere) candidates.push_back(ti);
        }
        if (candidates.empty()) continue;
        // smallest (src, dst, name) first
        std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
            const Arrow& ax = dbq.quiver.arrow(dbq.quiver.arrowIndex(rel[x].path[0]));
            const Arrow& ay = dbq.quiver.arrow(dbq.quiver.arrowIndex(rel[y].path[0]));
            return std::tuple(ax.src, ax.dst, rel[x].path[0]) <
                   std::tuple(ay.src, ay.dst, rel[y].path[0]);
        });
        int ti = candidates.front();
        const std::string letter = rel[ti].path[0];
        Rational lambda = rel[ti].coeff;
        AlgExpr image;
        for (int tj = 0; tj < static_cast<int>(rel.size()); ++tj) {
            if (tj == ti) continue;
            AlgTerm t = rel[tj];
            t.coeff = t.coeff / lambda * Rational(-1);
            image.push_back(std::move(t));
        }
        SolidSubst subst;
        subst[letter] = image;
        if (log)
            log->push_back("eliminate " + letter + " via relation (" + displayAlgExpr(rel) + ")");
        std::vector<AlgExpr> keptRelations;
        for (size_t rj = 0; rj < dbq.relations.size(); ++rj)
            if (rj != ri) keptRelations.push_back(dbq.relations[rj]);
        DiffBiquiver tmp = dbq;
        tmp.relations = std::move(keptRelations);
        dbq = rebuildWithout(tmp, {letter}, subst, {});
        return true;
    }
    return false;
}

}  // namespace

DiffBiquiver regularizeOnce(const DiffBiquiver& dbq, const SuperfluousPair& pair,
                            std::vector<std::string>* log) {
    // substitution for the dashed generator: -(1/lambda)(d(a) - lambda v)
    DiffBiquiver canon;
    {
        DiffBiquiver copy = dbq;
        Bocs b(std::move(copy));
        canon = canonicalizeDifferentials(b);
    }
    auto it = canon.d0.find(pair.solid);
    if (it == canon.d0.end()) throw BocsError("regularizeOnce: solid arrow has no differential");
    VbarExpr image;
    for (const VbarTerm& t : it->second) {
        if (t.gen == pair.dashed && t.left.empty() && t.right.empty()) continue;
        VbarTerm u = t;
        u.coeff = t.coeff / pair.coeff * Rational(-1);
        image.push_back(std::move(u));
    }
    SolidSubst solidSubst;
    solidSubst[pair.solid] = {};  // removed solid acts as zero
    DashedSubst dashedSubst;
    dashedSubst[pair.dashed] = image;
    if (log) log->push_back("regularise " + pair.solid + " with " + pair.dashed);
    return rebuildWithout(canon, {pair.solid, pair.dashed}, solidSubst, dashedSubst);
}

DiffBiquiver regularize(const DiffBiquiver& input, std::vector<std::string>* log,
                        RegularizationOrder order) {
    DiffBiquiver dbq;
    {
        DiffBiquiver copy = input;
        Bocs b(std::move(copy));
        dbq = canonicalizeDifferentials(b);
    }
    // step 1: relation-driven eliminations
    while (eliminateLinearRelation(dbq, log)) {
    }
    // step 2: superfluous pairs
    while (true) {
        std::vector<SuperfluousPair> pairs = findSuperfluous(dbq);
        if (pairs.empty()) break;
        auto key = [&](const SuperfluousPair& p) {
            const Arrow& d = dbq.quiver.arrow(dbq.quiver.arrowIndex(p.dashed));
            const Arrow& s = dbq.quiver.arrow(dbq.quiver.arrowIndex(p.solid));
            return std::tuple(d.src, d.dst, p.dashed, s.src, s.dst, p.solid);
        };
        std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            auto ka = key(a), kb = key(b);
            // minimal dashed, then maximal solid
            if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
            if (std::get<1>(ka) != std::get<1>(kb)) return std::get<1>(ka) < std::get<1>(kb);
            if (std::get<2>(ka) != std::get<2>(kb)) return std::get<2>(ka) < std::get<2>(kb);
            if (std::get<3>(ka) != std::get<3>(kb)) return std::get<3>(ka) > std::get<3>(kb);
            if (std::get<4>(ka) != std::get<4>(kb)) return std::get<4>(ka) > std::get<4>(kb);
            return std::get<5>(ka) > std::get<5>(kb);
        });
        const SuperfluousPair& chosen =
            order == RegularizationOrder::Canonical ? pairs.front() : pairs.back();
        dbq = regularizeOnce(dbq, chosen, log);
        // relation eliminations can become available again after substitution
        while (eliminateLinearRelation(dbq, log)) {
        }
    }
    // post-check
    {
        DiffBiquiver copy = dbq;
        Bocs b(std::move(copy));
        ValidationReport rep = b.validateDifferential();
        if (!rep.pass)
            throw BocsError("regularisation broke the differential:\n" + rep.toString());
    }
    return dbq;
}

DualPresentation regularize(const DualPresentation& p, RegularizationOrder order) {
    DualPresentation out;
    out.ringel = p.ringel;
    out.relationCountAtBirth = p.relationCountAtBirth;
    out.log = p.log;
    out.biquiver = regularize(p.biquiver, &out.log, order);
    out.refreshNames();
    return out;
}

bool generatorCountCheck(const Bocs& b) {
    int n = b.vertexCount();
    for (int i = 1; i <= n; ++i)
        for (int l = i + 1; l <= n; ++l) {
            int generators = 0;
            for (int di : b.quiver().dashedIndices()) {
                const Arrow& a = b.quiver().arrow(di);
                if (a.src == i && a.dst == l) ++generators;
            }
            BocsModule li = BocsModule::simple(b, i);
            BocsModule ll = BocsModule::simple(b, l);
            if (generators != morphismSpaceDim(li, ll)) return false;
        }
    return true;
}

DimReport homExtMatrices(const Bocs& b) {
    DimReport rep;
    int n = b.vertexCount();
    rep.n = n;
    rep.solidCount.assign(n + 1, std::vector<int>(n + 1, 0));
    rep.dashedCount.assign(n + 1, std::vector<int>(n + 1, 0));
    rep.homDim.assign(n + 1, std::vector<int>(n + 1, 0));
    rep.extDim.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int ai : b.quiver().solidIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        rep.solidCount[a.src][a.dst]++;
    }
    for (int ai : b.quiver().dashedIndices()) {
        const Arrow& a = b.quiver().arrow(ai);
        rep.dashedCount[a.src][a.dst]++;
    }
    std::vector<BocsModule> simples;
    simples.push_back(BocsModule());  // placeholder index 0
    for (int v = 1; v <= n; ++v) simples.push_back(BocsModule::simple(b, v));
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l)
            rep.homDim[i][l] = i == l ? 1 : morphismSpaceDim(simples[i], simples[l]);
    // Ext^1 between standards equals Ext^1_A between simples, which for a path
    // algebra with admissible relations is the arrow count.
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l) rep.extDim[i][l] = i == l ? 0 : rep.solidCount[i][l];
    rep.dimA = b.algebra().dim();
    rep.dimVbar = b.vbar().size();
    rep.rightAlgebra = rightAlgebraDim(b).total;
    rep.regular = isRegular(b.biquiver());
    return rep;
}

std::string DimReport::toString() const {
    std::ostringstream os;
    auto emit = [&](const char* title, const std::vector<std::vector<int>>& m) {
        os << title << ":\n";
        for (int i = 1; i <= n; ++i) {
            os << "  ";
            for (int l = 1; l <= n; ++l) os << m[i][l] << (l == n ? "" : " ");
            os << "\n";
        }
    };
    os << "vertices: " << n << "\n";
    os << "dim A = " << dimA << ", dim Vbar = " << dimVbar
       << ", dim right algebra = " << rightAlgebra << ", regular = " << (regular ? "yes" : "no")
       << "\n";
    emit("solid arrow counts", solidCount);
    emit("dashed generator counts", dashedCount);
    emit("dim Hom(Delta_i, Delta_l)", homDim);
    emit("dim Ext^1(Delta_i, Delta_l)", extDim);
    return os.str();
}

RightAlgebraDim rightAlgebraDim(const Bocs& b) {
    RightAlgebraDim out;
    out.dimA = b.algebra().dim();
    out.total = out.dimA;
    // dim e_i A = number of basis paths with target i
    std::vector<long long> dimEiA(b.vertexCount() + 1, 0);
    for (int p = 0; p < b.algebra().dim(); ++p) dimEiA[b.algebra().basisPath(p).dst]++;
    for (int di : b.quiver().dashedIndices()) {
        const Arrow& a = b.quiver().arrow(di);
        long long s = dimEiA[a.src] * dimEiA[a.dst];
        out.summands.push_back({a.name, s});
        out.total += s;
    }
    return out;
}

}  // namespace bocskit

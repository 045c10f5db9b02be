#include "bocskit/bimodule.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bocskit {

TensorPowerBasis::TensorPowerBasis(const Quiver& quiver, const PathAlgebra& algebra, int power)
    : quiver_(&quiver), algebra_(&algebra), power_(power) {
    if (power < 1) throw BocsError("tensor power must be >= 1");
    for (int d : quiver.dashedIndices()) dashedOrder_.push_back(d);
    std::sort(dashedOrder_.begin(), dashedOrder_.end(), [&](int a, int b) {
        return quiver.arrow(a).name < quiver.arrow(b).name;
    });

    // enumerate alternating words, outermost dashed first
    std::vector<Item> acc;
    std::function<void(Item&, int)> extend = [&](Item& partial, int depth) {
        if (depth == power_) {
            // choose q with dst(q) = src(v_last)
            int innerSrc = quiver_->arrow(partial.dashed.back()).src;
            for (int qb = 0; qb < algebra_->dim(); ++qb) {
                const Path& qp = algebra_->basisPath(qb);
                if (qp.dst != innerSrc) continue;
                Item it = partial;
                it.q = qb;
                it.src = qp.src;
                it.dst = algebra_->basisPath(it.p).dst;
                acc.push_back(std::move(it));
            }
            return;
        }
        // choose mid between v_depth (already chosen) and the next dashed v_{depth+1}
        int haveSrc = quiver_->arrow(partial.dashed.back()).src;
        for (int vnext : dashedOrder_) {
            int vDst = quiver_->arrow(vnext).dst;
            for (int mb = 0; mb < algebra_->dim(); ++mb) {
                const Path& mp = algebra_->basisPath(mb);
                if (mp.src != vDst || mp.dst != haveSrc) continue;
                Item it = partial;
                it.dashed.push_back(vnext);
                it.mids.push_back(mb);
                extend(it, depth + 1);
                it.dashed.pop_back();
                it.mids.pop_back();
            }
        }
    };
    for (int v1 : dashedOrder_) {
        int outerDst = quiver_->arrow(v1).dst;
        for (int pb = 0; pb < algebra_->dim(); ++pb) {
            const Path& pp = algebra_->basisPath(pb);
            if (pp.src != outerDst) continue;
            Item it;
            it.p = pb;
            it.dashed.push_back(v1);
            extend(it, 1);
        }
    }
    // deterministic order: dashed sequence (by name rank), then p, mids..., q
    auto rankOf = [&](int arrow) {
        return static_cast<int>(std::find(dashedOrder_.begin(), dashedOrder_.end(), arrow) -
                                dashedOrder_.begin());
    };
    auto key = [&](const Item& it) {
        std::vector<int> k;
        for (int d : it.dashed) k.push_back(rankOf(d));
        k.push_back(it.p);
        for (int m : it.mids) k.push_back(m);
        k.push_back(it.q);
        return k;
    };
    std::sort(acc.begin(), acc.end(), [&](const Item& a, const Item& b) { return key(a) < key(b); });
    items_ = std::move(acc);
    for (int i = 0; i < size(); ++i) index_[encode(items_[i])] = i;
}

std::vector<int> TensorPowerBasis::encode(const Item& it) const {
    std::vector<int> k;
    for (int d : it.dashed) k.push_back(d);
    k.push_back(-1);
    k.push_back(it.p);
    for (int m : it.mids) k.push_back(m);
    k.push_back(it.q);
    return k;
}

std::optional<int> TensorPowerBasis::indexOf(const Item& it) const {
    auto f = index_.find(encode(it));
    if (f == index_.end()) return std::nullopt;
    return f->second;
}

std::vector<int> TensorPowerBasis::slice(int dst, int src) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (items_[i].src == src && items_[i].dst == dst) out.push_back(i);
    return out;
}

std::optional<int> TensorPowerBasis::bareIndex(int dashedArrow) const {
    if (power_ != 1) return std::nullopt;
    const Arrow& a = quiver_->arrow(dashedArrow);
    Item it;
    it.dashed = {dashedArrow};
    it.p = algebra_->idempotent(a.dst);
    it.q = algebra_->idempotent(a.src);
    it.src = a.src;
    it.dst = a.dst;
    return indexOf(it);
}

std::string TensorPowerBasis::displayItem(int i) const {
    const Item& it = items_[i];
    std::ostringstream os;
    auto emitFactor = [&](int basisIdx, bool& any) {
        if (algebra_->basisPath(basisIdx).trivial()) return;
        if (any) os << "*";
        os << algebra_->basisName(basisIdx);
        any = true;
    };
    for (int k = 0; k < power_; ++k) {
        if (k) os << " @ ";
        bool any = false;
        if (k == 0) emitFactor(it.p, any);
        if (any) os << "*";
        os << quiver_->arrow(it.dashed[k]).name;
        if (k < power_ - 1) {
            if (!algebra_->basisPath(it.mids[k]).trivial())
                os << "*" << algebra_->basisName(it.mids[k]);
        } else {
            if (!algebra_->basisPath(it.q).trivial()) os << "*" << algebra_->basisName(it.q);
        }
    }
    return os.str();
}

std::string TensorPowerBasis::display(const LinComb& elem) const {
    if (elem.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : elem) {
        std::string term = displayItem(i);
        std::string cs = c.toString();
        if (first) {
            if (cs == "1")
                os << term;
            else if (cs == "-1")
                os << "-" << term;
            else
                os << cs << " " << term;
            first = false;
        } else if (c.signum() > 0) {
            os << " + " << (cs == "1" ? term : cs + " " + term);
        } else {
            std::string mag = (-c).toString();
            os << " - " << (mag == "1" ? term : mag + " " + term);
        }
    }
    return os.str();
}

BimoduleOps::BimoduleOps(const Quiver& quiver, const PathAlgebra& algebra)
    : quiver_(&quiver), algebra_(&algebra) {}

const TensorPowerBasis& BimoduleOps::powerBasis(int power) const {
    if (power < 1) throw BocsError("tensor power must be >= 1");
    std::lock_guard<std::mutex> lock(powersMutex_);
    auto it = powers_.find(power);
    if (it == powers_.end())
        it = powers_.emplace(power, TensorPowerBasis(*quiver_, *algebra_, power)).first;
    return it->second;
}

LinComb BimoduleOps::leftMulBasis(int aBasis, int item, int power) const {
    const TensorPowerBasis& basis = powerBasis(power);
    const auto& it = basis.item(item);
    LinComb product = algebra_->mulBasis(aBasis, it.p);
    LinComb out;
    for (const auto& [np, c] : product) {
        TensorPowerBasis::Item jt = it;
        jt.p = np;
        jt.dst = algebra_->basisPath(np).dst;
        auto idx = basis.indexOf(jt);
        if (!idx) throw BocsError("internal: left action left the basis");
        linAdd(out, *idx, c);
    }
    return out;
}

LinComb BimoduleOps::rightMulBasis(int item, int aBasis, int power) const {
    const TensorPowerBasis& basis = powerBasis(power);
    const auto& it = basis.item(item);
    LinComb product = algebra_->mulBasis(it.q, aBasis);
    LinComb out;
    for (const auto& [nq, c] : product) {
        TensorPowerBasis::Item jt = it;
        jt.q = nq;
        jt.src = algebra_->basisPath(nq).src;
        auto idx = basis.indexOf(jt);
        if (!idx) throw BocsError("internal: right action left the basis");
        linAdd(out, *idx, c);
    }
    return out;
}

LinComb BimoduleOps::leftMul(const LinComb& a, const LinComb& x, int power) const {
    LinComb out;
    for (const auto& [ab, ca] : a)
        for (const auto& [xi, cx] : x) linAdd(out, leftMulBasis(ab, xi, power), ca * cx);
    return out;
}

LinComb BimoduleOps::rightMul(const LinComb& x, const LinComb& a, int power) const {
    LinComb out;
    for (const auto& [xi, cx] : x)
        for (const auto& [ab, ca] : a) linAdd(out, rightMulBasis(xi, ab, power), cx * ca);
    return out;
}

LinComb BimoduleOps::tensorItems(int xItem, int aPower, int yItem, int bPower) const {
    const auto& xb = powerBasis(aPower);
    const auto& yb = powerBasis(bPower);
    const auto& xt = xb.item(xItem);
    const auto& yt = yb.item(yItem);
    const TensorPowerBasis& target = powerBasis(aPower + bPower);
    // join over the middle q_x * p_y (p_y acts first)
    LinComb mid = algebra_->mulBasis(xt.q, yt.p);
    LinComb out;
    for (const auto& [mb, c] : mid) {
        TensorPowerBasis::Item jt;
        jt.dashed = xt.dashed;
        jt.dashed.insert(jt.dashed.end(), yt.dashed.begin(), yt.dashed.end());
        jt.mids = xt.mids;
        jt.mids.push_back(mb);
        jt.mids.insert(jt.mids.end(), yt.mids.begin(), yt.mids.end());
        jt.p = xt.p;
        jt.q = yt.q;
        jt.src = yt.src;
        jt.dst = xt.dst;
        auto idx = target.indexOf(jt);
        if (!idx) throw BocsError("internal: tensor concatenation left the basis");
        linAdd(out, *idx, c);
    }
    return out;
}

LinComb BimoduleOps::tensor(const LinComb& x, int aPower, const LinComb& y, int bPower) const {
    LinComb out;
    for (const auto& [xi, cx] : x)
        for (const auto& [yi, cy] : y) linAdd(out, tensorItems(xi, aPower, yi, bPower), cx * cy);
    return out;
}

}  // namespace bocskit

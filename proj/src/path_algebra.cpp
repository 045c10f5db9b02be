#include "bocskit/path_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bocskit {

void linAdd(LinComb& target, int index, const Rational& c) {
    if (c.isZero()) return;
    auto it = target.find(index);
    if (it == target.end()) {
        target.emplace(index, c);
    } else {
        it->second += c;
        if (it->second.isZero()) target.erase(it);
    }
}

void linAdd(LinComb& target, const LinComb& other, const Rational& scale) {
    if (scale.isZero()) return;
    for (const auto& [i, c] : other) linAdd(target, i, c * scale);
}

bool linIsZero(const LinComb& c) { return c.empty(); }

std::vector<Rational> linToVector(const LinComb& c, int dim) {
    std::vector<Rational> v(dim);
    for (const auto& [i, x] : c) v[i] = x;
    return v;
}

LinComb linFromVector(const std::vector<Rational>& v) {
    LinComb c;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].isZero()) c.emplace(static_cast<int>(i), v[i]);
    return c;
}

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
    if (n_ < 1) throw BocsError("quiver: vertex count must be positive");
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
        const Arrow& a = arrows_[i];
        if (a.src < 1 || a.src > n_ || a.dst < 1 || a.dst > n_)
            throw BocsError("arrow '" + a.name + "': endpoint out of range");
        if (a.src >= a.dst)
            throw BocsError("arrow '" + a.name + "': source must precede target (directedness)");
        if (a.degree != 0 && a.degree != 1)
            throw BocsError("arrow '" + a.name + "': degree must be 0 or 1");
        if (a.name.empty()) throw BocsError("arrow with empty name");
        if (!byName_.emplace(a.name, i).second)
            throw BocsError("duplicate arrow name '" + a.name + "'");
        (a.degree == 0 ? solid_ : dashed_).push_back(i);
    }
}

int Quiver::arrowIndex(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end()) throw BocsError("unknown arrow '" + name + "'");
    return it->second;
}

PathAlgebra::PathAlgebra(const Quiver& quiver, const std::vector<LinComb>& freeRelations)
    : quiver_(&quiver), ideal_(0) {
    enumeratePaths();
    ideal_ = RowSpace(freePathCount(), /*pivotChoiceHigh=*/true);
    buildIdeal(freeRelations);
    for (int i = 0; i < freePathCount(); ++i) {
        if (!ideal_.isPivot(i)) {
            basisIndexByFree_[i] = static_cast<int>(basis_.size());
            basis_.push_back(i);
        }
    }
    idempotentBasis_.assign(quiver_->vertexCount() + 1, -1);
    for (int b = 0; b < dim(); ++b) {
        const Path& p = basisPath(b);
        if (p.trivial()) idempotentBasis_[p.src] = b;
    }
    for (int v = 1; v <= quiver_->vertexCount(); ++v)
        if (idempotentBasis_[v] < 0)
            throw BocsError("relations eliminated a trivial path; unit would be broken");
}

void PathAlgebra::enumeratePaths() {
    // trivial paths first, then grow along solid arrows
    std::vector<Path> all;
    for (int v = 1; v <= quiver_->vertexCount(); ++v) all.push_back(Path{v, v, {}});
    std::vector<Path> frontier = all;
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            for (int ai : quiver_->solidIndices()) {
                const Arrow& a = quiver_->arrow(ai);
                if (a.src != p.dst) continue;
                Path q = p;
                q.seq.push_back(ai);
                q.dst = a.dst;
                next.push_back(std::move(q));
            }
        }
        for (Path& p : next) all.push_back(p);
        frontier = std::move(next);
    }
    // order: (length, display-order arrow-name sequence)
    auto displayNames = [&](const Path& p) {
        std::vector<std::string> names;
        for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it)
            names.push_back(quiver_->arrow(*it).name);
        return names;
    };
    std::sort(all.begin(), all.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        auto na = displayNames(a), nb = displayNames(b);
        if (na != nb) return na < nb;
        return a.src < b.src;  // trivial paths by vertex
    });
    freePaths_ = std::move(all);
    for (int i = 0; i < freePathCount(); ++i) freeBySeq_[freePaths_[i].seq.empty()
                                                             ? std::vector<int>{-freePaths_[i].src}
                                                             : freePaths_[i].seq] = i;
}

std::optional<int> PathAlgebra::freePathIndex(const std::vector<int>& seq) const {
    auto it = freeBySeq_.find(seq);
    if (it == freeBySeq_.end()) return std::nullopt;
    return it->second;
}

std::string PathAlgebra::freePathName(int i) const {
    const Path& p = freePaths_[i];
    if (p.trivial()) return "e" + std::to_string(p.src);
    std::string s;
    for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it) s += quiver_->arrow(*it).name;
    return s;
}

void PathAlgebra::buildIdeal(const std::vector<LinComb>& freeRelations) {
    for (const auto& rel : freeRelations) {
        if (rel.empty()) continue;
        // precondition checks: vertex-homogeneous, nontrivial paths only
        int src = -1, dst = -1;
        for (const auto& [i, c] : rel) {
            const Path& p = freePaths_[i];
            if (p.trivial())
                throw BocsError("relation involves a trivial path; unitality would break");
            if (src < 0) {
                src = p.src;
                dst = p.dst;
            } else if (p.src != src || p.dst != dst) {
                throw BocsError("relation is not vertex-homogeneous");
            }
        }
        // two-sided ideal span: left/right multiples by all paths
        for (int lp = 0; lp < freePathCount(); ++lp) {
            const Path& left = freePaths_[lp];
            if (left.src != dst) continue;
            for (int rp = 0; rp < freePathCount(); ++rp) {
                const Path& right = freePaths_[rp];
                if (right.dst != src) continue;
                LinComb elem;
                for (const auto& [i, c] : rel) {
                    // right then rel-path then left
                    std::vector<int> seq = right.seq;
                    seq.insert(seq.end(), freePaths_[i].seq.begin(), freePaths_[i].seq.end());
                    seq.insert(seq.end(), left.seq.begin(), left.seq.end());
                    auto idx = freePathIndex(seq);
                    if (!idx) throw BocsError("internal: ideal span path missing");
                    linAdd(elem, *idx, c);
                }
                if (!elem.empty()) ideal_.insert(linToVector(elem, freePathCount()));
            }
        }
    }
}

std::optional<int> PathAlgebra::basisIndexOfFree(int freeIdx) const {
    auto it = basisIndexByFree_.find(freeIdx);
    if (it == basisIndexByFree_.end()) return std::nullopt;
    return it->second;
}

int PathAlgebra::idempotent(int vertex) const { return idempotentBasis_[vertex]; }

LinComb PathAlgebra::reduceFree(const LinComb& freeElem) const {
    std::vector<Rational> v = linToVector(freeElem, freePathCount());
    ideal_.reduce(v);
    LinComb out;
    for (int i = 0; i < freePathCount(); ++i) {
        if (v[i].isZero()) continue;
        auto b = basisIndexOfFree(i);
        if (!b) throw BocsError("internal: reduced element not in basis span");
        out[*b] = v[i];
    }
    return out;
}

LinComb PathAlgebra::mulBasis(int x, int y) const {
    auto key = std::make_pair(x, y);
    {
        std::lock_guard<std::mutex> lock(mulMutex_);
        auto it = mulCache_.find(key);
        if (it != mulCache_.end()) return it->second;
    }
    const Path& px = basisPath(x);
    const Path& py = basisPath(y);
    LinComb result;
    if (py.dst == px.src) {
        std::vector<int> seq = py.seq;
        seq.insert(seq.end(), px.seq.begin(), px.seq.end());
        auto idx = seq.empty() ? freePathIndex(std::vector<int>{-px.src}) : freePathIndex(seq);
        if (idx) {
            LinComb freeElem;
            freeElem[*idx] = Rational(1);
            result = reduceFree(freeElem);
        }
    }
    std::lock_guard<std::mutex> lock(mulMutex_);
    return mulCache_.emplace(key, std::move(result)).first->second;
}

LinComb PathAlgebra::mul(const LinComb& x, const LinComb& y) const {
    LinComb out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) linAdd(out, mulBasis(i, j), ci * cj);
    return out;
}

std::vector<int> PathAlgebra::subBasis(int dst, int src) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b) {
        const Path& p = basisPath(b);
        if (p.src == src && p.dst == dst) out.push_back(b);
    }
    return out;
}

std::vector<int> PathAlgebra::radicalBasis() const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
        if (!basisPath(b).trivial()) out.push_back(b);
    return out;
}

std::string PathAlgebra::display(const LinComb& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x) {
        std::string cs = c.toString();
        if (first) {
            if (cs == "1") {
                os << basisName(i);
            } else if (cs == "-1") {
                os << "-" << basisName(i);
            } else {
                os << cs << " " << basisName(i);
            }
            first = false;
            continue;
        }
        if (c.signum() > 0) {
            os << " + " << (cs == "1" ? basisName(i) : cs + " " + basisName(i));
        } else {
            std::string mag = (-c).toString();
            os << " - " << (mag == "1" ? basisName(i) : mag + " " + basisName(i));
        }
    }
    return os.str();
}

}  // namespace bocskit

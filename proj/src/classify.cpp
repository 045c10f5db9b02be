#include "bocskit/classify.hpp"

#include <algorithm>
#include <sstream>

#include "bocskit/rep.hpp"

namespace bocskit {

DiffBiquiver canonicalBiquiver(int n) {
    if (n < 2 || n > 4) throw BocsError("canonical biquiver is defined for 2 <= n <= 4");
    std::vector<Arrow> arrows;
    auto addPair = [&](const std::string& solid, const std::string& dashed, int i, int l) {
        arrows.push_back(Arrow{solid, i, l, 0});
        arrows.push_back(Arrow{dashed, i, l, 1});
    };
    addPair("a", "phi", 1, 2);
    if (n >= 3) {
        addPair("b", "psi", 2, 3);
        addPair("c", "chi", 1, 3);
    }
    if (n == 4) {
        // adjacent pair (3,4) keeps the irreducible letters, composite slots
        // get the remaining names
        arrows.clear();
        addPair("a", "phi", 1, 2);
        addPair("b", "psi", 2, 3);
        addPair("c", "rho", 3, 4);
        addPair("d", "chi", 1, 3);
        addPair("e", "sigma", 2, 4);
        addPair("f", "tau", 1, 4);
    }
    DiffBiquiver dbq;
    dbq.quiver = Quiver(n, std::move(arrows));
    return dbq;
}

namespace {

VbarTerm term(const Rational& c, PathNames left, std::string gen, PathNames right) {
    VbarTerm t;
    t.coeff = c;
    t.left = std::move(left);
    t.gen = std::move(gen);
    t.right = std::move(right);
    return t;
}

TensorTerm tterm(const Rational& c, VbarTerm x, VbarTerm y) {
    TensorTerm t;
    t.coeff = c;
    t.x = std::move(x);
    t.y = std::move(y);
    return t;
}

// slot key -> vbar term template, per n
VbarTerm slotTerm(int n, const std::string& key) {
    const Rational one(1);
    if (n == 3) {
        if (key == "c:psi*a") return term(one, {}, "psi", {"a"});
        if (key == "c:b*phi") return term(one, {"b"}, "phi", {});
    } else if (n == 4) {
        if (key == "d:psi*a") return term(one, {}, "psi", {"a"});
        if (key == "d:b*phi") return term(one, {"b"}, "phi", {});
        if (key == "e:rho*b") return term(one, {}, "rho", {"b"});
        if (key == "e:c*psi") return term(one, {"c"}, "psi", {});
        if (key == "f:rho*d") return term(one, {}, "rho", {"d"});
        if (key == "f:sigma*a") return term(one, {}, "sigma", {"a"});
        if (key == "f:c*chi") return term(one, {"c"}, "chi", {});
        if (key == "f:e*phi") return term(one, {"e"}, "phi", {});
        if (key == "f:rho*ba") return term(one, {}, "rho", {"b", "a"});
        if (key == "f:c*psi*a") return term(one, {"c"}, "psi", {"a"});
        if (key == "f:cb*phi") return term(one, {"c", "b"}, "phi", {});
    }
    throw BocsError("unknown slot '" + key + "'");
}

std::string slotArrow(const std::string& key) { return key.substr(0, key.find(':')); }

}  // namespace

DiffBiquiver CurvelikeCandidate::toBiquiver() const {
    DiffBiquiver dbq = canonicalBiquiver(n);
    const Rational one(1);
    // forced dashed differentials (hom composition structure)
    if (n == 3) {
        auto it = slots.find("chi:psi@phi");
        if (it != slots.end() && !it->second.isZero())
            dbq.d1["chi"] = {tterm(it->second, term(one, {}, "psi", {}), term(one, {}, "phi", {}))};
    } else if (n == 4) {
        dbq.d1["chi"] = {tterm(one, term(one, {}, "psi", {}), term(one, {}, "phi", {}))};
        dbq.d1["sigma"] = {tterm(one, term(one, {}, "rho", {}), term(one, {}, "psi", {}))};
        dbq.d1["tau"] = {tterm(one, term(one, {}, "sigma", {}), term(one, {}, "phi", {})),
                         tterm(one, term(one, {}, "rho", {}), term(one, {}, "chi", {}))};
    }
    std::map<std::string, VbarExpr> d0;
    auto addSlot = [&](const std::string& key, const Rational& c) {
        if (c.isZero()) return;
        VbarTerm t = slotTerm(n, key);
        t.coeff = c;
        d0[slotArrow(key)].push_back(std::move(t));
    };
    for (const auto& [key, c] : slots)
        if (key.find(":psi@phi") == std::string::npos) addSlot(key, c);
    for (const auto& [key, c] : m3) addSlot(key, c);
    for (auto& [arrow, expr] : d0) dbq.d0[arrow] = std::move(expr);
    checkStructure(dbq);
    return dbq;
}

std::string CurvelikeCandidate::describe() const {
    std::ostringstream os;
    os << caseLabel << " {";
    bool first = true;
    for (const auto& [key, c] : slots) {
        if (c.isZero()) continue;
        if (!first) os << ", ";
        os << key << "=" << c.toString();
        first = false;
    }
    for (const auto& [key, c] : m3) {
        if (c.isZero()) continue;
        if (!first) os << ", ";
        os << "m3:" << key << "=" << c.toString();
        first = false;
    }
    os << "}";
    return os.str();
}

std::vector<CurvelikeCandidate> enumerateCandidates(int n) {
    std::vector<CurvelikeCandidate> out;
    if (n == 2) {
        CurvelikeCandidate c;
        c.n = 2;
        c.caseLabel = "A";
        out.push_back(std::move(c));
        return out;
    }
    if (n == 3) {
        const char* caseNames = "ABCD";
        for (int group = 1; group <= 2; ++group) {
            for (int cs = 0; cs < 4; ++cs) {
                CurvelikeCandidate c;
                c.n = 3;
                c.caseLabel = std::to_string(group) + caseNames[cs];
                c.slots["chi:psi@phi"] = Rational(group == 2 ? 1 : 0);
                c.slots["c:psi*a"] = Rational(cs == 0 || cs == 2 ? 1 : 0);
                c.slots["c:b*phi"] = Rational(cs == 1 || cs == 2 ? 1 : 0);
                out.push_back(std::move(c));
            }
        }
        return out;
    }
    if (n == 4) {
        // supports: alpha = (psi a, b phi), beta = (rho b, c psi),
        // gamma = (rho d, sigma a, c chi, e phi); constraints from d^2 = 0:
        //   sigma a  present  iff  rho d and psi a
        //   (e phi and rho b) iff (rho d and b phi)
        //   c chi    present  iff  e phi and c psi
        // and the mixed-composition requirement keeps gamma nonempty on both
        // the (1,2,4) and (1,3,4) slots.
        struct Cell {
            int a1, a2, b1, b2;
            const char* base;
        };
        for (int a1 = 0; a1 <= 1; ++a1)
            for (int a2 = 0; a2 <= 1; ++a2) {
                if (!a1 && !a2) continue;
                for (int b1 = 0; b1 <= 1; ++b1)
                    for (int b2 = 0; b2 <= 1; ++b2) {
                        if (!b1 && !b2) continue;
                        for (int g = 0; g < 16; ++g) {
                            int g1 = g & 1, g2 = (g >> 1) & 1, g3 = (g >> 2) & 1,
                                g4 = (g >> 3) & 1;
                            if (g2 != (g1 && a1)) continue;
                            if ((g4 && b1) != (g1 && a2)) continue;
                            if (g3 != (g4 && b2)) continue;
                            if (!(g2 || g4)) continue;
                            if (!(g1 || g3)) continue;
                            CurvelikeCandidate c;
                            c.n = 4;
                            c.slots["d:psi*a"] = Rational(a1);
                            c.slots["d:b*phi"] = Rational(a2);
                            c.slots["e:rho*b"] = Rational(b1);
                            c.slots["e:c*psi"] = Rational(b2);
                            c.slots["f:rho*d"] = Rational(g1);
                            c.slots["f:sigma*a"] = Rational(g2);
                            c.slots["f:c*chi"] = Rational(g3 ? -1 : 0);  // sign forced by d^2
                            c.slots["f:e*phi"] = Rational(g4);
                            // case letter lookup
                            std::string label;
                            if (!a1 && a2) {
                                label = b1 ? (b2 ? "C" : "B") : "A";
                            } else if (a1 && !a2) {
                                if (!b1) {  // beta = c psi only
                                    if (!g1) label = "D";
                                    else if (!g3 && !g4) label = "E";
                                    else label = "F";
                                } else {
                                    label = b2 ? "H" : "G";
                                }
                            } else {
                                label = b1 ? (b2 ? "K" : "J") : "I";
                            }
                            c.caseLabel = label;
                            out.push_back(std::move(c));
                        }
                    }
            }
        std::sort(out.begin(), out.end(),
                  [](const CurvelikeCandidate& x, const CurvelikeCandidate& y) {
                      return x.caseLabel < y.caseLabel;
                  });
        return out;
    }
    throw BocsError("classification is implemented for 2 <= n <= 4");
}

namespace {

int dashedBetween(const Quiver& q, int i, int l) {
    for (int di : q.dashedIndices()) {
        const Arrow& a = q.arrow(di);
        if (a.src == i && a.dst == l) return di;
    }
    return -1;
}

int solidBetween(const Quiver& q, int i, int l) {
    for (int si : q.solidIndices()) {
        const Arrow& a = q.arrow(si);
        if (a.src == i && a.dst == l) return si;
    }
    return -1;
}

}  // namespace

ConstraintResult applyConstraints(const std::vector<CurvelikeCandidate>& candidates) {
    ConstraintResult out;
    for (const CurvelikeCandidate& cand : candidates) {
        DiffBiquiver dbq = cand.toBiquiver();
        ValidationReport rep = validateBiquiver(dbq);
        if (!rep.pass) {
            out.excluded.push_back({cand.describe(), "validity", rep.toString()});
            continue;
        }
        Bocs b(std::move(dbq));
        int n = b.vertexCount();

        // hom-composition filter: every composite of generator morphisms
        // between simples must be nonzero
        std::vector<BocsModule> simples;
        simples.push_back(BocsModule());
        for (int v = 1; v <= n; ++v) simples.push_back(BocsModule::simple(b, v));
        auto genMorphism = [&](int i, int l) {
            BocsMorphism f = BocsMorphism::zero(simples[i], simples[l]);
            int di = dashedBetween(b.quiver(), i, l);
            f.dashed[di] = Matrix::identity(1);
            return f;
        };
        bool homFail = false;
        std::string homWitness;
        for (int i = 1; i <= n && !homFail; ++i)
            for (int l = i + 1; l <= n && !homFail; ++l)
                for (int m = l + 1; m <= n && !homFail; ++m) {
                    BocsMorphism gf = compose(genMorphism(l, m), genMorphism(i, l));
                    if (gf.isZero()) {
                        homFail = true;
                        homWitness = "hom composite through (" + std::to_string(i) + "," +
                                     std::to_string(l) + "," + std::to_string(m) + ") vanishes";
                    }
                }
        if (homFail) {
            out.excluded.push_back({cand.describe(), "hom-composition", homWitness});
            continue;
        }

        // mixed composition filter: ext.hom or hom.ext nonzero for each triple
        bool mixedFail = false;
        std::string mixedWitness;
        for (int i = 1; i <= n && !mixedFail; ++i)
            for (int l = i + 1; l <= n && !mixedFail; ++l)
                for (int m = l + 1; m <= n && !mixedFail; ++m) {
                    int target = solidBetween(b.quiver(), i, m);
                    const LinComb& d0 = b.d0Arrow(target);
                    // item: solid(l,m) path acting on dashed(i,l)
                    TensorPowerBasis::Item mlItem;
                    mlItem.dashed = {dashedBetween(b.quiver(), i, l)};
                    {
                        int sol = solidBetween(b.quiver(), l, m);
                        auto fp = b.algebra().freePathIndex({sol});
                        auto bi = fp ? b.algebra().basisIndexOfFree(*fp) : std::nullopt;
                        if (!bi) throw BocsError("internal: solid letter not a basis element");
                        mlItem.p = *bi;
                        mlItem.q = b.algebra().idempotent(i);
                    }
                    TensorPowerBasis::Item mrItem;
                    mrItem.dashed = {dashedBetween(b.quiver(), l, m)};
                    {
                        int sol = solidBetween(b.quiver(), i, l);
                        auto fp = b.algebra().freePathIndex({sol});
                        auto bi = fp ? b.algebra().basisIndexOfFree(*fp) : std::nullopt;
                        if (!bi) throw BocsError("internal: solid letter not a basis element");
                        mrItem.p = b.algebra().idempotent(m);
                        mrItem.q = *bi;
                    }
                    auto coeffOf = [&](const TensorPowerBasis::Item& itTemplate) {
                        TensorPowerBasis::Item it = itTemplate;
                        it.src = b.algebra().basisPath(it.q).src;
                        it.dst = b.algebra().basisPath(it.p).dst;
                        auto idx = b.vbar().indexOf(it);
                        if (!idx) return Rational(0);
                        auto f = d0.find(*idx);
                        return f == d0.end() ? Rational(0) : f->second;
                    };
                    if (coeffOf(mlItem).isZero() && coeffOf(mrItem).isZero()) {
                        mixedFail = true;
                        mixedWitness = "both mixed composites through (" + std::to_string(i) +
                                       "," + std::to_string(l) + "," + std::to_string(m) +
                                       ") vanish";
                    }
                }
        if (mixedFail) {
            out.excluded.push_back({cand.describe(), "mixed-composition", mixedWitness});
            continue;
        }

        // dual-dimension filter: the regularised Ringel dual of a curve-like
        // structure has exactly one generator of each degree per pair
        DualPresentation dual = regularize(ringelDual(b));
        auto sc = dual.solidCounts();
        auto dc = dual.dashedCounts();
        bool dualFail = false;
        int totalSolid = 0, totalDashed = 0;
        for (int i = 1; i <= n; ++i)
            for (int l = i + 1; l <= n; ++l) {
                totalSolid += sc[i][l];
                totalDashed += dc[i][l];
                if (sc[i][l] != 1 || dc[i][l] != 1) dualFail = true;
            }
        if (dualFail) {
            int expected = n * (n - 1) / 2;
            std::ostringstream w;
            w << "regularised Ringel dual generator counts (" << totalSolid << " degree-0, "
              << totalDashed << " degree-1) vs target (" << expected << ", " << expected << ")";
            out.excluded.push_back({cand.describe(), "dual-dimension", w.str()});
            continue;
        }

        out.survivors.push_back(cand);
    }
    return out;
}

namespace {

// which m3 slots each case can clear, with the move used
const std::map<std::string, std::map<std::string, std::string>>& moveTable() {
    static const std::map<std::string, std::map<std::string, std::string>> table = {
        {"A", {{"f:c*psi*a", "F2(c*psi, a)"}, {"f:cb*phi", "F2(c, b*phi)"}}},
        {"B", {{"f:rho*ba", "F2(rho*b, a)"}, {"f:cb*phi", "F2(c, b*phi)"}}},
        {"C",
         {{"f:rho*ba", "F2(rho*b, a)"},
          {"f:c*psi*a", "F2(psi, a)*"},
          {"f:cb*phi", "F2(c, b*phi)"}}},
        {"G", {{"f:rho*ba", "F2(rho*b, a)"}, {"f:c*psi*a", "F2(c*psi, a)"}}},
        {"H", {{"f:rho*ba", "F2(rho*b, a)"}, {"f:c*psi*a", "F2(c*psi, a)"}}},
        {"I", {{"f:c*psi*a", "F2(c*psi, a)"}, {"f:cb*phi", "F2(c, b*phi)"}}},
        {"J",
         {{"f:rho*ba", "F2(rho*b, a)"},
          {"f:c*psi*a", "F2(c*psi, a)"},
          {"f:cb*phi", "F2(c, b)*"}}},
        {"K",
         {{"f:rho*ba", "F2(rho*b, a)"},
          {"f:c*psi*a", "F2(c*psi, a)"},
          {"f:cb*phi", "F2(c, b)*"}}},
    };
    return table;
}

}  // namespace

NormalizedCandidate normalizeClass(const CurvelikeCandidate& cand) {
    NormalizedCandidate out;
    out.canonical = cand;
    if (cand.n != 4) return out;
    auto caseIt = moveTable().find(cand.caseLabel);
    for (auto& [slot, c] : out.canonical.m3) {
        if (c.isZero()) continue;
        if (caseIt != moveTable().end()) {
            auto moveIt = caseIt->second.find(slot);
            if (moveIt != caseIt->second.end()) {
                out.movesApplied.push_back(moveIt->second + " clears " + slot);
                c = Rational(0);
            }
        }
    }
    return out;
}

ClassificationReport classify(int n) {
    ClassificationReport report;
    report.n = n;
    std::vector<CurvelikeCandidate> cands = enumerateCandidates(n);
    ConstraintResult res = applyConstraints(cands);
    report.excluded = std::move(res.excluded);

    if (n <= 3) {
        for (const CurvelikeCandidate& c : res.survivors) {
            ClassInfo info;
            info.label = c.caseLabel;
            info.representative = c;
            report.classes.push_back(std::move(info));
        }
        return report;
    }

    // n = 4: refine by the higher-product slots, then normalise and dedupe
    static const std::vector<std::string> m3Slots = {"f:rho*ba", "f:c*psi*a", "f:cb*phi"};
    std::vector<std::pair<std::string, CurvelikeCandidate>> seen;  // signature -> rep
    for (const CurvelikeCandidate& surv : res.survivors) {
        for (int bits = 0; bits < 8; ++bits) {
            CurvelikeCandidate c = surv;
            for (int k = 0; k < 3; ++k) c.m3[m3Slots[k]] = Rational((bits >> k) & 1);
            // validity is untouched by the m3 slots, but keep it honest
            if (!validateBiquiver(c.toBiquiver()).pass) continue;
            NormalizedCandidate norm = normalizeClass(c);
            std::string sig = norm.canonical.caseLabel + "|";
            for (const auto& s : m3Slots)
                sig += norm.canonical.m3.count(s) && !norm.canonical.m3.at(s).isZero() ? "1" : "0";
            bool found = false;
            for (auto& [s, rep] : seen)
                if (s == sig) found = true;
            if (!found) seen.push_back({sig, norm.canonical});
        }
    }
    // labels: case letter, with 1/2 suffix when the case splits
    std::map<std::string, std::vector<std::pair<std::string, CurvelikeCandidate>>> byCase;
    for (auto& [sig, rep] : seen) byCase[rep.caseLabel].push_back({sig, rep});
    for (auto& [caseLabel, reps] : byCase) {
        std::sort(reps.begin(), reps.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (size_t k = 0; k < reps.size(); ++k) {
            ClassInfo info;
            info.label = reps.size() == 1 ? caseLabel : caseLabel + std::to_string(k + 1);
            info.representative = reps[k].second;
            report.classes.push_back(std::move(info));
        }
    }
    for (ClassInfo& info : report.classes)
        info.beyondGeometric = info.label == "A1" || info.label == "B1" || info.label == "B2" ||
                               info.label == "G1";
    return report;
}

// ---- pairing ----

namespace {

// support descriptor over the canonical skeleton's item indices
struct Descriptor {
    std::map<std::string, std::set<int>> d0;  // solid arrow name -> item support
    bool operator==(const Descriptor& o) const { return d0 == o.d0; }
    std::string toString() const {
        std::string s;
        for (const auto& [k, v] : d0) {
            s += k + ":{";
            for (int i : v) s += std::to_string(i) + ",";
            s += "} ";
        }
        return s;
    }
};

DiffBiquiver renameToCanonical(int n, const DiffBiquiver& dual) {
    DiffBiquiver canon = canonicalBiquiver(n);
    std::map<std::string, std::string> nameMap;
    for (const Arrow& a : dual.quiver.arrows()) {
        int canonical = a.degree == 0 ? solidBetween(canon.quiver, a.src, a.dst)
                                      : dashedBetween(canon.quiver, a.src, a.dst);
        if (canonical < 0) throw BocsError("dual is not curve-like shaped");
        std::string canonicalName = canon.quiver.arrow(canonical).name;
        if (nameMap.count(a.name)) throw BocsError("duplicate arrow in dual");
        for (const auto& [k, v] : nameMap)
            if (v == canonicalName) throw BocsError("dual has parallel generators");
        nameMap[a.name] = canonicalName;
    }
    if (!dual.relations.empty()) throw BocsError("regularised dual still has relations");
    auto renamePath = [&](const PathNames& p) {
        PathNames out;
        for (const auto& nm : p) out.push_back(nameMap.at(nm));
        return out;
    };
    auto renameVbarTerm = [&](const VbarTerm& t) {
        VbarTerm u;
        u.coeff = t.coeff;
        u.left = renamePath(t.left);
        u.gen = nameMap.at(t.gen);
        u.right = renamePath(t.right);
        return u;
    };
    DiffBiquiver out = canon;
    for (const auto& [name, expr] : dual.d0) {
        VbarExpr e;
        for (const VbarTerm& t : expr) e.push_back(renameVbarTerm(t));
        out.d0[nameMap.at(name)] = std::move(e);
    }
    for (const auto& [name, expr] : dual.d1) {
        TensorExpr e;
        for (const TensorTerm& t : expr) {
            TensorTerm u;
            u.coeff = t.coeff;
            u.x = renameVbarTerm(t.x);
            u.y = renameVbarTerm(t.y);
            e.push_back(std::move(u));
        }
        out.d1[nameMap.at(name)] = std::move(e);
    }
    checkStructure(out);
    return out;
}

// drops the always-clearable tensor slots and the case-clearable m3 slots
Descriptor describeNormalized(int n, const DiffBiquiver& dbqIn) {
    DiffBiquiver dbq = dbqIn;
    Bocs b(std::move(dbq));
    Descriptor desc;
    // determine the case from the m2 slots, for move lookup
    std::map<std::string, std::set<int>> raw;
    for (int ai : b.quiver().solidIndices()) {
        const LinComb& d = b.d0Arrow(ai);
        if (d.empty()) continue;
        std::set<int>& s = raw[b.quiver().arrow(ai).name];
        for (const auto& [item, c] : d) s.insert(item);
    }
    if (n == 4) {
        // locate the m3 slot item indices
        auto itemIndex = [&](const VbarTerm& t) {
            const Quiver& q = b.quiver();
            TensorPowerBasis::Item it;
            it.dashed = {q.arrowIndex(t.gen)};
            auto pathIdx = [&](const PathNames& names) {
                if (names.empty())
                    return -1;  // resolved by caller context
                std::vector<int> seq;
                for (auto itn = names.rbegin(); itn != names.rend(); ++itn)
                    seq.push_back(q.arrowIndex(*itn));
                auto fp = b.algebra().freePathIndex(seq);
                auto bi = fp ? b.algebra().basisIndexOfFree(*fp) : std::nullopt;
                if (!bi) throw BocsError("internal: slot path not a basis element");
                return *bi;
            };
            int p = pathIdx(t.left);
            int qq = pathIdx(t.right);
            const Arrow& v = q.arrow(it.dashed[0]);
            it.p = p < 0 ? b.algebra().idempotent(v.dst) : p;
            it.q = qq < 0 ? b.algebra().idempotent(v.src) : qq;
            it.src = b.algebra().basisPath(it.q).src;
            it.dst = b.algebra().basisPath(it.p).dst;
            auto idx = b.vbar().indexOf(it);
            if (!idx) throw BocsError("internal: slot item missing");
            return *idx;
        };
        std::map<std::string, int> m3Item = {
            {"f:rho*ba", itemIndex(slotTerm(4, "f:rho*ba"))},
            {"f:c*psi*a", itemIndex(slotTerm(4, "f:c*psi*a"))},
            {"f:cb*phi", itemIndex(slotTerm(4, "f:cb*phi"))},
        };
        // case letter from the m2 supports
        auto has = [&](const char* arrow, const std::string& slotKey) {
            auto it = raw.find(arrow);
            if (it == raw.end()) return false;
            return it->second.count(itemIndex(slotTerm(4, slotKey))) > 0;
        };
        int a1 = has("d", "d:psi*a"), a2 = has("d", "d:b*phi");
        int b1 = has("e", "e:rho*b"), b2 = has("e", "e:c*psi");
        int g1 = has("f", "f:rho*d"), g3 = has("f", "f:c*chi"), g4 = has("f", "f:e*phi");
        std::string caseLabel;
        if (!a1 && a2)
            caseLabel = b1 ? (b2 ? "C" : "B") : "A";
        else if (a1 && !a2) {
            if (!b1)
                caseLabel = !g1 ? "D" : (!g3 && !g4 ? "E" : "F");
            else
                caseLabel = b2 ? "H" : "G";
        } else {
            caseLabel = b1 ? (b2 ? "K" : "J") : "I";
        }
        auto caseIt = moveTable().find(caseLabel);
        if (caseIt != moveTable().end()) {
            for (const auto& [slot, move] : caseIt->second) {
                (void)move;
                auto it = raw.find("f");
                if (it != raw.end()) it->second.erase(m3Item.at(slot));
            }
        }
    }
    desc.d0 = std::move(raw);
    return desc;
}

}  // namespace

void ringelPairing(ClassificationReport& report) {
    int n = report.n;
    std::vector<Descriptor> classDesc;
    for (const ClassInfo& info : report.classes)
        classDesc.push_back(describeNormalized(n, info.representative.toBiquiver()));
    for (size_t k = 0; k < report.classes.size(); ++k) {
        Bocs b(report.classes[k].representative.toBiquiver());
        DualPresentation dual = regularize(ringelDual(b));
        DiffBiquiver renamed = renameToCanonical(n, dual.biquiver);
        Descriptor desc = describeNormalized(n, renamed);
        int match = -1;
        for (size_t j = 0; j < classDesc.size(); ++j)
            if (classDesc[j] == desc) {
                if (match >= 0) throw BocsError("ambiguous Ringel pairing");
                match = static_cast<int>(j);
            }
        if (match < 0)
            throw BocsError("Ringel dual of class " + report.classes[k].label +
                            " does not match any class: " + desc.toString());
        report.classes[k].ringelDualLabel = report.classes[match].label;
    }
    // the pairing must be an involution
    std::map<std::string, std::string> map;
    for (const ClassInfo& info : report.classes) map[info.label] = info.ringelDualLabel;
    for (const auto& [from, to] : map)
        if (map.at(to) != from) throw BocsError("Ringel pairing is not an involution");
}

}  // namespace bocskit

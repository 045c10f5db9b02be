#include "bocskit/biquiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bocskit {

const VbarExpr* DiffBiquiver::differential0(const std::string& solid) const {
    auto it = d0.find(solid);
    return it == d0.end() ? nullptr : &it->second;
}

const TensorExpr* DiffBiquiver::differential1(const std::string& dashed) const {
    auto it = d1.find(dashed);
    return it == d1.end() ? nullptr : &it->second;
}

namespace {

// endpoints of a named path: walks composition right-to-left (innermost first)
std::pair<int, int> pathEndpoints(const Quiver& q, const PathNames& path, int degreeWanted,
                                  const std::string& context) {
    if (path.empty()) throw BocsError(context + ": empty path");
    int src = 0, dst = 0;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const Arrow& a = q.arrow(q.arrowIndex(*it));
        if (a.degree != degreeWanted)
            throw BocsError(context + ": arrow '" + *it + "' has wrong degree");
        if (src == 0) {
            src = a.src;
            dst = a.dst;
        } else {
            if (a.src != dst)
                throw BocsError(context + ": path " + displayPath(path) + " does not compose");
            dst = a.dst;
        }
    }
    return {src, dst};
}

// endpoints of a Vbar term p*v*q
std::pair<int, int> vbarTermEndpoints(const Quiver& q, const VbarTerm& t, const std::string& ctx) {
    const Arrow& v = q.arrow(q.arrowIndex(t.gen));
    if (v.degree != 1) throw BocsError(ctx + ": '" + t.gen + "' is not a dashed arrow");
    int src = v.src, dst = v.dst;
    if (!t.right.empty()) {
        auto [qs, qd] = pathEndpoints(q, t.right, 0, ctx);
        if (qd != v.src) throw BocsError(ctx + ": term does not compose at '" + t.gen + "'");
        src = qs;
    }
    if (!t.left.empty()) {
        auto [ps, pd] = pathEndpoints(q, t.left, 0, ctx);
        if (ps != v.dst) throw BocsError(ctx + ": term does not compose at '" + t.gen + "'");
        dst = pd;
    }
    return {src, dst};
}

}  // namespace

void checkStructure(const DiffBiquiver& dbq) {
    const Quiver& q = dbq.quiver;
    for (const AlgExpr& rel : dbq.relations) {
        int src = -1, dst = -1;
        for (const AlgTerm& t : rel) {
            auto [s, d] = pathEndpoints(q, t.path, 0, "relation");
            if (src < 0) {
                src = s;
                dst = d;
            } else if (s != src || d != dst) {
                throw BocsError("relation " + displayAlgExpr(rel) + " is not vertex-homogeneous");
            }
        }
    }
    for (const auto& [name, expr] : dbq.d0) {
        const Arrow& a = q.arrow(q.arrowIndex(name));
        if (a.degree != 0) throw BocsError("d(" + name + "): '" + name + "' is not solid");
        for (const VbarTerm& t : expr) {
            auto [s, d] = vbarTermEndpoints(q, t, "d(" + name + ")");
            if (s != a.src || d != a.dst)
                throw BocsError("d(" + name + "): term endpoints do not match the arrow");
        }
    }
    for (const auto& [name, expr] : dbq.d1) {
        const Arrow& v = q.arrow(q.arrowIndex(name));
        if (v.degree != 1) throw BocsError("d(" + name + "): '" + name + "' is not dashed");
        for (const TensorTerm& t : expr) {
            auto [ys, yd] = vbarTermEndpoints(q, t.y, "d(" + name + ")");
            auto [xs, xd] = vbarTermEndpoints(q, t.x, "d(" + name + ")");
            if (yd != xs) throw BocsError("d(" + name + "): tensor factors do not compose");
            if (ys != v.src || xd != v.dst)
                throw BocsError("d(" + name + "): term endpoints do not match the arrow");
        }
    }
}

namespace {

PathNames reversedPath(const PathNames& p) {
    PathNames r(p.rbegin(), p.rend());
    return r;
}

VbarTerm oppositeVbarTerm(const VbarTerm& t) {
    VbarTerm r;
    r.coeff = t.coeff;
    r.gen = t.gen;
    r.left = reversedPath(t.right);
    r.right = reversedPath(t.left);
    return r;
}

}  // namespace

DiffBiquiver opposite(const DiffBiquiver& dbq) {
    int n = dbq.quiver.vertexCount();
    std::vector<Arrow> arrows;
    for (const Arrow& a : dbq.quiver.arrows()) {
        Arrow b = a;
        b.src = n + 1 - a.dst;
        b.dst = n + 1 - a.src;
        arrows.push_back(b);
    }
    DiffBiquiver out;
    out.quiver = Quiver(n, std::move(arrows));
    for (const AlgExpr& rel : dbq.relations) {
        AlgExpr r;
        for (const AlgTerm& t : rel) r.push_back(AlgTerm{t.coeff, reversedPath(t.path)});
        out.relations.push_back(std::move(r));
    }
    for (const auto& [name, expr] : dbq.d0) {
        VbarExpr e;
        for (const VbarTerm& t : expr) e.push_back(oppositeVbarTerm(t));
        out.d0[name] = std::move(e);
    }
    for (const auto& [name, expr] : dbq.d1) {
        TensorExpr e;
        for (const TensorTerm& t : expr) {
            TensorTerm r;
            // graded opposite: both tensor factors have degree 1, so the swap
            // picks up a Koszul sign
            r.coeff = -t.coeff;
            r.x = oppositeVbarTerm(t.y);
            r.y = oppositeVbarTerm(t.x);
            e.push_back(std::move(r));
        }
        out.d1[name] = std::move(e);
    }
    checkStructure(out);
    return out;
}

namespace {

struct Tokenizer {
    std::string s;
    size_t pos = 0;
    int line;
    explicit Tokenizer(std::string str, int line_) : s(std::move(str)), line(line_) {}

    void skipSpace() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skipSpace();
        return pos >= s.size();
    }
    char peek() {
        skipSpace();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skipSpace();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw ParseError(line, std::string("expected '") + c + "'");
    }
    std::string ident() {
        skipSpace();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError(line, "expected a name");
        return s.substr(start, pos - start);
    }
    std::string number() {
        skipSpace();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError(line, "expected a number");
        return s.substr(start, pos - start);
    }
    bool atDigit() {
        skipSpace();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
};

// optional leading rational like "2", "-1/2"; sign handled by caller
Rational parseCoefficient(Tokenizer& t) {
    if (!t.atDigit()) return Rational(1);
    std::string numPart = t.number();
    if (t.consume('/')) {
        std::string denPart = t.number();
        return Rational(BigInt::fromString(numPart), BigInt::fromString(denPart));
    }
    return Rational(BigInt::fromString(numPart), BigInt(1));
}

// factor chain name ('*' name)*; splits around at most one dashed arrow
struct FactorChain {
    PathNames names;
};

FactorChain parseChain(Tokenizer& t) {
    FactorChain c;
    c.names.push_back(t.ident());
    while (t.consume('*')) c.names.push_back(t.ident());
    return c;
}

VbarTerm chainToVbarTerm(const Quiver& q, const FactorChain& chain, int line) {
    VbarTerm term;
    term.coeff = Rational(1);
    int dashedAt = -1;
    for (int i = 0; i < static_cast<int>(chain.names.size()); ++i) {
        const std::string& nm = chain.names[i];
        if (!q.hasArrow(nm)) throw ParseError(line, "unknown arrow '" + nm + "'");
        if (q.arrow(q.arrowIndex(nm)).degree == 1) {
            if (dashedAt >= 0) throw ParseError(line, "more than one dashed factor in a term");
            dashedAt = i;
        }
    }
    if (dashedAt < 0) throw ParseError(line, "term has no dashed factor");
    term.gen = chain.names[dashedAt];
    term.left.assign(chain.names.begin(), chain.names.begin() + dashedAt);
    term.right.assign(chain.names.begin() + dashedAt + 1, chain.names.end());
    return term;
}

}  // namespace

DiffBiquiver parseBiquiver(const std::string& text) {
    std::istringstream in(text);
    std::string lineText;
    int lineNo = 0;

    int n = -1;
    std::vector<Arrow> arrows;
    struct PendingExpr {
        int line;
        std::string kind;  // "relation" or arrow name for d-lines
        std::string body;
    };
    std::vector<PendingExpr> pending;

    while (std::getline(in, lineText)) {
        ++lineNo;
        auto hash = lineText.find('#');
        if (hash != std::string::npos) lineText = lineText.substr(0, hash);
        Tokenizer t(lineText, lineNo);
        if (t.done()) continue;
        std::string head = t.ident();
        if (head == "vertices") {
            if (n >= 0) throw ParseError(lineNo, "duplicate vertices line");
            n = std::stoi(t.number());
            if (n < 1) throw ParseError(lineNo, "vertex count must be positive");
            if (!t.done()) throw ParseError(lineNo, "trailing input after vertex count");
        } else if (head == "solid" || head == "dashed") {
            if (n < 0) throw ParseError(lineNo, "vertices line must come first");
            Arrow a;
            a.degree = head == "dashed" ? 1 : 0;
            a.name = t.ident();
            t.expect(':');
            a.src = std::stoi(t.number());
            t.expect('-');
            t.expect('>');
            a.dst = std::stoi(t.number());
            if (!t.done()) throw ParseError(lineNo, "trailing input after arrow");
            if (a.src >= a.dst)
                throw ParseError(lineNo, "arrow '" + a.name + "': source must precede target");
            arrows.push_back(std::move(a));
        } else if (head == "relation") {
            pending.push_back({lineNo, "relation", lineText.substr(t.pos)});
        } else if (head == "d") {
            Tokenizer rest(lineText.substr(t.pos), lineNo);
            rest.expect('(');
            std::string arrow = rest.ident();
            rest.expect(')');
            rest.expect('=');
            pending.push_back({lineNo, arrow, rest.s.substr(rest.pos)});
        } else {
            throw ParseError(lineNo, "unknown directive '" + head + "'");
        }
    }
    if (n < 0) throw ParseError(lineNo, "missing vertices line");

    DiffBiquiver dbq;
    try {
        dbq.quiver = Quiver(n, std::move(arrows));
    } catch (const BocsError& e) {
        throw ParseError(0, e.what());
    }
    const Quiver& q = dbq.quiver;

    for (const PendingExpr& pe : pending) {
        Tokenizer t(pe.body, pe.line);
        // parse a signed sum of terms; '@' separates tensor factors
        struct RawTerm {
            Rational coeff;
            std::vector<FactorChain> tensorFactors;
        };
        std::vector<RawTerm> terms;
        bool firstTerm = true;
        while (!t.done()) {
            Rational sign(1);
            if (t.consume('+')) {
                sign = Rational(1);
            } else if (t.consume('-')) {
                sign = Rational(-1);
            } else if (!firstTerm) {
                throw ParseError(pe.line, "expected '+' or '-' between terms");
            }
            firstTerm = false;
            Rational coeff = parseCoefficient(t) * sign;
            RawTerm term;
            term.coeff = coeff;
            term.tensorFactors.push_back(parseChain(t));
            while (t.consume('@')) term.tensorFactors.push_back(parseChain(t));
            terms.push_back(std::move(term));
        }

        if (pe.kind == "relation") {
            AlgExpr rel;
            for (const RawTerm& rt : terms) {
                if (rt.tensorFactors.size() != 1)
                    throw ParseError(pe.line, "'@' is not allowed in relations");
                for (const std::string& nm : rt.tensorFactors[0].names) {
                    if (!q.hasArrow(nm)) throw ParseError(pe.line, "unknown arrow '" + nm + "'");
                    if (q.arrow(q.arrowIndex(nm)).degree != 0)
                        throw ParseError(pe.line, "relations may only use solid arrows");
                }
                rel.push_back(AlgTerm{rt.coeff, rt.tensorFactors[0].names});
            }
            dbq.relations.push_back(std::move(rel));
        } else {
            if (!q.hasArrow(pe.kind)) throw ParseError(pe.line, "unknown arrow '" + pe.kind + "'");
            const Arrow& target = q.arrow(q.arrowIndex(pe.kind));
            if (target.degree == 0) {
                VbarExpr expr;
                for (const RawTerm& rt : terms) {
                    if (rt.tensorFactors.size() != 1)
                        throw ParseError(pe.line,
                                         "d of a solid arrow must not contain '@' tensors");
                    VbarTerm vt = chainToVbarTerm(q, rt.tensorFactors[0], pe.line);
                    vt.coeff = rt.coeff;
                    expr.push_back(std::move(vt));
                }
                if (dbq.d0.count(pe.kind)) throw ParseError(pe.line, "duplicate d(" + pe.kind + ")");
                dbq.d0[pe.kind] = std::move(expr);
            } else {
                TensorExpr expr;
                for (const RawTerm& rt : terms) {
                    if (rt.tensorFactors.size() != 2)
                        throw ParseError(pe.line,
                                         "d of a dashed arrow must be a sum of x @ y tensors");
                    TensorTerm tt;
                    tt.coeff = rt.coeff;
                    tt.x = chainToVbarTerm(q, rt.tensorFactors[0], pe.line);
                    tt.y = chainToVbarTerm(q, rt.tensorFactors[1], pe.line);
                    expr.push_back(std::move(tt));
                }
                if (dbq.d1.count(pe.kind)) throw ParseError(pe.line, "duplicate d(" + pe.kind + ")");
                dbq.d1[pe.kind] = std::move(expr);
            }
        }
    }

    try {
        checkStructure(dbq);
    } catch (const BocsError& e) {
        throw ParseError(0, e.what());
    }
    return dbq;
}

AlgExpr combineAlgExpr(const AlgExpr& e) {
    std::map<PathNames, Rational> acc;
    for (const AlgTerm& t : e) {
        Rational& c = acc[t.path];
        c += t.coeff;
    }
    AlgExpr out;
    for (const AlgTerm& t : e) {
        auto it = acc.find(t.path);
        if (it == acc.end()) continue;
        if (!it->second.isZero()) out.push_back(AlgTerm{it->second, t.path});
        acc.erase(it);
    }
    return out;
}

namespace {
using VbarKey = std::tuple<PathNames, std::string, PathNames>;
VbarKey vbarKey(const VbarTerm& t) { return {t.left, t.gen, t.right}; }
}  // namespace

VbarExpr combineVbarExpr(const VbarExpr& e) {
    std::map<VbarKey, Rational> acc;
    for (const VbarTerm& t : e) acc[vbarKey(t)] += t.coeff;
    VbarExpr out;
    for (const VbarTerm& t : e) {
        auto it = acc.find(vbarKey(t));
        if (it == acc.end()) continue;
        if (!it->second.isZero()) {
            VbarTerm u = t;
            u.coeff = it->second;
            out.push_back(std::move(u));
        }
        acc.erase(it);
    }
    return out;
}

TensorExpr combineTensorExpr(const TensorExpr& e) {
    std::map<std::pair<VbarKey, VbarKey>, Rational> acc;
    for (const TensorTerm& t : e) acc[{vbarKey(t.x), vbarKey(t.y)}] += t.coeff;
    TensorExpr out;
    for (const TensorTerm& t : e) {
        auto it = acc.find({vbarKey(t.x), vbarKey(t.y)});
        if (it == acc.end()) continue;
        if (!it->second.isZero()) {
            TensorTerm u = t;
            u.coeff = it->second;
            out.push_back(std::move(u));
        }
        acc.erase(it);
    }
    return out;
}

std::string displayPath(const PathNames& p) {
    if (p.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += "*";
        s += p[i];
    }
    return s;
}

std::string displayVbarTerm(const VbarTerm& t) {
    std::string s;
    for (const auto& nm : t.left) s += nm + "*";
    s += t.gen;
    for (const auto& nm : t.right) s += "*" + nm;
    return s;
}

namespace {

void appendSigned(std::string& out, bool& first, const Rational& coeff, const std::string& term) {
    std::string cs = coeff.toString();
    if (first) {
        if (cs == "1")
            out += term;
        else if (cs == "-1")
            out += "-" + term;
        else
            out += cs + " " + term;
        first = false;
        return;
    }
    if (coeff.signum() > 0) {
        out += " + " + (cs == "1" ? term : cs + " " + term);
    } else {
        std::string mag = (-coeff).toString();
        out += " - " + (mag == "1" ? term : mag + " " + term);
    }
}

}  // namespace

std::string displayVbarExpr(const VbarExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const VbarTerm& t : e) appendSigned(out, first, t.coeff, displayVbarTerm(t));
    return out;
}

std::string displayTensorExpr(const TensorExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const TensorTerm& t : e)
        appendSigned(out, first, t.coeff, displayVbarTerm(t.x) + " @ " + displayVbarTerm(t.y));
    return out;
}

std::string displayAlgExpr(const AlgExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const AlgTerm& t : e) appendSigned(out, first, t.coeff, displayPath(t.path));
    return out;
}

std::string printBiquiver(const DiffBiquiver& dbq) {
    std::ostringstream os;
    os << "vertices " << dbq.quiver.vertexCount() << "\n";
    for (int i : dbq.quiver.solidIndices()) {
        const Arrow& a = dbq.quiver.arrow(i);
        os << "solid " << a.name << ": " << a.src << " -> " << a.dst << "\n";
    }
    for (int i : dbq.quiver.dashedIndices()) {
        const Arrow& a = dbq.quiver.arrow(i);
        os << "dashed " << a.name << ": " << a.src << " -> " << a.dst << "\n";
    }
    for (const AlgExpr& rel : dbq.relations) os << "relation " << displayAlgExpr(rel) << "\n";
    for (int i : dbq.quiver.solidIndices()) {
        const Arrow& a = dbq.quiver.arrow(i);
        auto it = dbq.d0.find(a.name);
        if (it != dbq.d0.end() && !it->second.empty())
            os << "d(" << a.name << ") = " << displayVbarExpr(it->second) << "\n";
    }
    for (int i : dbq.quiver.dashedIndices()) {
        const Arrow& a = dbq.quiver.arrow(i);
        auto it = dbq.d1.find(a.name);
        if (it != dbq.d1.end() && !it->second.empty())
            os << "d(" << a.name << ") = " << displayTensorExpr(it->second) << "\n";
    }
    return os.str();
}

}  // namespace bocskit

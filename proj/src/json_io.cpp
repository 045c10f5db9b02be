#include "bocskit/json_io.hpp"

namespace bocskit {

Json matrixToJson(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).toString());
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrixFromJson(const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    Matrix m(rows, cols);
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw BocsError("matrix: bad row count");
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols) throw BocsError("matrix: bad col count");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rational::fromString(entries[r][c].get<std::string>());
    }
    return m;
}

namespace {

Json dimsToJson(const LModule& y) {
    Json dims = Json::array();
    for (int v = 1; v <= y.vertexCount(); ++v) dims.push_back(y.dims[v]);
    return dims;
}

LModule dimsFromJson(int n, const Json& j) {
    if (static_cast<int>(j.size()) != n) throw BocsError("dims: wrong vertex count");
    LModule y(n);
    for (int v = 1; v <= n; ++v) y.dims[v] = j[v - 1].get<int>();
    return y;
}

}  // namespace

Json moduleToJson(const BocsModule& m) {
    Json j;
    j["kind"] = "module";
    j["dims"] = dimsToJson(m.shape);
    Json action;
    for (int ai : m.bocs->quiver().solidIndices())
        action[m.bocs->quiver().arrow(ai).name] = matrixToJson(m.action.at(ai));
    j["action"] = std::move(action);
    return j;
}

BocsModule moduleFromJson(const Bocs& b, const Json& j) {
    BocsModule m;
    m.bocs = &b;
    m.shape = dimsFromJson(b.vertexCount(), j.at("dims"));
    for (int ai : b.quiver().solidIndices()) {
        const std::string& name = b.quiver().arrow(ai).name;
        m.action[ai] = matrixFromJson(j.at("action").at(name));
    }
    return m;
}

Json nObjectToJson(const NObject& obj) {
    Json j;
    j["kind"] = "n_object";
    j["dims"] = dimsToJson(obj.y);
    j["c"] = matrixToJson(obj.c);
    return j;
}

NObject nObjectFromJson(const Bocs& b, const Json& j) {
    NObject obj;
    obj.bocs = &b;
    obj.y = dimsFromJson(b.vertexCount(), j.at("dims"));
    obj.c = matrixFromJson(j.at("c"));
    PairBasis vbarY = tensorPairBasis(b, 1, obj.y);
    if (obj.c.rows() != vbarY.size() || obj.c.cols() != obj.y.total())
        throw BocsError("n_object: c has wrong shape");
    return obj;
}

Json rObjectToJson(const RObject& obj) {
    Json j;
    j["kind"] = "r_object";
    j["dims"] = dimsToJson(obj.y);
    Json s;
    for (int x = 0; x < obj.bocs->vbar().size(); ++x)
        s[obj.bocs->vbar().displayItem(x)] = matrixToJson(obj.s[x]);
    j["s"] = std::move(s);
    return j;
}

RObject rObjectFromJson(const Bocs& b, const Json& j) {
    RObject obj;
    obj.bocs = &b;
    obj.y = dimsFromJson(b.vertexCount(), j.at("dims"));
    for (int x = 0; x < b.vbar().size(); ++x) {
        const std::string key = b.vbar().displayItem(x);
        if (j.at("s").contains(key)) {
            obj.s.push_back(matrixFromJson(j.at("s").at(key)));
        } else {
            obj.s.push_back(Matrix(obj.y.total(), obj.y.total()));
        }
    }
    return obj;
}

Json dualPresentationToJson(const DualPresentation& p) {
    Json j;
    j["kind"] = p.ringel ? "ringel_dual" : "koszul_dual";
    j["vertices"] = p.biquiver.quiver.vertexCount();
    j["degree0"] = p.degree0Names;
    j["degree1"] = p.degree1Names;
    Json rels = Json::array();
    for (const AlgExpr& rel : p.biquiver.relations) rels.push_back(displayAlgExpr(rel));
    j["relations"] = std::move(rels);
    Json d0, d1;
    for (const auto& [name, expr] : p.biquiver.d0) d0[name] = displayVbarExpr(expr);
    for (const auto& [name, expr] : p.biquiver.d1) d1[name] = displayTensorExpr(expr);
    j["d0"] = std::move(d0);
    j["d1"] = std::move(d1);
    j["counts"] = {{"degree0", p.degree0Names.size()},
                   {"degree1", p.degree1Names.size()},
                   {"relations", p.biquiver.relations.size()}};
    j["log"] = p.log;
    j["bocs"] = printBiquiver(p.biquiver);
    return j;
}

Json dimReportToJson(const DimReport& r) {
    Json j;
    j["vertices"] = r.n;
    j["dimA"] = r.dimA;
    j["dimVbar"] = r.dimVbar;
    j["rightAlgebraDim"] = r.rightAlgebra;
    j["regular"] = r.regular;
    auto emit = [&](const std::vector<std::vector<int>>& m) {
        Json rows = Json::array();
        for (int i = 1; i <= r.n; ++i) {
            Json row = Json::array();
            for (int l = 1; l <= r.n; ++l) row.push_back(m[i][l]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["solidCounts"] = emit(r.solidCount);
    j["dashedCounts"] = emit(r.dashedCount);
    j["hom"] = emit(r.homDim);
    j["ext1"] = emit(r.extDim);
    return j;
}

Json classificationToJson(const ClassificationReport& r) {
    Json j;
    j["n"] = r.n;
    Json classes = Json::array();
    for (const ClassInfo& info : r.classes) {
        Json c;
        c["label"] = info.label;
        Json diff;
        DiffBiquiver dbq = info.representative.toBiquiver();
        for (const auto& [name, expr] : dbq.d0) diff[name] = displayVbarExpr(expr);
        for (const auto& [name, expr] : dbq.d1) diff[name] = displayTensorExpr(expr);
        c["differential"] = std::move(diff);
        if (!info.ringelDualLabel.empty()) c["ringel_dual_label"] = info.ringelDualLabel;
        c["beyond_geometric"] = info.beyondGeometric;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    Json excluded = Json::array();
    for (const Exclusion& e : r.excluded) {
        Json x;
        x["candidate"] = e.candidate;
        x["reason"] = e.reason;
        x["witness"] = e.witness;
        excluded.push_back(std::move(x));
    }
    j["excluded"] = std::move(excluded);
    return j;
}

Json complexToJson(const BocsComplex& c) {
    Json j;
    Json modules = Json::array();
    for (const auto& [deg, m] : c.modules) {
        Json entry;
        entry["degree"] = deg;
        entry["dim"] = m.total();
        entry["module"] = moduleToJson(m);
        modules.push_back(std::move(entry));
    }
    j["modules"] = std::move(modules);
    Json diffs = Json::array();
    for (const auto& [deg, d] : c.differential) {
        Json entry;
        entry["degree"] = deg;
        Json omega = Json::array();
        for (int v = 1; v < static_cast<int>(d.omega.size()); ++v)
            omega.push_back(matrixToJson(d.omega[v]));
        entry["omega"] = std::move(omega);
        Json dashed;
        for (const auto& [di, mat] : d.dashed)
            dashed[c.bocs->quiver().arrow(di).name] = matrixToJson(mat);
        entry["dashed"] = std::move(dashed);
        diffs.push_back(std::move(entry));
    }
    j["differential"] = std::move(diffs);
    return j;
}

Json boxTableToJson(const Bocs& b) {
    Json j;
    Json boxes = Json::array();
    for (int v = 1; v <= b.vertexCount(); ++v) {
        BocsComplex box = boxComplex(b, v);
        Json entry;
        entry["vertex"] = v;
        Json dims = Json::array();
        for (const auto& [deg, m] : box.modules) {
            Json d;
            d["degree"] = deg;
            d["dim"] = m.total();
            dims.push_back(std::move(d));
        }
        entry["box"] = std::move(dims);
        BocsComplex diamond = diamondComplex(b, v);
        Json ddims = Json::array();
        for (const auto& [deg, m] : diamond.modules) {
            Json d;
            d["degree"] = deg;
            d["dim"] = m.total();
            ddims.push_back(std::move(d));
        }
        entry["diamond"] = std::move(ddims);
        entry["box_complex"] = complexToJson(box);
        entry["diamond_complex"] = complexToJson(diamond);
        boxes.push_back(std::move(entry));
    }
    j["complexes"] = std::move(boxes);
    return j;
}

}  // namespace bocskit

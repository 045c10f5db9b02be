#include "bocskit/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bocskit/json_io.hpp"
#include "bocskit/koszul.hpp"

namespace bocskit {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BocsError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

DiffBiquiver loadBiquiver(const std::string& path) { return parseBiquiver(readFile(path)); }

int cmdValidate(const std::string& path, bool json, std::ostream& out) {
    DiffBiquiver dbq = loadBiquiver(path);
    ValidationReport rep = validateBiquiver(dbq);
    if (json) {
        Json j;
        j["pass"] = rep.pass;
        Json v = Json::array();
        for (const auto& viol : rep.violations)
            v.push_back({{"where", viol.where}, {"residue", viol.residue}});
        j["violations"] = std::move(v);
        out << j.dump(2) << "\n";
    } else {
        out << (rep.pass ? "valid differential biquiver\n" : rep.toString());
    }
    return rep.pass ? 0 : 1;
}

int cmdDual(const std::string& path, bool ringel, bool json, std::ostream& out) {
    Bocs b = buildBocs(loadBiquiver(path));
    DualPresentation dual = ringel ? ringelDual(b) : koszulDual(b);
    if (json) {
        out << dualPresentationToJson(dual).dump(2) << "\n";
    } else {
        out << "# " << (ringel ? "ringel" : "koszul") << " dual: " << dual.degree0Names.size()
            << " degree-0, " << dual.biquiver.relations.size() << " relations, "
            << dual.degree1Names.size() << " degree-1\n";
        out << printBiquiver(dual.biquiver);
    }
    return 0;
}

int cmdRegularize(const std::string& path, bool json, std::ostream& out) {
    DiffBiquiver dbq = loadBiquiver(path);
    std::vector<std::string> log;
    DiffBiquiver reg = regularize(dbq, &log);
    if (json) {
        DualPresentation p;
        p.biquiver = reg;
        p.log = log;
        p.refreshNames();
        out << dualPresentationToJson(p).dump(2) << "\n";
    } else {
        for (const auto& step : log) out << "# " << step << "\n";
        out << printBiquiver(reg);
    }
    return 0;
}

int cmdBox(const std::string& path, int vertex, bool json, std::ostream& out) {
    Bocs b = buildBocs(loadBiquiver(path));
    if (json) {
        out << boxTableToJson(b).dump(2) << "\n";
        return 0;
    }
    for (int v = 1; v <= b.vertexCount(); ++v) {
        if (vertex > 0 && v != vertex) continue;
        BocsComplex box = boxComplex(b, v);
        out << "Box_" << v << ":";
        for (const auto& [deg, m] : box.modules) out << " deg " << deg << ": " << m.total();
        out << "\n";
        BocsComplex diamond = diamondComplex(b, v);
        out << "Diamond_" << v << ":";
        for (const auto& [deg, m] : diamond.modules) out << " deg " << deg << ": " << m.total();
        out << "\n";
    }
    return 0;
}

int cmdDims(const std::string& path, bool json, std::ostream& out) {
    DiffBiquiver dbq = loadBiquiver(path);
    bool regular = isRegular(dbq);
    if (!regular) {
        out << "# input is not regular; reporting its regularisation\n";
        dbq = regularize(dbq);
    }
    Bocs b = buildBocs(std::move(dbq));
    DimReport rep = homExtMatrices(b);
    if (json)
        out << dimReportToJson(rep).dump(2) << "\n";
    else
        out << rep.toString();
    return 0;
}

int cmdCheck(const std::string& path, const std::string& objectPath, std::ostream& out) {
    Bocs b = buildBocs(loadBiquiver(path));
    Json doc = Json::parse(readFile(objectPath));
    std::string kind = doc.at("kind").get<std::string>();
    bool ok = false;
    std::string detail;
    if (kind == "n_object") {
        NObject obj = nObjectFromJson(b, doc);
        NCheck check = checkNObject(obj);
        ok = check.ok;
        detail = check.residue;
        if (ok) detail = "filtration length " + std::to_string(check.filtrationLength);
    } else if (kind == "n_morphism") {
        NObject src = nObjectFromJson(b, doc.at("source"));
        NObject dst = nObjectFromJson(b, doc.at("target"));
        Matrix cf = matrixFromJson(doc.at("cf"));
        NMorphismCheck check = checkNMorphism(b, cf, src, dst);
        ok = check.ok;
        detail = check.residue;
    } else if (kind == "r_object") {
        RObject obj = rObjectFromJson(b, doc);
        RCheck check = checkRObject(obj);
        ok = check.ok;
        detail = check.residue;
    } else if (kind == "r_morphism") {
        RObject src = rObjectFromJson(b, doc.at("source"));
        RObject dst = rObjectFromJson(b, doc.at("target"));
        std::vector<Matrix> sf;
        for (int a = 0; a < b.algebra().dim(); ++a) {
            std::string key = b.algebra().basisName(a);
            if (doc.at("sf").contains(key))
                sf.push_back(matrixFromJson(doc.at("sf").at(key)));
            else
                sf.push_back(Matrix(dst.y.total(), src.y.total()));
        }
        RCheck check = checkRMorphism(b, sf, src, dst);
        ok = check.ok;
        detail = check.residue;
    } else {
        throw BocsError("unknown object kind '" + kind + "'");
    }
    out << (ok ? "pass" : "fail") << (detail.empty() ? "" : ": " + detail) << "\n";
    return ok ? 0 : 1;
}

int cmdClassify(int n, bool json, std::ostream& out) {
    ClassificationReport report = classify(n);
    ringelPairing(report);
    if (json) {
        out << classificationToJson(report).dump(2) << "\n";
        return 0;
    }
    out << "n = " << n << ": " << report.classes.size() << " classes\n";
    for (const ClassInfo& info : report.classes) {
        out << "  " << info.label;
        if (!info.ringelDualLabel.empty()) out << "  (ringel dual: " << info.ringelDualLabel << ")";
        if (info.beyondGeometric) out << "  [not Morita equivalent to a geometric algebra]";
        out << "\n";
    }
    if (!report.excluded.empty()) {
        out << "excluded:\n";
        for (const Exclusion& e : report.excluded)
            out << "  " << e.candidate << ": " << e.reason
                << (e.witness.empty() ? "" : " (" + e.witness + ")") << "\n";
    }
    return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bocskit: directed differential biquivers, their duals and classification"};
    app.require_subcommand(1);

    std::string input, objectPath;
    bool json = false, ringel = false;
    int vertex = 0, n = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a .bocs file");
    validate->add_option("input", input)->required();
    validate->add_flag("--json", json);

    CLI::App* dual = app.add_subcommand("dual", "koszul/ringel dual presentation");
    dual->add_option("input", input)->required();
    dual->add_flag("--ringel", ringel);
    dual->add_flag("--json", json);

    CLI::App* reg = app.add_subcommand("regularize", "remove superfluous generators");
    reg->add_option("input", input)->required();
    reg->add_flag("--json", json);

    CLI::App* box = app.add_subcommand("box", "box and diamond complex dimensions");
    box->add_option("input", input)->required();
    box->add_option("--vertex", vertex);
    box->add_flag("--json", json);

    CLI::App* dims = app.add_subcommand("dims", "hom/ext dimension report");
    dims->add_option("input", input)->required();
    dims->add_flag("--json", json);

    CLI::App* check = app.add_subcommand("check", "run the comodule-category checks");
    check->add_option("input", input)->required();
    check->add_option("--object", objectPath)->required();

    CLI::App* cls = app.add_subcommand("classify", "curve-like classification");
    cls->add_option("--n", n)->required();
    cls->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmdValidate(input, json, out);
        if (dual->parsed()) return cmdDual(input, ringel, json, out);
        if (reg->parsed()) return cmdRegularize(input, json, out);
        if (box->parsed()) return cmdBox(input, vertex, json, out);
        if (dims->parsed()) return cmdDims(input, json, out);
        if (check->parsed()) return cmdCheck(input, objectPath, out);
        if (cls->parsed()) {
            if (n < 2 || n > 4) {
                err << "error: --n must be between 2 and 4\n";
                return 2;
            }
            return cmdClassify(n, json, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BocsError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace bocskit

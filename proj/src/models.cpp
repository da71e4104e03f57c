#include "cy4/models.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace cy4 {

namespace embedded {
const std::vector<std::pair<std::string, std::string>>& models();
}

const MeetingConvention& ModelSpec::convention(const std::string& n) const {
    for (auto& c : conventions)
        if (c.name == n) return c;
    throw Error("model " + name + ": unknown meeting convention '" + n + "'");
}

namespace {

Q rat(const YAML::Node& n, const std::string& what) {
    if (!n || !n.IsScalar()) throw Error("expected a number for " + what);
    return parse_rational(n.as<std::string>());
}

Exp exps(const YAML::Node& n, const std::string& what) {
    if (!n || !n.IsSequence()) throw Error("expected an integer list for " + what);
    Exp e;
    for (auto x : n) e.push_back(x.as<int>());
    return e;
}

Matrix matrix(const YAML::Node& n, int r, const std::string& what) {
    if (!n || !n.IsSequence() || static_cast<int>(n.size()) != r) throw Error(what + ": expected " + std::to_string(r) + " rows");
    Matrix m;
    for (auto row : n) {
        if (!row.IsSequence() || static_cast<int>(row.size()) != r) throw Error(what + ": bad row");
        std::vector<Q> v;
        for (auto x : row) v.push_back(rat(x, what));
        m.push_back(v);
    }
    return m;
}

std::map<Exp, Q> poly(const YAML::Node& n, int r, const std::string& what) {
    if (!n || !n.IsMap()) throw Error(what + ": expected a map exponent-vector -> coefficient");
    std::map<Exp, Q> p;
    for (auto kv : n) {
        Exp e = exps(kv.first, what);
        if (static_cast<int>(e.size()) != r) throw Error(what + ": exponent of wrong length");
        p[e] += rat(kv.second, what);
    }
    return p;
}

ModelSpec parse(const YAML::Node& y) {
    ModelSpec m;
    if (!y["name"]) throw Error("model file: missing name");
    m.name = y["name"].as<std::string>();
    m.description = y["description"] ? y["description"].as<std::string>() : "";
    m.kind = y["kind"] ? y["kind"].as<std::string>() : "pf";
    if (m.kind != "pf" && m.kind != "closed_p2" && m.kind != "closed_p1p1")
        throw Error("model " + m.name + ": unknown kind '" + m.kind + "'");
    m.r = y["r"].as<int>();
    m.weights = y["weights"] ? exps(y["weights"], "weights") : Exp(m.r, 1);
    if (static_cast<int>(m.weights.size()) != m.r) throw Error("model " + m.name + ": weights length");
    if (y["default_degree"]) m.default_degree = y["default_degree"].as<int>();
    if (y["rho_order"]) m.rho_order = y["rho_order"].as<int>();
    if (y["euler"]) m.euler = rat(y["euler"], "euler");

    if (auto ops = y["operators"]) {
        for (auto op : ops) {
            PFOperator o;
            for (auto t : op) {
                Exp shift = exps(t["shift"], "shift");
                if (static_cast<int>(shift.size()) != m.r) throw Error("model " + m.name + ": shift length");
                o.terms.push_back({shift, poly(t["theta_poly"], m.r, "theta_poly")});
            }
            m.operators.push_back(o);
        }
    }
    if (m.kind == "pf" && m.operators.empty()) throw Error("model " + m.name + ": no operators");

    for (auto ins : y["insertions"]) {
        Insertion I;
        I.label = ins["label"].as<std::string>();
        if (ins["kappa"]) I.kappa = matrix(ins["kappa"], m.r, "kappa");
        m.insertions.push_back(I);
    }
    if (m.insertions.empty()) throw Error("model " + m.name + ": no insertions");
    if (auto c2 = y["c2"]) {
        if (c2["kappa"]) m.c2_kappa = matrix(c2["kappa"], m.r, "c2.kappa");
        if (c2["factor"]) m.c2_factor = rat(c2["factor"], "c2.factor");
    }
    const int ns = static_cast<int>(m.insertions.size());
    if (auto p = y["pairing"]) {
        m.gram = matrix(p["gram"], ns, "pairing.gram");
        for (auto c : p["conventions"]) {
            MeetingConvention mc;
            mc.name = c["name"].as<std::string>();
            if (c["scale"]) mc.scale = rat(c["scale"], "scale");
            if (c["use_c2"]) mc.use_c2 = c["use_c2"].as<bool>();
            m.conventions.push_back(mc);
        }
        if (m.conventions.empty()) m.conventions.push_back({});
        m.genus1_convention = p["genus1"] ? p["genus1"].as<std::string>() : m.conventions[0].name;
        m.convention(m.genus1_convention);
    }
    if (auto f = y["f1"]) {
        F1Spec s;
        s.a = f["a"] ? rat(f["a"], "f1.a") : Q(0);
        for (auto d : f["discriminants"]) s.discriminants.push_back({rat(d["b"], "b"), poly(d["poly"], m.r, "discriminant")});
        if (f["logz"]) {
            if (f["logz"].IsScalar() && f["logz"].as<std::string>() == "solve") {
                s.solve_logz = true;
            } else {
                for (auto x : f["logz"]) s.logz.push_back(rat(x, "logz"));
            }
        } else {
            s.logz.assign(m.r, 0);
        }
        if (f["c3"]) {
            for (auto x : f["c3"]) s.c3.push_back(rat(x, "c3"));
            if (static_cast<int>(s.c3.size()) != m.r) throw Error("model " + m.name + ": c3 length");
        }
        for (auto v : f["variants"]) {
            F1Variant fv{v["name"].as<std::string>(), rat(v["a"], "variant a"), {}};
            for (auto x : v["logz"]) fv.logz.push_back(rat(x, "variant logz"));
            if (!fv.logz.empty() && static_cast<int>(fv.logz.size()) != m.r) throw Error("model " + m.name + ": variant logz length");
            m.f1_variants.push_back(fv);
        }
        m.f1 = s;
    }
    return m;
}

}  // namespace

ModelSpec parse_model(const std::string& text) {
    try {
        return parse(YAML::Load(text));
    } catch (const YAML::Exception& e) {
        throw Error(std::string("model file: ") + e.what());
    }
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

namespace {

const std::map<std::string, ModelSpec>& registry() {
    static const std::map<std::string, ModelSpec> reg = [] {
        std::map<std::string, ModelSpec> r;
        for (auto& [stem, text] : embedded::models()) {
            ModelSpec m = parse_model(text);
            r.emplace(m.name, std::move(m));
        }
        return r;
    }();
    return reg;
}

}  // namespace

const std::vector<std::string>& builtin_model_names() {
    static const std::vector<std::string> names = {"local_p2", "local_p1p1", "local_p3", "sextic", "x10", "x2_5", "x24"};
    return names;
}

bool is_builtin_model(const std::string& name) { return registry().count(name) > 0; }

const ModelSpec& builtin_model(const std::string& name) {
    auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw Error("unknown model '" + name + "'");
    return it->second;
}

}  // namespace cy4

#include "cy4/golden.hpp"

#include <yaml-cpp/yaml.h>

#include <map>

namespace cy4 {

namespace embedded {
const std::vector<std::pair<std::string, std::string>>& goldens();
}

namespace {

Q rat(const YAML::Node& n) { return parse_rational(n.as<std::string>()); }

Exp exps(const YAML::Node& n) {
    Exp e;
    for (auto x : n) e.push_back(x.as<int>());
    return e;
}

Golden parse(const YAML::Node& y) {
    Golden g;
    g.model = y["model"].as<std::string>();
    g.truncation = y["truncation"].as<int>();
    for (auto b : y["blocks"]) {
        GoldenBlock B;
        B.kind = b["kind"].as<std::string>();
        if (b["insertion"]) B.insertion = b["insertion"].as<std::string>();
        if (b["convention"]) B.convention = b["convention"].as<std::string>();
        if (b["index"]) B.index = b["index"].as<int>();
        if (auto v = b["values"]) {
            int d = 1;
            for (auto x : v) B.cells.push_back({Exp{d++}, rat(x)});
        }
        if (auto gr = b["grid"]) {
            int i = 0;
            for (auto row : gr) {
                int j = 0;
                for (auto x : row) {
                    if (!x.IsNull() && (i || j)) B.cells.push_back({Exp{i, j}, rat(x)});
                    ++j;
                }
                ++i;
            }
        }
        for (auto c : b["cells"]) B.pairs.emplace_back(exps(c[0]), exps(c[1]), rat(c[2]));
        if (B.kind != "n0" && B.kind != "n1" && B.kind != "meeting" && B.kind != "mirror_z" && B.kind != "single_log")
            throw Error("golden " + g.model + ": unknown block kind '" + B.kind + "'");
        g.blocks.push_back(std::move(B));
    }
    return g;
}

}  // namespace

Golden parse_golden(const std::string& text) {
    try {
        return parse(YAML::Load(text));
    } catch (const YAML::Exception& e) {
        throw Error(std::string("golden file: ") + e.what());
    }
}

const Golden* builtin_golden(const std::string& model) {
    static const std::map<std::string, Golden> reg = [] {
        std::map<std::string, Golden> r;
        for (auto& [stem, text] : embedded::goldens()) {
            Golden g = parse_golden(text);
            r.emplace(g.model, std::move(g));
        }
        return r;
    }();
    auto it = reg.find(model);
    return it == reg.end() ? nullptr : &it->second;
}

}  // namespace cy4

// Command-line front end over the C interface.

#include "cy4/cy4.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Session {
    cy4_session* s = nullptr;
    ~Session() { cy4_session_close(s); }
};

struct Text {
    char* p = nullptr;
    ~Text() { cy4_free(p); }
};

[[noreturn]] void die(const std::string& what) {
    std::cerr << "cy4: " << what << ": " << cy4_last_error() << "\n";
    std::exit(2);
}

void open(Session& s, const std::string& model) {
    if (cy4_session_open(model.c_str(), &s.s) != CY4_OK) die("cannot open model");
}

std::string value_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string beta_text(const nlohmann::json& b) {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i].dump();
    return s + ")";
}

bool check_one(const std::string& model) {
    Session s;
    open(s, model);
    Text report;
    int passed = 0;
    if (cy4_session_check(s.s, &report.p, &passed) != CY4_OK) die("check failed for " + model);
    auto j = nlohmann::json::parse(report.p);
    std::cout << model << ": " << (passed ? "PASS" : "FAIL") << "  (" << j["compared"].get<size_t>() << " reference cells, "
              << j["mismatches"].size() << " mismatches, truncation " << j["truncation"].get<int>() << ")\n";
    for (auto& m : j["mismatches"]) {
        std::cout << "  mismatch " << m["block"].get<std::string>() << " " << beta_text(m["beta"]);
        if (m.contains("beta2")) std::cout << " " << beta_text(m["beta2"]);
        std::cout << ": expected " << value_text(m["expected"]) << ", computed " << value_text(m["actual"]) << "\n";
    }
    auto& c = j["checks"];
    std::cout << "  checks: integrality " << c["integrality"] << ", round_trip " << c["round_trip"] << ", residuals "
              << c["residuals"] << ", limit_infinity " << c["limit_infinity"] << "\n";
    for (auto& n : j["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
    return passed != 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus 0 and 1 invariants of Calabi-Yau fourfolds"};
    app.require_subcommand(1);

    std::string model, output = "table", what, fmt, path;
    int max_degree = 0;

    auto* run = app.add_subcommand("run", "compute invariants for a model");
    run->add_option("model", model, "built-in model name or model file")->required();
    run->add_option("--max-degree", max_degree, "truncation degree (default: model default)")->check(CLI::PositiveNumber);
    run->add_option("--output", output, "output format")->check(CLI::IsMember({"json", "csv", "table"}));

    auto* check = app.add_subcommand("check", "compare against the built-in reference tables");
    check->add_option("model", model, "model name or 'all'")->required();

    auto* exp = app.add_subcommand("export", "write one table to a file");
    exp->add_option("model", model, "built-in model name or model file")->required();
    exp->add_option("what", what, "table")->required()->check(CLI::IsMember({"gw", "bps", "meeting", "f1"}));
    exp->add_option("fmt", fmt, "file format")->required()->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("path", path, "output file")->required();
    exp->add_option("--max-degree", max_degree, "truncation degree")->check(CLI::PositiveNumber);

    auto* models = app.add_subcommand("models", "list built-in models");

    CLI11_PARSE(app, argc, argv);

    if (*models) {
        for (size_t i = 0; i < cy4_model_count(); ++i)
            std::cout << cy4_model_name(i) << "\t" << cy4_model_description(i) << "\n";
        return 0;
    }
    if (*check) {
        std::vector<std::string> names;
        if (model == "all")
            for (size_t i = 0; i < cy4_model_count(); ++i) names.push_back(cy4_model_name(i));
        else
            names.push_back(model);
        bool ok = true;
        for (auto& n : names) ok = check_one(n) && ok;
        return ok ? 0 : 1;
    }
    Session s;
    open(s, model);
    if (cy4_session_run(s.s, max_degree) != CY4_OK) die("run failed");
    if (*run) {
        Text t;
        if (cy4_session_render(s.s, "all", output.c_str(), &t.p) != CY4_OK) die("render failed");
        std::cout << t.p;
        return 0;
    }
    if (cy4_session_export(s.s, what.c_str(), fmt.c_str(), path.c_str()) != CY4_OK) die("export failed");
    return 0;
}

#include "cy4/engine.hpp"

#include "cy4/localmodels.hpp"
#include "cy4/parallel.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace cy4 {

using nlohmann::json;

const MeetingBlock& RunResult::meeting_for(const std::string& c) const {
    for (auto& b : meeting)
        if (b.convention == c) return b;
    throw Error("no meeting table for convention '" + c + "'");
}

const GenusZeroBlock& RunResult::genus0_for(const std::string& ins) const {
    for (auto& b : genus0)
        if (b.insertion == ins) return b;
    throw Error("no genus-0 table for insertion '" + ins + "'");
}

namespace {

Table scaled_table(const Table& t, const Q& s) {
    Table out;
    for (auto& [b, v] : t)
        if (sgn(v)) out[b] = v * s;
    return out;
}

bool same_table(const Table& a, const Table& b) {
    auto clean = [](const Table& t) {
        Table o;
        for (auto& [k, v] : t)
            if (sgn(v)) o[k] = v;
        return o;
    };
    return clean(a) == clean(b);
}

void note_non_integral(Checks& c, const std::string& label, const Table& t) {
    for (auto& b : non_integral(t)) {
        c.integrality = false;
        c.non_integral.push_back(label + "(" + exp_string(b) + ")");
    }
}

Table genus1_table(const RunResult& r, const F1Result& f, Table& n1) {
    const auto& conv = r.model.convention(r.model.genus1_convention);
    Table N1 = table_from_series(f.series);
    Table nc2 = scaled_table(r.nc2, conv.scale);
    const auto& m = r.meeting_for(conv.name).m;
    n1 = invert_genus1(N1, nc2, m, *r.ring);
    return N1;
}

void closed_forms(RunResult& res) {
    const auto& spec = res.model;
    const auto& R = res.ring;
    GenusZeroBlock g{spec.insertions[0].label, {}, {}};
    Series s1;
    if (spec.kind == "closed_p2") {
        if (spec.r != 1) throw Error("closed_p2 needs one parameter");
        for (size_t k = 1; k < R->size(); ++k) g.N[R->mono(k)] = p2_genus0_point(R->mono(k)[0]);
        s1 = p2_genus1_series(R);
    } else {
        if (spec.r != 2) throw Error("closed_p1p1 needs two parameters");
        for (size_t k = 1; k < R->size(); ++k) {
            const Exp& e = R->mono(k);
            g.N[e] = p1p1_genus0_point(e[0], e[1]);
        }
        s1 = p1p1_genus1_series(R);
    }
    res.genus0.push_back(std::move(g));
    F1Result f;
    f.series = s1;
    res.f1 = f;
}

void pf_pipeline(RunResult& res) {
    const auto& spec = res.model;
    const auto& R = res.ring;
    res.basis = solve_frobenius(R, spec.operators, spec.rho_order);
    const auto& B = *res.basis;
    res.checks.residuals = annihilated(spec.operators, LogSeries::from_series(B.X0));
    for (int i = 0; i < spec.r; ++i) res.checks.residuals = res.checks.residuals && annihilated(spec.operators, B.single_log(i));
    res.mirror = mirror_map(B);

    std::vector<std::pair<std::string, Matrix>> periods;
    for (auto& ins : spec.insertions) {
        if (ins.kappa.empty()) throw Error("model " + spec.name + ": insertion " + ins.label + " needs kappa");
        periods.push_back({ins.label, ins.kappa});
    }
    if (spec.c2_kappa) periods.push_back({"c2", *spec.c2_kappa});
    std::vector<GenusZeroBlock> blocks(periods.size());
    parallel_for(periods.size(), [&](size_t k) {
        LogSeries Pi = double_log_combination(B, spec.operators, periods[k].second);
        blocks[k].insertion = periods[k].first;
        blocks[k].N = table_from_series(two_point_function(Pi, B.X0, *res.mirror));
    });
    res.genus0 = std::move(blocks);
}

}  // namespace

RunResult run_model(const ModelSpec& spec, int max_degree) {
    RunResult res;
    res.model = spec;
    res.truncation = max_degree > 0 ? max_degree : spec.default_degree;
    res.ring = make_ring(spec.weights, res.truncation);
    const Ring& R = *res.ring;

    if (spec.kind == "pf") pf_pipeline(res);
    else closed_forms(res);

    for (auto& g : res.genus0) {
        g.n = invert_genus0(g.N, 1, R);
        if (!same_table(forward_genus0(g.n, 1, R), g.N)) res.checks.round_trip = false;
        note_non_integral(res.checks, "n0[" + g.insertion + "]", g.n);
    }
    if (spec.c2_kappa) {
        res.nc2 = res.genus0_for("c2").n;
    } else if (spec.c2_factor) {
        res.nc2 = scaled_table(res.genus0.front().n, *spec.c2_factor);
        res.genus0.push_back({"c2", forward_genus0(res.nc2, 1, R), res.nc2});
    }

    if (!spec.gram.empty()) {
        MeetingInput in;
        for (auto& ins : spec.insertions) in.nS.push_back(res.genus0_for(ins.label).n);
        in.ginv = invert_matrix(spec.gram);
        in.nc2 = res.nc2;
        res.meeting.resize(spec.conventions.size());
        parallel_for(spec.conventions.size(), [&](size_t k) {
            res.meeting[k].convention = spec.conventions[k].name;
            res.meeting[k].m = meeting_invariants(in, spec.conventions[k], R);
        });
    }

    if (spec.kind == "pf" && spec.f1) res.f1 = f1_series(*res.basis, *res.mirror, *spec.f1);
    if (res.f1 && !spec.gram.empty()) {
        res.N1 = genus1_table(res, *res.f1, res.n1);
        const auto& conv = spec.convention(spec.genus1_convention);
        Table fwd = forward_genus1(res.n1, scaled_table(res.nc2, conv.scale), res.meeting_for(conv.name).m, R);
        if (!same_table(fwd, res.N1)) res.checks.round_trip = false;
        note_non_integral(res.checks, "n1", res.n1);
        res.checks.limit_infinity = res.f1->limit_ok;
    }
    for (auto& v : spec.f1_variants) {
        if (spec.kind != "pf" || !spec.f1) break;
        F1Spec fs = *spec.f1;
        fs.a = v.a;
        if (!v.logz.empty()) {
            fs.logz = v.logz;
            fs.solve_logz = false;
        }
        F1VariantResult vr{v, f1_series(*res.basis, *res.mirror, fs), {}, {}};
        vr.N1 = genus1_table(res, vr.f1, vr.n1);
        res.variants.push_back(std::move(vr));
    }
    return res;
}

namespace {

// Integers too large for a JSON number are emitted through placeholders and
// substituted into the dumped text.
struct BigInts {
    std::vector<std::string> digits;
    json value(const Q& x) {
        if (!is_integer(x)) return to_string(x);
        const Z& z = x.get_num();
        if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
        digits.push_back(z.get_str());
        return "\x01" + std::to_string(digits.size() - 1) + "\x01";
    }
    std::string dump(const json& j, int indent) const {
        std::string s = j.dump(indent);
        std::string out;
        out.reserve(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            // placeholders appear as "\u0001<k>\u0001" in the dump
            if (s.compare(i, 7, "\"\\u0001") == 0) {
                size_t e = s.find("\\u0001\"", i + 7);
                size_t k = std::stoul(s.substr(i + 7, e - i - 7));
                out += digits.at(k);
                i = e + 6;
            } else {
                out += s[i];
            }
        }
        return out;
    }
};

json jexp(const Exp& e) { return json(e); }

std::vector<Exp> classes(const Ring& R) {
    std::vector<Exp> out;
    for (size_t k = 1; k < R.size(); ++k) out.push_back(R.mono(k));
    return out;
}

json genus0_json(const RunResult& r, BigInts& big, bool with_N, bool with_n) {
    json a = json::array();
    for (auto& g : r.genus0)
        for (auto& b : classes(*r.ring)) {
            json e{{"beta", jexp(b)}, {"insertion", g.insertion}};
            if (with_N) e["N"] = to_string(lookup(g.N, b));
            if (with_n) e["n"] = big.value(lookup(g.n, b));
            a.push_back(e);
        }
    return a;
}

json genus1_json(const RunResult& r, const Table& N1, const Table& n1, BigInts& big, bool with_N, bool with_n) {
    json a = json::array();
    if (!r.f1) return a;
    for (auto& b : classes(*r.ring)) {
        json e{{"beta", jexp(b)}};
        if (with_N) e["N"] = to_string(lookup(N1, b));
        if (with_n) e["n"] = big.value(lookup(n1, b));
        a.push_back(e);
    }
    return a;
}

json meeting_json(const RunResult& r) {
    json a = json::array();
    for (auto& blk : r.meeting)
        for (auto& [k, v] : blk.m)
            a.push_back({{"beta1", jexp(k.first)}, {"beta2", jexp(k.second)}, {"m", to_string(v)}, {"convention", blk.convention}});
    return a;
}

json qlist(const std::vector<Q>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_string(x));
    return a;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json f1_json(const RunResult& r, BigInts& big) {
    if (!r.f1) return nullptr;
    json f{{"genus1_convention", r.model.genus1_convention}};
    if (r.model.f1) {
        f["a"] = to_string(r.model.f1->a);
        f["logz"] = qlist(r.f1->logz);
        f["linear"] = qlist(r.f1->linear);
        f["expected"] = qlist(r.f1->expected);
        f["limit_ok"] = opt_bool(r.f1->limit_ok);
    }
    json vs = json::array();
    for (auto& v : r.variants)
        vs.push_back({{"name", v.variant.name},
                      {"a", to_string(v.variant.a)},
                      {"logz", qlist(v.f1.logz)},
                      {"linear", qlist(v.f1.linear)},
                      {"limit_ok", opt_bool(v.f1.limit_ok)},
                      {"genus1", genus1_json(r, v.N1, v.n1, big, true, true)}});
    f["variants"] = vs;
    return f;
}

json checks_json(const Checks& c) {
    return {{"limit_infinity", opt_bool(c.limit_infinity)},
            {"integrality", c.integrality},
            {"round_trip", c.round_trip},
            {"residuals", c.residuals},
            {"non_integral", c.non_integral}};
}

json mirror_json(const RunResult& r) {
    json a = json::array();
    if (!r.mirror) return a;
    for (int i = 0; i < r.model.r; ++i) {
        Series z = r.mirror->z(i);
        json terms = json::array();
        for (size_t k = 1; k < z.size(); ++k)
            if (sgn(z[k])) terms.push_back({{"beta", jexp(r.ring->mono(k))}, {"c", to_string(z[k])}});
        a.push_back({{"index", i}, {"z_of_q", terms}});
    }
    return a;
}

std::string beta_text(const Exp& b) { return "\"" + exp_string(b) + "\""; }

}  // namespace

std::string render_json(const RunResult& r) {
    BigInts big;
    json j{{"model", r.model.name},
           {"truncation", r.truncation},
           {"weights", r.model.weights},
           {"genus0", genus0_json(r, big, true, true)},
           {"genus1", genus1_json(r, r.N1, r.n1, big, true, true)},
           {"meeting", meeting_json(r)},
           {"checks", checks_json(r.checks)},
           {"f1", f1_json(r, big)},
           {"mirror_map", mirror_json(r)}};
    return big.dump(j, 2) + "\n";
}

std::string render_csv(const RunResult& r) {
    std::ostringstream o;
    o << "kind,insertion,convention,beta,beta2,N,n\n";
    for (auto& g : r.genus0)
        for (auto& b : classes(*r.ring))
            o << "genus0," << g.insertion << ",," << beta_text(b) << ",," << to_string(lookup(g.N, b)) << ","
              << lookup(g.n, b).get_str() << "\n";
    if (r.f1)
        for (auto& b : classes(*r.ring))
            o << "genus1,,," << beta_text(b) << ",," << to_string(lookup(r.N1, b)) << "," << lookup(r.n1, b).get_str() << "\n";
    for (auto& blk : r.meeting)
        for (auto& [k, v] : blk.m)
            o << "meeting,," << blk.convention << "," << beta_text(k.first) << "," << beta_text(k.second) << ","
              << to_string(v) << ",\n";
    return o.str();
}

namespace {

void grid(std::ostringstream& o, const std::string& title, const Table& t, const Ring& R) {
    o << title << "\n";
    if (R.r() == 1) {
        for (int d = 1; d <= R.D(); ++d) o << std::setw(4) << d << "  " << lookup(t, {d}).get_str() << "\n";
    } else if (R.r() == 2) {
        int m0 = 0, m1 = 0;
        for (size_t k = 0; k < R.size(); ++k) {
            m0 = std::max(m0, R.mono(k)[0]);
            m1 = std::max(m1, R.mono(k)[1]);
        }
        std::vector<std::vector<std::string>> cells(m0 + 1, std::vector<std::string>(m1 + 1));
        size_t w = 1;
        for (int i = 0; i <= m0; ++i)
            for (int j = 0; j <= m1; ++j) {
                Exp b{i, j};
                cells[i][j] = (i == 0 && j == 0) ? "*" : R.index(b) < 0 ? "." : lookup(t, b).get_str();
                w = std::max(w, cells[i][j].size());
            }
        o << "d1\\d2";
        for (int j = 0; j <= m1; ++j) o << " " << std::setw(static_cast<int>(w)) << j;
        o << "\n";
        for (int i = 0; i <= m0; ++i) {
            o << std::setw(5) << i;
            for (int j = 0; j <= m1; ++j) o << " " << std::setw(static_cast<int>(w)) << cells[i][j];
            o << "\n";
        }
    } else {
        for (auto& [b, v] : t) o << "  (" << exp_string(b) << ")  " << v.get_str() << "\n";
    }
    o << "\n";
}

}  // namespace

std::string render_table(const RunResult& r) {
    std::ostringstream o;
    o << r.model.name << "  truncation " << r.truncation << "\n\n";
    for (auto& g : r.genus0) grid(o, "n_0(" + g.insertion + ")", g.n, *r.ring);
    if (r.f1) grid(o, "n_1", r.n1, *r.ring);
    for (auto& blk : r.meeting) {
        o << "m [" << blk.convention << "]\n";
        for (auto& [k, v] : blk.m)
            if (k.first <= k.second) o << "  (" << exp_string(k.first) << ") (" << exp_string(k.second) << ")  " << v.get_str() << "\n";
        o << "\n";
    }
    if (r.f1 && r.model.f1) {
        o << "F1 t-linear coefficients:";
        for (auto& x : r.f1->linear) o << " " << x.get_str();
        o << "\n";
    }
    for (auto& v : r.variants) {
        o << "F1 variant " << v.variant.name << " (a = " << v.variant.a.get_str() << ") t-linear:";
        for (auto& x : v.f1.linear) o << " " << x.get_str();
        o << "\n";
    }
    auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
    o << "checks: integrality " << yn(r.checks.integrality) << ", round trip " << yn(r.checks.round_trip) << ", residuals "
      << yn(r.checks.residuals) << ", limit "
      << (r.checks.limit_infinity ? yn(*r.checks.limit_infinity) : "n/a") << "\n";
    return o.str();
}

std::string render_export(const RunResult& r, const std::string& what, const std::string& fmt) {
    if (fmt != "json" && fmt != "csv") throw Error("unknown export format '" + fmt + "'");
    if (what != "gw" && what != "bps" && what != "meeting" && what != "f1") throw Error("unknown export table '" + what + "'");
    if (fmt == "json") {
        BigInts big;
        json j{{"model", r.model.name}, {"truncation", r.truncation}, {"weights", r.model.weights}};
        if (what == "gw" || what == "bps") {
            bool gw = what == "gw";
            j["genus0"] = genus0_json(r, big, gw, !gw);
            j["genus1"] = genus1_json(r, r.N1, r.n1, big, gw, !gw);
        } else if (what == "meeting") {
            j["meeting"] = meeting_json(r);
        } else {
            j["f1"] = f1_json(r, big);
            j["genus1"] = genus1_json(r, r.N1, r.n1, big, true, false);
        }
        return big.dump(j, 2) + "\n";
    }
    std::ostringstream o;
    if (what == "gw" || what == "bps") {
        bool gw = what == "gw";
        o << "genus,insertion,beta," << (gw ? "N" : "n") << "\n";
        for (auto& g : r.genus0)
            for (auto& b : classes(*r.ring))
                o << "0," << g.insertion << "," << beta_text(b) << ","
                  << (gw ? to_string(lookup(g.N, b)) : lookup(g.n, b).get_str()) << "\n";
        if (r.f1)
            for (auto& b : classes(*r.ring))
                o << "1,," << beta_text(b) << "," << (gw ? to_string(lookup(r.N1, b)) : lookup(r.n1, b).get_str()) << "\n";
    } else if (what == "meeting") {
        o << "convention,beta1,beta2,m\n";
        for (auto& blk : r.meeting)
            for (auto& [k, v] : blk.m) o << blk.convention << "," << beta_text(k.first) << "," << beta_text(k.second) << "," << to_string(v) << "\n";
    } else {
        o << "variant,a,beta,N1\n";
        std::string a = r.model.f1 ? r.model.f1->a.get_str() : "";
        if (r.f1)
            for (auto& b : classes(*r.ring)) o << "main," << a << "," << beta_text(b) << "," << to_string(lookup(r.N1, b)) << "\n";
        for (auto& v : r.variants)
            for (auto& b : classes(*r.ring))
                o << v.variant.name << "," << v.variant.a.get_str() << "," << beta_text(b) << "," << to_string(lookup(v.N1, b)) << "\n";
    }
    return o.str();
}

bool CheckReport::passed() const {
    return failures == 0 && checks.integrality && checks.round_trip && checks.residuals && checks.limit_infinity.value_or(true);
}

std::string CheckReport::json() const {
    BigInts big;
    nlohmann::json fails = nlohmann::json::array();
    for (auto& e : entries) {
        if (e.ok) continue;
        nlohmann::json f{{"block", e.block}, {"beta", jexp(e.beta)}, {"expected", big.value(e.expected)}, {"actual", big.value(e.actual)}};
        if (!e.beta2.empty()) f["beta2"] = jexp(e.beta2);
        fails.push_back(f);
    }
    nlohmann::json j{{"model", model},
                     {"truncation", truncation},
                     {"passed", passed()},
                     {"compared", entries.size()},
                     {"mismatches", fails},
                     {"checks", checks_json(checks)},
                     {"notes", notes}};
    return big.dump(j, 2) + "\n";
}

namespace {

size_t compare_n1(const Table& n1, const Golden& g, const Ring& R) {
    size_t bad = 0;
    for (auto& b : g.blocks)
        if (b.kind == "n1")
            for (auto& [beta, v] : b.cells)
                if (R.index(beta) >= 0 && lookup(n1, beta) != v) ++bad;
    return bad;
}

}  // namespace

CheckReport check_model(const RunResult& r, const Golden& g) {
    CheckReport rep;
    rep.model = r.model.name;
    rep.truncation = r.truncation;
    rep.checks = r.checks;
    const Ring& R = *r.ring;
    auto add = [&](const std::string& block, const Exp& b, const Exp& b2, const Q& expected, const Q& actual) {
        CheckEntry e{block, b, b2, expected, actual, expected == actual};
        if (!e.ok) ++rep.failures;
        rep.entries.push_back(std::move(e));
    };
    for (auto& blk : g.blocks) {
        if (blk.kind == "n0") {
            const auto& t = r.genus0_for(blk.insertion).n;
            for (auto& [b, v] : blk.cells)
                if (R.index(b) >= 0) add("n0[" + blk.insertion + "]", b, {}, v, lookup(t, b));
        } else if (blk.kind == "n1") {
            for (auto& [b, v] : blk.cells)
                if (R.index(b) >= 0) add("n1", b, {}, v, lookup(r.n1, b));
        } else if (blk.kind == "meeting") {
            const auto& m = r.meeting_for(blk.convention).m;
            for (auto& [b1, b2, v] : blk.pairs) {
                if (R.degree(b1) + R.degree(b2) > R.D()) continue;
                auto it = m.find({b1, b2});
                add("meeting[" + blk.convention + "]", b1, b2, v, it == m.end() ? Q(0) : it->second);
            }
        } else if (blk.kind == "mirror_z" || blk.kind == "single_log") {
            if (!r.mirror) throw Error("golden " + g.model + ": no mirror map for a closed-form model");
            Series s = blk.kind == "mirror_z" ? r.mirror->z(blk.index) : r.basis->S.at(blk.index);
            for (auto& [b, v] : blk.cells)
                if (R.index(b) >= 0) add(blk.kind + "[" + std::to_string(blk.index) + "]", b, {}, v, s.coeff(b));
        }
    }
    if (r.f1 && r.model.f1) {
        std::ostringstream o;
        o << "F1 t-linear coefficients";
        for (auto& x : r.f1->linear) o << " " << x.get_str();
        o << ", expected from int c3 ^ J_i:";
        for (auto& x : r.f1->expected) o << " " << x.get_str();
        rep.notes.push_back(o.str());
    }
    for (auto& v : r.variants) {
        std::ostringstream o;
        o << "F1 variant " << v.variant.name << " (a = " << v.variant.a.get_str() << "): limit "
          << (v.f1.limit_ok ? (*v.f1.limit_ok ? "ok" : "fails") : "n/a") << ", " << compare_n1(v.n1, g, R)
          << " genus-1 reference cells differ";
        rep.notes.push_back(o.str());
    }
    return rep;
}

CheckReport check_model(const std::string& name) {
    const ModelSpec& spec = builtin_model(name);
    const Golden* g = builtin_golden(name);
    if (!g) throw Error("no reference tables for model '" + name + "'");
    return check_model(run_model(spec, std::max(g->truncation, 1)), *g);
}

}  // namespace cy4

#include "cy4/cy4.h"

#include "cy4/engine.hpp"
#include "cy4/parallel.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>

struct cy4_session {
    cy4::ModelSpec spec;
    std::unique_ptr<cy4::RunResult> result;
};

namespace {

thread_local std::string last_error;

cy4_status fail(cy4_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
cy4_status guarded(cy4_status on_error, F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const std::bad_alloc&) {
        return fail(CY4_ERR_COMPUTE, "out of memory");
    } catch (const std::exception& e) {
        return fail(on_error, e.what());
    }
}

}  // namespace

extern "C" {

const char* cy4_version(void) { return "1.0.0"; }

const char* cy4_last_error(void) { return last_error.c_str(); }

void cy4_free(char* s) { std::free(s); }

void cy4_set_threads(int n) { cy4::set_thread_count(n); }

size_t cy4_model_count(void) { return cy4::builtin_model_names().size(); }

const char* cy4_model_name(size_t i) {
    auto& n = cy4::builtin_model_names();
    return i < n.size() ? n[i].c_str() : nullptr;
}

const char* cy4_model_description(size_t i) {
    auto& n = cy4::builtin_model_names();
    if (i >= n.size()) return nullptr;
    try {
        return cy4::builtin_model(n[i]).description.c_str();
    } catch (const std::exception& e) {
        last_error = e.what();
        return nullptr;
    }
}

cy4_status cy4_session_open(const char* name, cy4_session** out) {
    if (!name || !out) return fail(CY4_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    std::string n(name);
    cy4_status st = guarded(CY4_ERR_MODEL_FILE, [&] {
        auto s = std::make_unique<cy4_session>();
        if (cy4::is_builtin_model(n)) {
            s->spec = cy4::builtin_model(n);
        } else if (std::ifstream(n).good()) {
            s->spec = cy4::load_model_file(n);
        } else {
            return fail(CY4_ERR_UNKNOWN_MODEL, "unknown model '" + n + "' (not a built-in name or readable file)");
        }
        *out = s.release();
        return CY4_OK;
    });
    return st;
}

void cy4_session_close(cy4_session* s) { delete s; }

cy4_status cy4_session_run(cy4_session* s, int max_degree) {
    if (!s) return fail(CY4_ERR_ARGUMENT, "null session");
    return guarded(CY4_ERR_COMPUTE, [&] {
        s->result = std::make_unique<cy4::RunResult>(cy4::run_model(s->spec, max_degree));
        return CY4_OK;
    });
}

cy4_status cy4_session_render(cy4_session* s, const char* what, const char* fmt, char** out) {
    if (!s || !what || !fmt || !out) return fail(CY4_ERR_ARGUMENT, "null argument");
    if (!s->result) return fail(CY4_ERR_NOT_RUN, "session has not been run");
    return guarded(CY4_ERR_ARGUMENT, [&] {
        std::string w(what), f(fmt), text;
        if (w == "all") {
            if (f == "json") text = cy4::render_json(*s->result);
            else if (f == "csv") text = cy4::render_csv(*s->result);
            else if (f == "table") text = cy4::render_table(*s->result);
            else return fail(CY4_ERR_ARGUMENT, "unknown output format '" + f + "'");
        } else {
            text = cy4::render_export(*s->result, w, f);
        }
        *out = dup(text);
        return CY4_OK;
    });
}

cy4_status cy4_session_export(cy4_session* s, const char* what, const char* fmt, const char* path) {
    if (!path) return fail(CY4_ERR_ARGUMENT, "null path");
    char* text = nullptr;
    cy4_status st = cy4_session_render(s, what, fmt, &text);
    if (st != CY4_OK) return st;
    std::unique_ptr<char, void (*)(char*)> hold(text, cy4_free);
    std::ofstream o(path, std::ios::binary);
    if (!o) return fail(CY4_ERR_IO, std::string("cannot write ") + path);
    o << text;
    o.close();
    if (!o) return fail(CY4_ERR_IO, std::string("write failed for ") + path);
    return CY4_OK;
}

cy4_status cy4_session_check(cy4_session* s, char** report_json, int* passed) {
    if (!s || !report_json || !passed) return fail(CY4_ERR_ARGUMENT, "null argument");
    return guarded(CY4_ERR_COMPUTE, [&] {
        const cy4::Golden* g = cy4::builtin_golden(s->spec.name);
        if (!g) return fail(CY4_ERR_NO_REFERENCE, "no reference tables for model '" + s->spec.name + "'");
        s->result = std::make_unique<cy4::RunResult>(cy4::run_model(s->spec, g->truncation));
        auto rep = cy4::check_model(*s->result, *g);
        *passed = rep.passed() ? 1 : 0;
        *report_json = dup(rep.json());
        return CY4_OK;
    });
}

}  // extern "C"

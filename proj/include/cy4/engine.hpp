#pragma once
// End-to-end pipeline per model, serialization and reference checks.

#include "cy4/golden.hpp"
#include "cy4/models.hpp"

#include <optional>

namespace cy4 {

struct GenusZeroBlock {
    std::string insertion;
    Table N;  // Gromov-Witten
    Table n;  // integer invariants
};

struct MeetingBlock {
    std::string convention;
    PairTable m;
};

struct F1VariantResult {
    F1Variant variant;
    F1Result f1;
    Table N1;
    Table n1;
};

struct Checks {
    std::optional<bool> limit_infinity;  // empty when the model has no F1 data
    bool integrality = true;
    bool round_trip = true;
    bool residuals = true;
    std::vector<std::string> non_integral;  // "n0[A1](1,2)" style labels
};

struct RunResult {
    ModelSpec model;
    int truncation = 0;
    RingPtr ring;
    std::optional<FrobeniusBasis> basis;
    std::optional<MirrorMap> mirror;
    std::vector<GenusZeroBlock> genus0;  // insertions, then c2
    Table nc2;                           // n_0(c_2)
    std::vector<MeetingBlock> meeting;   // one per convention
    std::optional<F1Result> f1;
    Table N1, n1;
    std::vector<F1VariantResult> variants;
    Checks checks;

    const MeetingBlock& meeting_for(const std::string& convention) const;
    const GenusZeroBlock& genus0_for(const std::string& insertion) const;
};

// max_degree <= 0 uses the model default
RunResult run_model(const ModelSpec& spec, int max_degree = 0);

std::string render_json(const RunResult& r);
std::string render_csv(const RunResult& r);
std::string render_table(const RunResult& r);
// what: gw | bps | meeting | f1; fmt: json | csv
std::string render_export(const RunResult& r, const std::string& what, const std::string& fmt);

struct CheckEntry {
    std::string block;  // "n0[A1]", "n1", "meeting[no_c2]", "mirror_z[0]", ...
    Exp beta, beta2;
    Q expected, actual;
    bool ok = false;
};

struct CheckReport {
    std::string model;
    int truncation = 0;
    std::vector<CheckEntry> entries;
    size_t failures = 0;
    Checks checks;
    std::vector<std::string> notes;
    bool passed() const;
    std::string json() const;
};

CheckReport check_model(const RunResult& r, const Golden& g);
// runs at the reference truncation
CheckReport check_model(const std::string& name);

}  // namespace cy4

#pragma once
// Model specifications: operators, intersection data, F1 constants, pairing.

#include "cy4/anomaly.hpp"
#include "cy4/bps.hpp"

namespace cy4 {

struct Insertion {
    std::string label;
    Matrix kappa;  // int J_i J_j A
};

struct F1Variant {
    std::string name;
    Q a;
    std::vector<Q> logz;  // empty: inherit from the main spec
};

struct ModelSpec {
    std::string name;
    std::string description;
    std::string kind = "pf";  // pf | closed_p2 | closed_p1p1
    int r = 1;
    std::vector<int> weights;
    int default_degree = 8;
    int rho_order = 3;
    std::vector<PFOperator> operators;
    std::vector<Insertion> insertions;
    std::optional<Matrix> c2_kappa;   // int J_i J_j c_2
    std::optional<Q> c2_factor;       // n_0(c_2) = factor * n_0(first insertion)
    Matrix gram;                      // g_ij on the insertion basis
    std::vector<MeetingConvention> conventions;
    std::string genus1_convention;
    std::optional<F1Spec> f1;
    std::vector<F1Variant> f1_variants;
    Q euler;                          // int c_4, 0 when not given

    const MeetingConvention& convention(const std::string& name) const;
};

ModelSpec parse_model(const std::string& yaml_text);
ModelSpec load_model_file(const std::string& path);

const std::vector<std::string>& builtin_model_names();
const ModelSpec& builtin_model(const std::string& name);
bool is_builtin_model(const std::string& name);

}  // namespace cy4

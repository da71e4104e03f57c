#pragma once
// Reference tables for regression checks.

#include "cy4/qseries.hpp"

#include <tuple>

namespace cy4 {

struct GoldenBlock {
    std::string kind;        // n0 | n1 | meeting | mirror_z | single_log
    std::string insertion;   // n0
    std::string convention;  // meeting
    int index = 0;           // mirror_z, single_log
    std::vector<std::pair<Exp, Q>> cells;
    std::vector<std::tuple<Exp, Exp, Q>> pairs;
};

struct Golden {
    std::string model;
    int truncation = 0;
    std::vector<GoldenBlock> blocks;
};

// One-parameter blocks use `values` (d = 1, 2, ...); two-parameter blocks use
// `grid` (rows d1 = 0, 1, ..., columns d2 = 0, 1, ...; null cells and beta = 0 skipped).
Golden parse_golden(const std::string& yaml_text);
const Golden* builtin_golden(const std::string& model);

}  // namespace cy4

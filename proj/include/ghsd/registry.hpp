#pragma once

#include "ghsd/mask.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ghsd {

// Facts a registry entry is expected to reproduce; -1 / empty means unchecked.
struct ExpectedFacts {
    int sr_exact = -1;
    int sr_at_least = -1;
    int lpm_exact = -1;
    int lpm_at_least = -1;
    double sm2 = 0.0;
    double sm2_tol = 0.0;    // 0 disables the smoothness expectation
    int interpolatory = -1;  // 1: verdict must hold, 0: must not
    std::string spline_id;   // printed closed-form basis, when available
};

struct ExampleRecord {
    std::string id;
    std::string note;
    std::vector<std::string> params;
    std::vector<Q> defaults;
    std::function<MaskFile(const std::vector<Q>&)> build;
    ExpectedFacts expected;
};

const std::vector<ExampleRecord>& example_registry();

// nullptr when the id is unknown.
const ExampleRecord* find_example(const std::string& id);

// Builds the example with named parameter overrides applied to the defaults.
MaskFile build_example(const std::string& id,
                       const std::vector<std::pair<std::string, Q>>& overrides = {});

}  // namespace ghsd

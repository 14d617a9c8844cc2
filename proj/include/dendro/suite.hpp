#pragma once

#include <string>
#include <vector>

#include "dendro/optable.hpp"

#include "json.hpp"

namespace dendro {

/// Declarative description of a verification run: the model, its generator
/// alphabet, the tuple size budget, the weights (symbolic or rational) and
/// the list of suites to execute.
struct SuiteConfig {
    std::string model = "dend";  // qshuffle | tridend | dend
    std::vector<std::string> generators = {"x"};
    int max_size = 4;
    unsigned max_order = 32;
    std::string lam = "sym";
    std::string q = "sym";
    std::vector<std::string> suites = {"axioms"};
    bool mutate_swap_prec_succ = false;  // self-test switch: breaks the model on purpose
    CheckPolicy policy = CheckPolicy::Parallel;
};

SuiteConfig suite_config_from_json(const nlohmann::json& j);

struct SuiteOutcome {
    bool ok = true;
    std::vector<nlohmann::ordered_json> lines;
};

/// Runs the named suites (axioms, leibniz, commutativity, universal, induced,
/// koszul, counts); one JSON object per check, deterministic order.
SuiteOutcome run_suite(const SuiteConfig& config);

Scalar scalar_param(const std::string& text, bool is_lam);

}  // namespace dendro

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dendro/basis_sets.hpp"
#include "dendro/eval.hpp"
#include "dendro/koszul.hpp"
#include "dendro/suite.hpp"

namespace {

using dendro::Scalar;
using json = nlohmann::ordered_json;

bool verbose() {
    const char* v = std::getenv("DENDRO_VERBOSE");
    return v != nullptr && *v != '\0';
}

struct CommonOpts {
    std::string model = "dend";
    std::string lam = "sym";
    std::string q = "sym";
    int max_size = 4;
    unsigned max_order = dendro::kDefaultMaxOrder;
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_model = true) {
    if (with_model) cmd->add_option("--model", o.model, "model: qshuffle, tridend or dend");
    cmd->add_option("--lam", o.lam, "weight lam: 'sym' or a rational like -1/2");
    cmd->add_option("--q", o.q, "weight q: 'sym' or a rational");
    cmd->add_option("--max-size", o.max_size, "total size budget for test tuples");
    cmd->add_option("--max-order", o.max_order, "maximum derivation order");
    cmd->add_flag("--json", o.as_json, "emit JSON lines");
}

dendro::Model make_model(const CommonOpts& o) {
    return dendro::Model::make(dendro::model_kind_from_string(o.model),
                               dendro::scalar_param(o.lam, true), dendro::scalar_param(o.q, false),
                               o.max_order);
}

std::map<std::string, std::string> parse_bindings(const std::vector<std::string>& binds) {
    std::map<std::string, std::string> out;
    for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos)
            throw dendro::ConfigError("binding '" + b + "' is not of the form sym=value");
        out[b.substr(0, eq)] = b.substr(eq + 1);
    }
    return out;
}

int emit_suite_outcome(const dendro::SuiteOutcome& outcome, bool as_json) {
    for (const auto& line : outcome.lines) {
        if (as_json) {
            std::cout << line.dump() << "\n";
        } else {
            std::cout << "[" << line.at("status").get<std::string>() << "] "
                      << line.at("suite").get<std::string>() << ": "
                      << line.at("check").get<std::string>();
            if (line.contains("witness"))
                std::cout << "  witness: " << line.at("witness").get<std::string>();
            std::cout << "\n";
        }
    }
    return outcome.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in free weighted differential (q-tri)dendriform algebras"};
    app.require_subcommand(1);

    // --- eval / derive ---
    CommonOpts eval_opts;
    std::string eval_text;
    std::vector<std::string> eval_binds;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression in a model");
    eval_cmd->add_option("expr", eval_text, "expression, e.g. \"x <: y\"")->required();
    eval_cmd->add_option("--bind", eval_binds, "symbol binding sym=element (repeatable)");
    add_common(eval_cmd, eval_opts);

    CommonOpts derive_opts;
    std::string derive_text;
    std::vector<std::string> derive_binds;
    int derive_times = 1;
    CLI::App* derive_cmd = app.add_subcommand("derive", "evaluate and apply the model derivation");
    derive_cmd->add_option("expr", derive_text, "expression")->required();
    derive_cmd->add_option("--bind", derive_binds, "symbol binding sym=element (repeatable)");
    derive_cmd->add_option("--times", derive_times, "how many times to derive");
    add_common(derive_cmd, derive_opts);

    // --- enumerate ---
    CommonOpts enum_opts;
    int enum_leaves = 3;
    std::vector<std::string> enum_gens = {"x"};
    unsigned enum_alpha_order = 0;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list basis trees with n leaves");
    enum_cmd->add_option("-n,--leaves", enum_leaves, "number of leaves")->required();
    enum_cmd->add_option("--gens", enum_gens, "generator names")->delimiter(',');
    enum_cmd->add_option("--alphabet-order", enum_alpha_order, "orders 0..k in the alphabet");
    add_common(enum_cmd, enum_opts);

    // --- suite ---
    CommonOpts suite_opts;
    std::string suite_config_path;
    std::vector<std::string> suite_names;
    std::vector<std::string> suite_gens = {"x"};
    std::string suite_mutate;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run verification suites");
    suite_cmd->add_option("--config", suite_config_path, "JSON config file");
    suite_cmd->add_option("--suites", suite_names, "suite names")->delimiter(',');
    suite_cmd->add_option("--gens", suite_gens, "generator names")->delimiter(',');
    suite_cmd->add_option("--mutate", suite_mutate,
                          "self-test mutation: swap-prec-succ breaks the model on purpose");
    add_common(suite_cmd, suite_opts);

    // --- koszul ---
    CommonOpts koszul_opts;
    std::string koszul_dual_q;
    CLI::App* koszul_cmd = app.add_subcommand("koszul", "duality pairing and annihilator checks");
    koszul_cmd->add_option("--dual-q", koszul_dual_q,
                           "override the dual parameter (default 1/q; for mutation demos)");
    add_common(koszul_cmd, koszul_opts, false);

    // --- universal ---
    CommonOpts uni_opts;
    std::vector<std::string> uni_gens = {"x"};
    CLI::App* uni_cmd = app.add_subcommand("universal", "universal-map checks for a model");
    uni_cmd->add_option("--gens", uni_gens, "generator names")->delimiter(',');
    add_common(uni_cmd, uni_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd || *derive_cmd) {
            bool deriving = static_cast<bool>(*derive_cmd);
            const CommonOpts& o = deriving ? derive_opts : eval_opts;
            const std::string& text = deriving ? derive_text : eval_text;
            dendro::Model model = make_model(o);
            dendro::ExprPtr e = dendro::parse_expr(text);
            if (deriving)
                for (int i = 0; i < derive_times; ++i) e = dendro::der(e);
            auto bindings = parse_bindings(deriving ? derive_binds : eval_binds);
            dendro::EvalResult res = dendro::eval_expr_in_model(e, model, bindings);
            if (o.as_json) {
                json out;
                out["expr"] = dendro::print_expr(e);
                out["model"] = o.model;
                out["value"] = res.text;
                out["terms"] = res.json;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << res.text << "\n";
            }
            return 0;
        }

        if (*enum_cmd) {
            const CommonOpts& o = enum_opts;
            auto alphabet = dendro::make_alphabet(enum_gens, enum_alpha_order);
            json out;
            out["model"] = o.model;
            out["leaves"] = enum_leaves;
            json items = json::array();
            std::size_t count = 0;
            std::string note;
            if (enum_leaves == 1) {
                note = "the 1-leaf tree is the unit and not a basis term";
            } else if (o.model == "tridend") {
                for (const auto& t : dendro::enumerate_schroeder(alphabet, enum_leaves))
                    items.push_back(dendro::serialize(t));
                count = items.size();
            } else if (o.model == "dend") {
                for (const auto& t : dendro::enumerate_binary(alphabet, enum_leaves))
                    items.push_back(dendro::serialize(t));
                count = items.size();
            } else {
                throw dendro::ConfigError("enumerate applies to the tree models only");
            }
            out["count"] = count;
            if (!note.empty()) out["note"] = note;
            out["trees"] = items;
            if (o.as_json) {
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& t : items) std::cout << t.get<std::string>() << "\n";
                std::cout << "count: " << count << (note.empty() ? "" : "  (" + note + ")") << "\n";
            }
            return 0;
        }

        if (*suite_cmd) {
            dendro::SuiteConfig cfg;
            if (!suite_config_path.empty()) {
                std::ifstream in(suite_config_path);
                if (!in) throw dendro::ConfigError("cannot open config file " + suite_config_path);
                nlohmann::json doc;
                try {
                    in >> doc;
                } catch (const nlohmann::json::exception& e) {
                    throw dendro::ConfigError(std::string("bad config JSON: ") + e.what());
                }
                cfg = dendro::suite_config_from_json(doc);
            } else {
                cfg.model = suite_opts.model;
                cfg.generators = suite_gens;
                cfg.max_size = suite_opts.max_size;
                cfg.max_order = suite_opts.max_order;
                cfg.lam = suite_opts.lam;
                cfg.q = suite_opts.q;
                if (!suite_names.empty()) cfg.suites = suite_names;
            }
            if (!suite_mutate.empty()) {
                if (suite_mutate != "swap-prec-succ")
                    throw dendro::ConfigError("unknown mutation '" + suite_mutate + "'");
                cfg.mutate_swap_prec_succ = true;
            }
            if (verbose()) std::cerr << "running " << cfg.suites.size() << " suite(s)\n";
            auto outcome = dendro::run_suite(cfg);
            return emit_suite_outcome(outcome, suite_opts.as_json);
        }

        if (*koszul_cmd) {
            const CommonOpts& o = koszul_opts;
            std::vector<dendro::Rational> qs;
            if (o.q == "sym") {
                qs = {dendro::Rational(1), dendro::Rational(2), dendro::Rational(-1, 2)};
            } else {
                qs = {dendro::rational_from_string(o.q)};
            }
            bool ok = true;
            auto emit = [&](const std::string& name, const dendro::DualityReport& rep) {
                if (!rep.passed()) ok = false;
                if (o.as_json) {
                    json line = dendro::to_json(rep);
                    line["check"] = name;
                    std::cout << line.dump() << "\n";
                } else {
                    std::cout << "[" << (rep.passed() ? "pass" : "fail") << "] " << name
                              << "  dims(space, primal, annihilator, dual) = (" << rep.space_dim
                              << ", " << rep.primal_rank << ", " << rep.annihilator_dim << ", "
                              << rep.dual_rank << ")\n";
                }
            };
            emit("dendriform vs diassociative",
                 dendro::verify_duality(dendro::RelationKind::Dendriform,
                                        dendro::RelationKind::Diassociative, dendro::Rational(0)));
            for (const auto& qv : qs) {
                if (!koszul_dual_q.empty()) {
                    auto primal =
                        dendro::build_relations(dendro::RelationKind::QTridendriform, qv);
                    auto dual = dendro::build_relations(dendro::RelationKind::QTriassociative,
                                                        dendro::rational_from_string(koszul_dual_q));
                    emit("q-tridendriform at q = " + dendro::to_string(qv) +
                             " vs triassociative at " + koszul_dual_q,
                         dendro::duality_report(primal, dual,
                                                dendro::op_names(dendro::RelationKind::QTridendriform),
                                                dendro::op_names(dendro::RelationKind::QTriassociative)));
                } else {
                    emit("q-tridendriform at q = " + dendro::to_string(qv) +
                             " vs triassociative at 1/q",
                         dendro::verify_duality(dendro::RelationKind::QTridendriform,
                                                dendro::RelationKind::QTriassociative, qv));
                }
            }
            return ok ? 0 : 1;
        }

        if (*uni_cmd) {
            dendro::SuiteConfig cfg;
            cfg.model = uni_opts.model;
            cfg.generators = uni_gens;
            cfg.max_size = uni_opts.max_size;
            cfg.max_order = uni_opts.max_order;
            cfg.lam = uni_opts.lam;
            cfg.q = uni_opts.q;
            cfg.suites = {"universal"};
            auto outcome = dendro::run_suite(cfg);
            return emit_suite_outcome(outcome, uni_opts.as_json);
        }
    } catch (const dendro::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dendro::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dendro::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <map>
#include <string>

#include "dendro/dend.hpp"
#include "dendro/expr.hpp"
#include "dendro/tridend.hpp"
#include "dendro/words.hpp"

#include "json.hpp"

namespace dendro {

enum class ModelKind { QShuffle, Tridend, Dend };

ModelKind model_kind_from_string(const std::string& s);

/// One of the three free models, with its weights fixed at construction.
struct Model {
    ModelKind kind = ModelKind::Dend;
    QShuffleAlgebra qs;
    TridendAlgebra tri;
    DendAlgebra den;

    static Model make(ModelKind kind, const Scalar& lam, const Scalar& q, unsigned max_order);
};

struct EvalResult {
    std::string text;
    nlohmann::ordered_json json;
};

/// Evaluates an expression in the model. Bindings map free symbols to model
/// elements given in the model's text form (a tensor word or a serialized
/// tree); an unbound symbol defaults to the order-0 generator of the same
/// name unless allow_default_bindings is off, in which case it raises
/// UnboundSymbol. Atom orders and d(...) apply the model derivation.
EvalResult eval_expr_in_model(const ExprPtr& e, const Model& model,
                              const std::map<std::string, std::string>& bindings = {},
                              bool allow_default_bindings = true);

nlohmann::ordered_json element_json(const TElement& x);
nlohmann::ordered_json element_json(const DTElement& x);
nlohmann::ordered_json element_json(const DDElement& x);

}  // namespace dendro

#include "dendro/eval.hpp"

#include "dendro/errors.hpp"

namespace dendro {

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "qshuffle") return ModelKind::QShuffle;
    if (s == "tridend") return ModelKind::Tridend;
    if (s == "dend") return ModelKind::Dend;
    throw ConfigError("unknown model '" + s + "' (expected qshuffle, tridend or dend)");
}

Model Model::make(ModelKind kind, const Scalar& lam, const Scalar& q, unsigned max_order) {
    Model m;
    m.kind = kind;
    m.qs = QShuffleAlgebra{lam, q, max_order, false};
    m.tri = TridendAlgebra{lam, q, max_order};
    m.den = DendAlgebra{lam, max_order};
    return m;
}

namespace {

// Generic evaluator over an algebra providing prec/succ/star/d and,
// optionally, bullet.
template <class Alg, class Elem, class MakeAtom>
Elem eval_rec(const ExprPtr& e, const Alg& alg, MakeAtom&& make_atom) {
    switch (e->kind) {
        case Expr::Kind::Atom: {
            Elem base = make_atom(e->name);
            for (unsigned i = 0; i < e->order; ++i) base = alg.d(base);
            return base;
        }
        case Expr::Kind::Der:
            return alg.d(eval_rec<Alg, Elem>(e->lhs, alg, make_atom));
        case Expr::Kind::Add:
            return eval_rec<Alg, Elem>(e->lhs, alg, make_atom) +
                   eval_rec<Alg, Elem>(e->rhs, alg, make_atom);
        case Expr::Kind::Sub:
            return eval_rec<Alg, Elem>(e->lhs, alg, make_atom) -
                   eval_rec<Alg, Elem>(e->rhs, alg, make_atom);
        case Expr::Kind::Scale:
            return eval_rec<Alg, Elem>(e->lhs, alg, make_atom).scaled(e->coeff);
        case Expr::Kind::Bin: {
            Elem l = eval_rec<Alg, Elem>(e->lhs, alg, make_atom);
            Elem r = eval_rec<Alg, Elem>(e->rhs, alg, make_atom);
            switch (e->op) {
                case '<': return alg.prec(l, r);
                case '>': return alg.succ(l, r);
                case '*': return alg.star(l, r);
                case '.':
                    if constexpr (requires { alg.bullet(l, r); }) {
                        return alg.bullet(l, r);
                    } else {
                        throw ConfigError("operator '.' is not defined in the dendriform model");
                    }
            }
            throw ConfigError("unknown operator");
        }
    }
    throw ConfigError("malformed expression");
}

}  // namespace

nlohmann::ordered_json element_json(const TElement& x) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [w, c] : x.terms()) {
        nlohmann::ordered_json letters = nlohmann::ordered_json::array();
        for (const auto& m : w.letters) letters.push_back(m.str());
        arr.push_back({{"coeff", c.str()}, {"word", letters}});
    }
    return arr;
}

nlohmann::ordered_json element_json(const DTElement& x) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [t, c] : x.terms()) arr.push_back({{"coeff", c.str()}, {"tree", serialize(t)}});
    return arr;
}

nlohmann::ordered_json element_json(const DDElement& x) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [t, c] : x.terms()) arr.push_back({{"coeff", c.str()}, {"tree", serialize(t)}});
    return arr;
}

EvalResult eval_expr_in_model(const ExprPtr& e, const Model& model,
                              const std::map<std::string, std::string>& bindings,
                              bool allow_default_bindings) {
    auto lookup = [&](const std::string& name) -> const std::string* {
        auto it = bindings.find(name);
        if (it != bindings.end()) return &it->second;
        if (!allow_default_bindings)
            throw UnboundSymbol("symbol '" + name + "' has no binding");
        return nullptr;
    };
    switch (model.kind) {
        case ModelKind::QShuffle: {
            auto make_atom = [&](const std::string& name) -> TElement {
                if (const std::string* b = lookup(name)) return TElement::basis(parse_word(*b));
                return TElement::basis(TensorWord::letter(DiffMonomial::var(name, 0)));
            };
            TElement out = eval_rec<QShuffleAlgebra, TElement>(e, model.qs, make_atom);
            return {render(out), element_json(out)};
        }
        case ModelKind::Tridend: {
            auto make_atom = [&](const std::string& name) -> DTElement {
                if (const std::string* b = lookup(name)) return DTElement::basis(parse_schroeder(*b));
                return TridendAlgebra::gen(name, 0);
            };
            DTElement out = eval_rec<TridendAlgebra, DTElement>(e, model.tri, make_atom);
            return {render(out), element_json(out)};
        }
        case ModelKind::Dend: {
            auto make_atom = [&](const std::string& name) -> DDElement {
                if (const std::string* b = lookup(name)) return DDElement::basis(parse_binary(*b));
                return DendAlgebra::gen(name, 0);
            };
            DDElement out = eval_rec<DendAlgebra, DDElement>(e, model.den, make_atom);
            return {render(out), element_json(out)};
        }
    }
    throw ConfigError("unknown model");
}

}  // namespace dendro

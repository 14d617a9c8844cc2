#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dendro/errors.hpp"

#include "dendro/lincomb.hpp"

#include "json.hpp"

namespace dendro {

/// Formal expression over the variables a, b, c, named binary operations and
/// an optional unary derivation; the building block of identity data.
struct IdExpr {
    enum class Kind { Var, Bin, Der };
    Kind kind = Kind::Var;
    int var = 0;                // Var: 0=a, 1=b, 2=c
    std::string op;             // Bin
    std::vector<IdExpr> kids;   // Bin: 2, Der: 1
};

inline IdExpr V(int i) { return IdExpr{IdExpr::Kind::Var, i, {}, {}}; }
inline IdExpr B(std::string op, IdExpr l, IdExpr r) {
    return IdExpr{IdExpr::Kind::Bin, 0, std::move(op), {std::move(l), std::move(r)}};
}
inline IdExpr D(IdExpr e) { return IdExpr{IdExpr::Kind::Der, 0, {}, {std::move(e)}}; }

struct IdTerm {
    Scalar coeff;
    IdExpr expr;
};

/// A formal identity written as a sum of terms that must vanish; arity is the
/// number of distinct variables it quantifies over (2 or 3).
struct Identity {
    std::string name;
    int arity = 3;
    std::vector<IdTerm> terms;
};

using IdentityList = std::vector<Identity>;

/// Named binary operations over a common element type, with an optional
/// derivation; the operations must be bilinear and pure.
template <class B>
struct OpTable {
    using Elem = LinComb<B>;
    using BinOp = std::function<Elem(const Elem&, const Elem&)>;
    using UnOp = std::function<Elem(const Elem&)>;

    std::map<std::string, BinOp> binary;
    UnOp derivation;  // empty when the table has none
    std::function<std::string(const Elem&)> render;
};

template <class B>
typename OpTable<B>::Elem eval_idexpr(const OpTable<B>& table, const IdExpr& e,
                                      const std::vector<LinComb<B>>& vars) {
    using Elem = typename OpTable<B>::Elem;
    switch (e.kind) {
        case IdExpr::Kind::Var:
            return vars.at(static_cast<std::size_t>(e.var));
        case IdExpr::Kind::Der: {
            if (!table.derivation) throw Error("identity uses a derivation the table lacks");
            return table.derivation(eval_idexpr(table, e.kids[0], vars));
        }
        case IdExpr::Kind::Bin: {
            auto it = table.binary.find(e.op);
            if (it == table.binary.end()) throw Error("identity uses unknown operation '" + e.op + "'");
            Elem l = eval_idexpr(table, e.kids[0], vars);
            Elem r = eval_idexpr(table, e.kids[1], vars);
            return it->second(l, r);
        }
    }
    return {};
}

template <class B>
typename OpTable<B>::Elem eval_identity(const OpTable<B>& table, const Identity& id,
                                        const std::vector<LinComb<B>>& vars) {
    typename OpTable<B>::Elem acc;
    for (const auto& t : id.terms) acc += eval_idexpr(table, t.expr, vars).scaled(t.coeff);
    return acc;
}

/// Checks every operation name an identity list uses exists in the table.
template <class B>
void validate_identities(const OpTable<B>& table, const IdentityList& ids) {
    auto walk = [&](auto&& self, const IdExpr& e) -> void {
        if (e.kind == IdExpr::Kind::Bin && !table.binary.count(e.op))
            throw Error("identity uses unknown operation '" + e.op + "'");
        if (e.kind == IdExpr::Kind::Der && !table.derivation)
            throw Error("identity uses a derivation the table lacks");
        for (const auto& k : e.kids) self(self, k);
    };
    for (const auto& id : ids)
        for (const auto& t : id.terms) walk(walk, t.expr);
}

enum class CheckPolicy { Serial, Parallel };

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::optional<std::string> witness;
    std::optional<std::string> residual;
};

struct CheckReport {
    std::vector<IdentityResult> results;
    bool vacuous = false;
    std::string warning;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
};

nlohmann::ordered_json to_json(const CheckReport& report);

namespace detail {

// Ordered tuples of element indices whose sizes sum to at most max_total.
std::vector<std::vector<std::size_t>> size_bounded_tuples(const std::vector<int>& sizes, int arity,
                                                          long max_total);

}  // namespace detail

/// Evaluates every identity on every ordered tuple drawn from test_elements
/// (restricted to tuples whose total size fits max_total when sizes are
/// given). The report lists identities in order with the first witness tuple
/// on failure; the parallel policy produces the identical report.
template <class B>
CheckReport check_identities(const OpTable<B>& table, const IdentityList& ids,
                             const std::vector<LinComb<B>>& elems,
                             const std::vector<int>& sizes = {},
                             long max_total = std::numeric_limits<long>::max(),
                             CheckPolicy policy = CheckPolicy::Serial) {
    CheckReport report;
    if (elems.empty()) {
        report.vacuous = true;
        report.warning = "empty test set: all identities pass vacuously";
        for (const auto& id : ids) report.results.push_back({id.name, true, {}, {}});
        return report;
    }
    std::vector<int> sz = sizes;
    if (sz.empty()) sz.assign(elems.size(), 0);
    auto run_identity = [&](const Identity& id) -> IdentityResult {
        IdentityResult res{id.name, true, {}, {}};
        auto tuples = detail::size_bounded_tuples(sz, id.arity, max_total);
        const auto n = static_cast<long long>(tuples.size());
        long long first_fail = n;
        if (policy == CheckPolicy::Parallel) {
#ifdef DENDRO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_fail)
#endif
            for (long long i = 0; i < n; ++i) {
                std::vector<LinComb<B>> vars;
                for (auto ix : tuples[static_cast<std::size_t>(i)]) vars.push_back(elems[ix]);
                if (!eval_identity(table, id, vars).is_zero()) first_fail = std::min(first_fail, i);
            }
        } else {
            for (long long i = 0; i < n; ++i) {
                std::vector<LinComb<B>> vars;
                for (auto ix : tuples[static_cast<std::size_t>(i)]) vars.push_back(elems[ix]);
                if (!eval_identity(table, id, vars).is_zero()) {
                    first_fail = i;
                    break;
                }
            }
        }
        if (first_fail < n) {
            res.passed = false;
            std::vector<LinComb<B>> vars;
            std::string witness;
            const char* names = "abc";
            for (std::size_t k = 0; k < tuples[static_cast<std::size_t>(first_fail)].size(); ++k) {
                auto ix = tuples[static_cast<std::size_t>(first_fail)][k];
                vars.push_back(elems[ix]);
                if (k) witness += "; ";
                witness += std::string(1, names[k]) + " = " + table.render(elems[ix]);
            }
            res.witness = witness;
            res.residual = table.render(eval_identity(table, id, vars));
        }
        return res;
    };
    for (const auto& id : ids) report.results.push_back(run_identity(id));
    return report;
}

}  // namespace dendro

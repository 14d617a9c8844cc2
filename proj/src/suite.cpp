#include "dendro/suite.hpp"

#include <algorithm>

#include "dendro/basis_sets.hpp"
#include "dendro/identities.hpp"
#include "dendro/induced.hpp"
#include "dendro/koszul.hpp"
#include "dendro/modeltables.hpp"

namespace dendro {

Scalar scalar_param(const std::string& text, bool is_lam) {
    if (text == "sym") return is_lam ? Scalar::lam() : Scalar::q();
    return Scalar(rational_from_string(text));
}

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
    SuiteConfig c;
    try {
        if (j.contains("model")) c.model = j.at("model").get<std::string>();
        if (j.contains("generators")) c.generators = j.at("generators").get<std::vector<std::string>>();
        if (j.contains("max_size")) c.max_size = j.at("max_size").get<int>();
        if (j.contains("max_order")) c.max_order = j.at("max_order").get<unsigned>();
        if (j.contains("lam")) c.lam = j.at("lam").get<std::string>();
        if (j.contains("q")) c.q = j.at("q").get<std::string>();
        if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad suite config: ") + e.what());
    }
    if (c.max_size < 1) throw ConfigError("max_size must be >= 1");
    if (c.model != "qshuffle" && c.model != "tridend" && c.model != "dend")
        throw ConfigError("unknown model '" + c.model + "'");
    static const std::vector<std::string> known = {"axioms",    "leibniz", "commutativity",
                                                   "universal", "induced", "koszul",
                                                   "counts"};
    for (const auto& s : c.suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw ConfigError("unknown suite '" + s + "'");
    return c;
}

namespace {

using json = nlohmann::ordered_json;

struct Runner {
    const SuiteConfig& cfg;
    SuiteOutcome out;

    Scalar lam() const { return scalar_param(cfg.lam, true); }
    Scalar q() const { return scalar_param(cfg.q, false); }

    void emit(const std::string& suite, const std::string& check, bool pass,
              const json& extra = json::object()) {
        json line;
        line["suite"] = suite;
        line["check"] = check;
        line["status"] = pass ? "pass" : "fail";
        for (auto it = extra.begin(); it != extra.end(); ++it) line[it.key()] = it.value();
        if (!pass) out.ok = false;
        out.lines.push_back(std::move(line));
    }

    void emit_report(const std::string& suite, const CheckReport& rep) {
        for (const auto& r : rep.results) {
            json extra = json::object();
            if (r.witness) extra["witness"] = *r.witness;
            if (r.residual) extra["residual"] = *r.residual;
            if (rep.vacuous) extra["warning"] = rep.warning;
            emit(suite, r.name, r.passed, extra);
        }
    }

    template <class B>
    void maybe_mutate(OpTable<B>& table) const {
        if (!cfg.mutate_swap_prec_succ) return;
        std::swap(table.binary.at("prec"), table.binary.at("succ"));
    }

    // --- model-specific test material -------------------------------------

    std::vector<Generator> alphabet() const { return make_alphabet(cfg.generators, 0); }
    std::vector<DiffMonomial> letters() const { return single_var_letters(cfg.generators, 1); }

    // small prefix of a test set, enough to catch wired-up-wrong hypotheses
    template <class E>
    static std::vector<E> spot_of(const std::vector<E>& elems) {
        return {elems.begin(), elems.begin() + std::min<std::size_t>(elems.size(), 3)};
    }

    int elem_degree_cap(int arity) const { return std::max(1, cfg.max_size - (arity - 1)); }

    // --- suites ------------------------------------------------------------

    void axioms() {
        if (cfg.model == "dend") {
            DendAlgebra alg{lam(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = binary_set(alphabet(), elem_degree_cap(3));
            emit_report("axioms", check_identities(table, dendriform_axioms(), set.elems, set.sizes,
                                                   cfg.max_size, cfg.policy));
        } else if (cfg.model == "tridend") {
            TridendAlgebra alg{lam(), q(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = schroeder_set(alphabet(), elem_degree_cap(3));
            IdentityList ids = qtridendriform_axioms(alg.q);
            for (auto& i : star_sum_identity(alg.q)) ids.push_back(i);
            emit_report("axioms",
                        check_identities(table, ids, set.elems, set.sizes, cfg.max_size, cfg.policy));
        } else {
            QShuffleAlgebra alg{lam(), q(), cfg.max_order, false};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = word_set(letters(), elem_degree_cap(3));
            IdentityList ids = qtridendriform_axioms(alg.q);
            for (auto& i : star_sum_identity(alg.q)) ids.push_back(i);
            emit_report("axioms",
                        check_identities(table, ids, set.elems, set.sizes, cfg.max_size, cfg.policy));
        }
    }

    void leibniz() {
        if (cfg.model == "dend") {
            DendAlgebra alg{lam(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = binary_set(alphabet(), elem_degree_cap(2));
            emit_report("leibniz",
                        check_identities(table, leibniz_identities({"prec", "succ"}, alg.lam),
                                         set.elems, set.sizes, cfg.max_size, cfg.policy));
        } else if (cfg.model == "tridend") {
            TridendAlgebra alg{lam(), q(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = schroeder_set(alphabet(), elem_degree_cap(2));
            emit_report("leibniz",
                        check_identities(table, leibniz_identities({"prec", "succ", "bullet"}, alg.lam),
                                         set.elems, set.sizes, cfg.max_size, cfg.policy));
        } else {
            QShuffleAlgebra alg{lam(), q(), cfg.max_order, false};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = word_set(letters(), elem_degree_cap(2));
            emit_report("leibniz",
                        check_identities(table, leibniz_identities({"prec", "succ", "bullet"}, alg.lam),
                                         set.elems, set.sizes, cfg.max_size, cfg.policy));
        }
    }

    void commutativity() {
        if (cfg.model != "qshuffle")
            throw ConfigError("the commutativity suite applies to the qshuffle model only");
        QShuffleAlgebra alg{lam(), q(), cfg.max_order, false};
        auto table = optable(alg);
        maybe_mutate(table);
        auto set = word_set(letters(), elem_degree_cap(2));
        IdentityList ids = commutative_qshuffle_identities();
        emit_report("commutativity",
                    check_identities(table, ids, set.elems, set.sizes, cfg.max_size, cfg.policy));
        emit_report("commutativity", check_identities(table, star_associativity(), set.elems,
                                                      set.sizes, cfg.max_size, cfg.policy));
    }

    void universal() {
        const int single_cap = std::max(1, cfg.max_size - 1);
        if (cfg.model == "qshuffle") {
            QShuffleAlgebra alg{lam(), q(), cfg.max_order, false};
            QShuffleSelfTarget target{&alg};
            std::function<TElement(const DiffMonomial&)> inc = [&](const DiffMonomial& m) {
                return TElement::basis(TensorWord::letter(m));
            };
            auto set = word_set(letters(), single_cap);
            bool id_ok = true, d_ok = true;
            std::string id_wit, d_wit;
            for (const auto& x : set.elems) {
                if (psi_bar(alg, target, inc, x) != x && id_ok) {
                    id_ok = false;
                    id_wit = render(x);
                }
                if (psi_bar(alg, target, inc, alg.d(x)) != alg.d(psi_bar(alg, target, inc, x)) &&
                    d_ok) {
                    d_ok = false;
                    d_wit = render(x);
                }
            }
            emit("universal", "psi_bar with the inclusion is the identity", id_ok,
                 id_ok ? json::object() : json{{"witness", id_wit}});
            emit("universal", "psi_bar intertwines the derivations", d_ok,
                 d_ok ? json::object() : json{{"witness", d_wit}});
        } else if (cfg.model == "tridend") {
            TridendAlgebra alg{lam(), q(), cfg.max_order};
            QShuffleAlgebra ws{alg.lam, alg.q, cfg.max_order, false};
            struct WordsTarget {
                using Element = TElement;
                const QShuffleAlgebra* w;
                Element prec(const Element& a, const Element& b) const { return w->prec(a, b); }
                Element succ(const Element& a, const Element& b) const { return w->succ(a, b); }
                Element bullet(const Element& a, const Element& b) const { return w->bullet(a, b); }
                Element d(const Element& a) const { return w->d(a); }
                Element gen_image(const Generator& g) const {
                    Element base = Element::basis(TensorWord::letter(DiffMonomial::var(g.name, 0)));
                    for (unsigned i = 0; i < g.order; ++i) base = w->d(base);
                    return base;
                }
            } target{&ws};
            auto set = schroeder_set(alphabet(), elem_degree_cap(2));
            for (const char* opname : {"prec", "succ", "bullet"}) {
                bool ok = true;
                std::string wit;
                for (std::size_t i = 0; i < set.elems.size() && ok; ++i) {
                    for (std::size_t j = 0; j < set.elems.size() && ok; ++j) {
                        if (set.sizes[i] + set.sizes[j] > cfg.max_size) continue;
                        const auto& s = set.elems[i];
                        const auto& t = set.elems[j];
                        TElement lhs, rhs;
                        std::string op(opname);
                        if (op == "prec") {
                            lhs = f_bar(target, alg.prec(s, t));
                            rhs = ws.prec(f_bar(target, s), f_bar(target, t));
                        } else if (op == "succ") {
                            lhs = f_bar(target, alg.succ(s, t));
                            rhs = ws.succ(f_bar(target, s), f_bar(target, t));
                        } else {
                            lhs = f_bar(target, alg.bullet(s, t));
                            rhs = ws.bullet(f_bar(target, s), f_bar(target, t));
                        }
                        if (!(lhs == rhs)) {
                            ok = false;
                            wit = "a = " + render(s) + "; b = " + render(t);
                        }
                    }
                }
                emit("universal", std::string("f_bar preserves ") + opname, ok,
                     ok ? json::object() : json{{"witness", wit}});
            }
            bool d_ok = true;
            std::string d_wit;
            auto singles = schroeder_set(alphabet(), single_cap);
            for (const auto& t : singles.elems) {
                if (!(f_bar(target, alg.d(t)) == ws.d(f_bar(target, t)))) {
                    d_ok = false;
                    d_wit = render(t);
                    break;
                }
            }
            emit("universal", "f_bar intertwines the derivations", d_ok,
                 d_ok ? json::object() : json{{"witness", d_wit}});
            TridendSelfTarget self{&alg};
            bool self_ok = true;
            std::string self_wit;
            for (const auto& t : singles.elems) {
                if (!(f_bar(self, t) == t)) {
                    self_ok = false;
                    self_wit = render(t);
                    break;
                }
            }
            emit("universal", "f_bar with the vertex embedding is the identity", self_ok,
                 self_ok ? json::object() : json{{"witness", self_wit}});
        } else {
            DendAlgebra alg{lam(), cfg.max_order};
            QShuffleAlgebra ws{alg.lam, Scalar::zero(), cfg.max_order, true};
            struct WordsTarget {
                using Element = TElement;
                const QShuffleAlgebra* w;
                Element prec(const Element& a, const Element& b) const { return w->prec(a, b); }
                Element succ(const Element& a, const Element& b) const { return w->succ(a, b); }
                Element d(const Element& a) const { return w->d(a); }
                Element gen_image(const Generator& g) const {
                    Element base = Element::basis(TensorWord::letter(DiffMonomial::var(g.name, 0)));
                    for (unsigned i = 0; i < g.order; ++i) base = w->d(base);
                    return base;
                }
            } target{&ws};
            auto set = binary_set(alphabet(), elem_degree_cap(2));
            for (const char* opname : {"prec", "succ"}) {
                bool ok = true;
                std::string wit;
                for (std::size_t i = 0; i < set.elems.size() && ok; ++i) {
                    for (std::size_t j = 0; j < set.elems.size() && ok; ++j) {
                        if (set.sizes[i] + set.sizes[j] > cfg.max_size) continue;
                        const auto& s = set.elems[i];
                        const auto& t = set.elems[j];
                        std::string op(opname);
                        TElement lhs = op == "prec" ? f_bar(target, alg.prec(s, t))
                                                    : f_bar(target, alg.succ(s, t));
                        TElement rhs = op == "prec" ? ws.prec(f_bar(target, s), f_bar(target, t))
                                                    : ws.succ(f_bar(target, s), f_bar(target, t));
                        if (!(lhs == rhs)) {
                            ok = false;
                            wit = "a = " + render(s) + "; b = " + render(t);
                        }
                    }
                }
                emit("universal", std::string("f_bar preserves ") + opname, ok,
                     ok ? json::object() : json{{"witness", wit}});
            }
            auto singles = binary_set(alphabet(), single_cap);
            bool d_ok = true;
            std::string d_wit;
            for (const auto& t : singles.elems) {
                if (!(f_bar(target, alg.d(t)) == ws.d(f_bar(target, t)))) {
                    d_ok = false;
                    d_wit = render(t);
                    break;
                }
            }
            emit("universal", "f_bar intertwines the derivations", d_ok,
                 d_ok ? json::object() : json{{"witness", d_wit}});
            DendSelfTarget self{&alg};
            bool self_ok = true;
            std::string self_wit;
            for (const auto& t : singles.elems) {
                if (!(f_bar(self, t) == t)) {
                    self_ok = false;
                    self_wit = render(t);
                    break;
                }
            }
            emit("universal", "f_bar with the vertex embedding is the identity", self_ok,
                 self_ok ? json::object() : json{{"witness", self_wit}});
        }
    }

    void induced() {
        if (cfg.model == "dend") {
            DendAlgebra alg{Scalar::zero(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = binary_set(alphabet(), elem_degree_cap(3));
            auto derived = induce_novikov_dendriform(table, Scalar::zero(), spot_of(set.elems));
            IdentityList ids = novikov_dendriform_axioms();
            for (auto& i : novikov_associative_axioms()) ids.push_back(i);
            emit_report("induced", check_identities(derived, ids, set.elems, set.sizes, cfg.max_size,
                                                    cfg.policy));
        } else if (cfg.model == "tridend") {
            // the unweighted vee/wedge operations match the middle terms of
            // the mixed axioms only when star carries the bullet with
            // coefficient one, so the induction lives at q = 1
            TridendAlgebra alg{Scalar::zero(), Scalar::one(), cfg.max_order};
            auto table = optable(alg);
            maybe_mutate(table);
            auto set = schroeder_set(alphabet(), elem_degree_cap(3));
            auto derived = induce_novikov_tridendriform(table, Scalar::zero(), spot_of(set.elems));
            IdentityList ids = novikov_tridendriform_axioms();
            for (auto& i : novikov_associative_axioms()) ids.push_back(i);
            emit_report("induced", check_identities(derived, ids, set.elems, set.sizes, cfg.max_size,
                                                    cfg.policy));
        } else {
            auto set = word_set(letters(), elem_degree_cap(3));
            {
                QShuffleAlgebra alg{Scalar::zero(), Scalar::zero(), cfg.max_order, true};
                auto table = optable(alg);
                maybe_mutate(table);
                auto pre = induce_pre_novikov(table, Scalar::zero(), spot_of(set.elems));
                IdentityList ids = pre_novikov_axioms();
                for (auto& i : novikov_axioms()) ids.push_back(i);
                emit_report("induced", check_identities(pre, ids, set.elems, set.sizes, cfg.max_size,
                                                        cfg.policy));
                auto comm_nd = convert(StructureKind::PreNovikov, pre, spot_of(set.elems));
                emit_report("induced", check_identities(comm_nd, axioms_for(StructureKind::CommNovikovDendriform),
                                                        set.elems, set.sizes, cfg.max_size, cfg.policy));
                auto back = convert(StructureKind::CommNovikovDendriform, comm_nd, spot_of(set.elems));
                bool same = true;
                std::string wit;
                for (std::size_t i = 0; i < set.elems.size() && same; ++i)
                    for (std::size_t j = 0; j < set.elems.size() && same; ++j) {
                        if (set.sizes[i] + set.sizes[j] > cfg.max_size) continue;
                        for (const char* op : {"lhd", "rhd"}) {
                            if (!(back.binary.at(op)(set.elems[i], set.elems[j]) ==
                                  pre.binary.at(op)(set.elems[i], set.elems[j]))) {
                                same = false;
                                wit = std::string(op) + " at a = " + render(set.elems[i]) +
                                      "; b = " + render(set.elems[j]);
                                break;
                            }
                        }
                    }
                emit("induced", "pre-Novikov conversion round trip", same,
                     same ? json::object() : json{{"witness", wit}});
            }
            {
                QShuffleAlgebra alg{Scalar::zero(), Scalar::one(), cfg.max_order, false};
                auto table = optable(alg);
                maybe_mutate(table);
                auto post = induce_post_novikov(table, Scalar::zero(), spot_of(set.elems));
                IdentityList ids = post_novikov_axioms();
                for (auto& i : novikov_axioms()) ids.push_back(i);
                emit_report("induced", check_identities(post, ids, set.elems, set.sizes, cfg.max_size,
                                                        cfg.policy));
                // the third product alone is a Novikov product
                OpTable<TensorWord> vw_only;
                vw_only.render = post.render;
                vw_only.binary["circ"] = post.binary.at("vw");
                emit_report("induced", check_identities(vw_only, novikov_axioms(), set.elems,
                                                        set.sizes, cfg.max_size, cfg.policy));
                // commutative Novikov-associative sums give a Novikov product
                auto nt = induce_novikov_tridendriform(table, Scalar::zero(), spot_of(set.elems));
                OpTable<TensorWord> comm_na;
                comm_na.render = nt.render;
                comm_na.binary["vdash"] = nt.binary.at("vdash");
                comm_na.binary["dashv"] = nt.binary.at("dashv");
                auto nov = convert(StructureKind::CommNovikovAssociative, comm_na, spot_of(set.elems));
                emit_report("induced", check_identities(nov, novikov_axioms(), set.elems, set.sizes,
                                                        cfg.max_size, cfg.policy));
            }
        }
    }

    void koszul() {
        std::vector<Rational> qs;
        if (cfg.q == "sym") {
            qs = {Rational(1), Rational(2), Rational(-1, 2)};
        } else {
            qs = {rational_from_string(cfg.q)};
        }
        auto rep = verify_duality(RelationKind::Dendriform, RelationKind::Diassociative, Rational(0));
        emit("koszul", "dendriform vs diassociative", rep.passed(), to_json(rep));
        for (const auto& qv : qs) {
            auto r = verify_duality(RelationKind::QTridendriform, RelationKind::QTriassociative, qv);
            emit("koszul", "q-tridendriform at q = " + to_string(qv) + " vs triassociative at 1/q",
                 r.passed(), to_json(r));
        }
    }

    void counts() {
        if (cfg.model == "qshuffle")
            throw ConfigError("the counts suite applies to the tree models only");
        static const long schroeder_shapes[] = {1, 1, 3, 11, 45, 197, 903};
        static const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
        const long g = static_cast<long>(make_alphabet(cfg.generators, 0).size());
        int top = std::min(cfg.max_size + 1, 6);
        for (int n = 2; n <= top; ++n) {
            long expect = 1;
            for (int k = 0; k < n - 1; ++k) expect *= g;
            if (cfg.model == "tridend") {
                expect *= schroeder_shapes[n - 1];
                auto trees = enumerate_schroeder(alphabet(), n);
                bool sorted = std::is_sorted(trees.begin(), trees.end()) &&
                              std::adjacent_find(trees.begin(), trees.end()) == trees.end();
                emit("counts", "schroeder trees with " + std::to_string(n) + " leaves",
                     static_cast<long>(trees.size()) == expect && sorted,
                     json{{"count", trees.size()}, {"expected", expect}});
            } else {
                expect *= catalan[n - 1];
                auto trees = enumerate_binary(alphabet(), n);
                bool sorted = std::is_sorted(trees.begin(), trees.end()) &&
                              std::adjacent_find(trees.begin(), trees.end()) == trees.end();
                emit("counts", "binary trees with " + std::to_string(n) + " leaves",
                     static_cast<long>(trees.size()) == expect && sorted,
                     json{{"count", trees.size()}, {"expected", expect}});
            }
        }
    }
};

}  // namespace

SuiteOutcome run_suite(const SuiteConfig& config) {
    Runner r{config, {}};
    for (const auto& s : config.suites) {
        if (s == "axioms") r.axioms();
        else if (s == "leibniz") r.leibniz();
        else if (s == "commutativity") r.commutativity();
        else if (s == "universal") r.universal();
        else if (s == "induced") r.induced();
        else if (s == "koszul") r.koszul();
        else if (s == "counts") r.counts();
        else throw ConfigError("unknown suite '" + s + "'");
    }
    return std::move(r.out);
}

}  // namespace dendro

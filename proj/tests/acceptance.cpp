// Acceptance suite: every criterion runs at its pinned bound and prints one
// pass/fail line; the exit code is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dendro/basis_sets.hpp"
#include "dendro/eval.hpp"
#include "dendro/identities.hpp"
#include "dendro/induced.hpp"
#include "dendro/koszul.hpp"
#include "dendro/modeltables.hpp"
#include "dendro/rb.hpp"
#include "dendro/suite.hpp"
#include "oracles.hpp"

using namespace dendro;

namespace {

int failures = 0;
std::string cli_path;

void criterion(const std::string& name, double limit_seconds, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
    std::printf("[%s] %-70s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), secs);
    if (!ok) {
        if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

bool report_ok(const CheckReport& rep, std::string& detail) {
    for (const auto& r : rep.results) {
        if (!r.passed) {
            detail = r.name + (r.witness ? " at " + *r.witness : "");
            return false;
        }
    }
    return !rep.vacuous;
}

// ---------------------------------------------------------------------------

bool dendriform_axioms_criterion(std::string& detail) {
    DendAlgebra alg;  // symbolic lam; the axioms do not involve d
    auto set = binary_set(make_alphabet({"x"}, 0), 4);
    auto rep = check_identities(optable(alg), dendriform_axioms(), set.elems, set.sizes, 6,
                                CheckPolicy::Parallel);
    return report_ok(rep, detail);
}

bool qtridendriform_axioms_criterion(std::string& detail) {
    TridendAlgebra alg;  // symbolic q
    auto set = schroeder_set(make_alphabet({"x"}, 0), 3);
    auto rep = check_identities(optable(alg), qtridendriform_axioms(alg.q), set.elems, set.sizes, 5,
                                CheckPolicy::Parallel);
    return report_ok(rep, detail);
}

bool leibniz_criterion(std::string& detail) {
    {
        DendAlgebra alg;
        auto set = binary_set(make_alphabet({"x"}, 0), 3);
        auto rep = check_identities(optable(alg), leibniz_identities({"prec", "succ"}, alg.lam),
                                    set.elems, set.sizes, 4, CheckPolicy::Parallel);
        if (!report_ok(rep, detail)) return false;
    }
    {
        TridendAlgebra alg;
        auto set = schroeder_set(make_alphabet({"x"}, 0), 3);
        auto rep = check_identities(optable(alg),
                                    leibniz_identities({"prec", "succ", "bullet"}, alg.lam),
                                    set.elems, set.sizes, 4, CheckPolicy::Parallel);
        if (!report_ok(rep, detail)) return false;
    }
    {
        QShuffleAlgebra alg;
        auto set = word_set(single_var_letters({"y", "z"}, 1), 3);
        auto rep = check_identities(optable(alg),
                                    leibniz_identities({"prec", "succ", "bullet"}, alg.lam),
                                    set.elems, set.sizes, 4, CheckPolicy::Parallel);
        if (!report_ok(rep, detail)) return false;
    }
    return true;
}

bool commutative_model_criterion(std::string& detail) {
    QShuffleAlgebra alg;  // symbolic lam and q
    auto set = word_set(single_var_letters({"y", "z"}, 1), 3);
    IdentityList pair_ids = commutative_qshuffle_identities();
    auto rep = check_identities(optable(alg), pair_ids, set.elems, set.sizes, 5,
                                CheckPolicy::Parallel);
    if (!report_ok(rep, detail)) return false;
    auto rep2 = check_identities(optable(alg), star_associativity(), set.elems, set.sizes, 5,
                                 CheckPolicy::Parallel);
    if (!report_ok(rep2, detail)) return false;

    QShuffleSelfTarget target{&alg};
    std::function<TElement(const DiffMonomial&)> inc = [](const DiffMonomial& m) {
        return TElement::basis(TensorWord::letter(m));
    };
    for (const auto& x : set.elems) {
        if (psi_bar(alg, target, inc, x) != x) {
            detail = "psi_bar is not the identity at " + render(x);
            return false;
        }
        if (psi_bar(alg, target, inc, alg.d(x)) != alg.d(psi_bar(alg, target, inc, x))) {
            detail = "psi_bar does not intertwine d at " + render(x);
            return false;
        }
    }
    return true;
}

bool universal_tridend_criterion(std::string& detail) {
    TridendAlgebra alg;
    QShuffleAlgebra words{alg.lam, alg.q, alg.max_order, false};
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
    } target{&words};
    auto set = schroeder_set(make_alphabet({"x"}, 0), 3);
    for (std::size_t i = 0; i < set.elems.size(); ++i) {
        for (std::size_t j = 0; j < set.elems.size(); ++j) {
            if (set.sizes[i] + set.sizes[j] > 4) continue;
            const auto& s = set.elems[i];
            const auto& t = set.elems[j];
            if (f_bar(target, alg.prec(s, t)) != words.prec(f_bar(target, s), f_bar(target, t)) ||
                f_bar(target, alg.succ(s, t)) != words.succ(f_bar(target, s), f_bar(target, t)) ||
                f_bar(target, alg.bullet(s, t)) !=
                    words.bullet(f_bar(target, s), f_bar(target, t))) {
                detail = "morphism property fails at " + render(s) + ", " + render(t);
                return false;
            }
        }
    }
    for (const auto& t : schroeder_set(make_alphabet({"x"}, 0), 3).elems) {
        if (f_bar(target, alg.d(t)) != words.d(f_bar(target, t))) {
            detail = "derivation compatibility fails at " + render(t);
            return false;
        }
    }
    return true;
}

bool induced_criterion(std::string& detail) {
    {
        DendAlgebra alg{Scalar::zero(), kDefaultMaxOrder};
        auto set = binary_set(make_alphabet({"x"}, 0), 2);
        auto table = induce_novikov_dendriform(optable(alg), Scalar::zero(), set.elems);
        IdentityList ids = novikov_dendriform_axioms();
        for (auto& i : novikov_associative_axioms()) ids.push_back(i);
        if (!report_ok(check_identities(table, ids, set.elems, set.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
    }
    {
        TridendAlgebra alg{Scalar::zero(), Scalar::one(), kDefaultMaxOrder};
        auto set = schroeder_set(make_alphabet({"x"}, 0), 2);
        auto table = induce_novikov_tridendriform(optable(alg), Scalar::zero(), set.elems);
        IdentityList ids = novikov_tridendriform_axioms();
        for (auto& i : novikov_associative_axioms()) ids.push_back(i);
        if (!report_ok(check_identities(table, ids, set.elems, set.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
    }
    auto wset = word_set(single_var_letters({"y", "z"}, 0), 2);
    std::vector<TElement> spot(wset.elems.begin(), wset.elems.begin() + 3);
    {
        QShuffleAlgebra alg{Scalar::zero(), Scalar::zero(), kDefaultMaxOrder, true};
        auto pre = induce_pre_novikov(optable(alg), Scalar::zero(), spot);
        IdentityList ids = pre_novikov_axioms();
        for (auto& i : novikov_axioms()) ids.push_back(i);
        if (!report_ok(check_identities(pre, ids, wset.elems, wset.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
        auto comm_nd = convert(StructureKind::PreNovikov, pre, spot);
        if (!report_ok(check_identities(comm_nd, axioms_for(StructureKind::CommNovikovDendriform),
                                        wset.elems, wset.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
        auto back = convert(StructureKind::CommNovikovDendriform, comm_nd, spot);
        for (const auto& x : spot)
            for (const auto& y : spot)
                for (const char* op : {"lhd", "rhd"})
                    if (back.binary.at(op)(x, y) != pre.binary.at(op)(x, y)) {
                        detail = "conversion round trip differs";
                        return false;
                    }
    }
    {
        QShuffleAlgebra alg{Scalar::zero(), Scalar::one(), kDefaultMaxOrder, false};
        auto post = induce_post_novikov(optable(alg), Scalar::zero(), spot);
        IdentityList ids = post_novikov_axioms();
        for (auto& i : novikov_axioms()) ids.push_back(i);
        if (!report_ok(check_identities(post, ids, wset.elems, wset.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
        OpTable<TensorWord> vw_only;
        vw_only.render = post.render;
        vw_only.binary["circ"] = post.binary.at("vw");
        if (!report_ok(check_identities(vw_only, novikov_axioms(), wset.elems, wset.sizes, 4,
                                        CheckPolicy::Parallel),
                       detail))
            return false;
        auto comm_nt = convert(StructureKind::PostNovikov, post, spot);
        if (!report_ok(check_identities(comm_nt, axioms_for(StructureKind::CommNovikovTridendriform),
                                        wset.elems, wset.sizes, 4, CheckPolicy::Parallel),
                       detail))
            return false;
        auto nt = induce_novikov_tridendriform(optable(alg), Scalar::zero(), spot);
        OpTable<TensorWord> comm_na;
        comm_na.render = nt.render;
        comm_na.binary["vdash"] = nt.binary.at("vdash");
        comm_na.binary["dashv"] = nt.binary.at("dashv");
        auto nov = convert(StructureKind::CommNovikovAssociative, comm_na, spot);
        if (!report_ok(check_identities(nov, novikov_axioms(), wset.elems, wset.sizes, 4,
                                        CheckPolicy::Parallel),
                       detail))
            return false;
    }
    return true;
}

bool rb_criterion(std::string& detail) {
    auto render_poly = [](const DiffPoly& p) {
        return render_lincomb(p, [](const DiffMonomial& m) { return m.str(); });
    };
    auto make = [&](const Scalar& q, const Scalar& c) {
        return scalar_rb_algebra<DiffMonomial>(
            [](const DiffPoly& x, const DiffPoly& y) { return poly_mul(x, y); },
            [](const DiffPoly& x) { return d0(x); }, Scalar::lam(), q, c, render_poly);
    };
    std::vector<DiffPoly> elems;
    for (const auto& m : monomial_set({{"y", 0}, {"y", 1}, {"z", 0}, {"z", 1}}, 2))
        elems.push_back(DiffPoly::basis(m));

    IdentityList dend_ids = dendriform_axioms();
    for (auto& i : leibniz_identities({"prec", "succ"}, Scalar::lam())) dend_ids.push_back(i);
    IdentityList trid_ids = qtridendriform_axioms(Scalar::q());
    for (auto& i : leibniz_identities({"prec", "succ", "bullet"}, Scalar::lam()))
        trid_ids.push_back(i);

    // P = 0 at weight zero, item (1)
    auto zero0 = make(Scalar::zero(), Scalar::zero());
    if (!report_ok(check_identities(lift_dendriform_weight0(zero0, elems), dend_ids, elems, {},
                                    std::numeric_limits<long>::max(), CheckPolicy::Parallel),
                   detail))
        return false;
    // P = 0 at symbolic weight, items (2) and (3)
    auto zeroq = make(Scalar::q(), Scalar::zero());
    if (!report_ok(check_identities(lift_tridendriform(zeroq, elems), trid_ids, elems, {},
                                    std::numeric_limits<long>::max(), CheckPolicy::Parallel),
                   detail))
        return false;
    // P = -q id, items (2) and (3)
    auto minus_q = make(Scalar::q(), -Scalar::q());
    if (!report_ok(check_identities(lift_tridendriform(minus_q, elems), trid_ids, elems, {},
                                    std::numeric_limits<long>::max(), CheckPolicy::Parallel),
                   detail))
        return false;
    for (auto variant : {DendLiftVariant::Left, DendLiftVariant::Right}) {
        if (!report_ok(check_identities(lift_dendriform_weightq(minus_q, elems, variant), dend_ids,
                                        elems, {}, std::numeric_limits<long>::max(),
                                        CheckPolicy::Parallel),
                       detail))
            return false;
    }
    return true;
}

bool koszul_criterion(std::string& detail) {
    auto rep = verify_duality(RelationKind::Dendriform, RelationKind::Diassociative, Rational(0));
    if (!(rep.passed() && rep.space_dim == 8 && rep.primal_rank == 3 && rep.annihilator_dim == 5 &&
          rep.dual_rank == 5)) {
        detail = "dendriform/diassociative dims " + to_json(rep).dump();
        return false;
    }
    for (const Rational& q : {Rational(1), Rational(2), Rational(-1, 2)}) {
        auto r = verify_duality(RelationKind::QTridendriform, RelationKind::QTriassociative, q);
        if (!(r.passed() && r.space_dim == 18 && r.primal_rank == 7 && r.annihilator_dim == 11 &&
              r.dual_rank == 11)) {
            detail = "tridendriform dims at q = " + to_string(q) + ": " + to_json(r).dump();
            return false;
        }
    }
    return true;
}

bool enumeration_criterion(std::string& detail) {
    auto one = make_alphabet({"x"}, 0);
    long schroeder_expect[] = {1, 3, 11, 45};
    long binary_expect[] = {1, 2, 5, 14};
    auto closure = oracles::schroeder_closure(one, 5);
    for (int n = 2; n <= 5; ++n) {
        auto st = enumerate_schroeder(one, n);
        if (static_cast<long>(st.size()) != schroeder_expect[n - 2] ||
            static_cast<long>(st.size()) != oracles::little_schroeder(n - 1)) {
            detail = "schroeder count at " + std::to_string(n) + " leaves: " +
                     std::to_string(st.size());
            return false;
        }
        std::set<SchroederTree> expected;
        for (const auto& t : closure)
            if (t.leaf_count() == n) expected.insert(t);
        if (std::set<SchroederTree>(st.begin(), st.end()) != expected) {
            detail = "schroeder enumeration differs from the brute-force closure at " +
                     std::to_string(n) + " leaves";
            return false;
        }
        auto bt = enumerate_binary(one, n);
        if (static_cast<long>(bt.size()) != binary_expect[n - 2] ||
            static_cast<long>(bt.size()) != oracles::catalan(n - 1)) {
            detail = "binary count at " + std::to_string(n) + " leaves";
            return false;
        }
        auto dyck = oracles::binary_trees_via_dyck(one, n - 1);
        if (std::set<BinaryTree>(bt.begin(), bt.end()) != dyck) {
            detail = "binary enumeration differs from the Dyck-word generator";
            return false;
        }
    }
    return true;
}

int run_cli(const std::string& args, std::string& output) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::array<char, 4096> buf{};
    output.clear();
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    int status = pclose(pipe);
    return WEXITSTATUS(status);
}

bool cli_criterion(std::string& detail) {
    // grammar round trip, in process
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<int> kind(0, 5), var(0, 3), ord(0, 3), opk(0, 3), num(-9, 9),
        den(1, 9), deg(0, 2);
    static const char* names[] = {"x", "y", "z", "w"};
    static const char ops[] = {'<', '>', '.', '*'};
    std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
        if (depth <= 0 || kind(rng) == 0) return atom(names[var(rng)], ord(rng));
        switch (kind(rng) % 5) {
            case 0: return der(gen(depth - 1));
            case 1: return bin(ops[opk(rng)], gen(depth - 1), gen(depth - 1));
            case 2: return add(gen(depth - 1), gen(depth - 1));
            case 3: return sub(gen(depth - 1), gen(depth - 1));
            default: {
                Scalar s = Scalar::monomial({static_cast<unsigned>(deg(rng)),
                                             static_cast<unsigned>(deg(rng))},
                                            Rational(num(rng), den(rng)));
                if (s.is_zero()) s = Scalar::one();
                return scale(s, gen(depth - 1));
            }
        }
    };
    for (int i = 0; i < 10000; ++i) {
        ExprPtr e = gen(4);
        ExprPtr back = parse_expr(print_expr(e));
        if (!expr_equal(e, back)) {
            detail = "round trip failed on " + print_expr(e);
            return false;
        }
    }
    if (cli_path.empty()) {
        detail = "CLI binary path not supplied";
        return false;
    }
    // exit-code contract
    std::string out1, out2, out3;
    int ok_code = run_cli("suite --model dend --suites axioms,leibniz,counts --max-size 4", out1);
    if (ok_code != 0) {
        detail = "green suite exited with " + std::to_string(ok_code);
        return false;
    }
    int bad_code = run_cli("suite --model dend --suites axioms --mutate swap-prec-succ", out2);
    if (bad_code != 1) {
        detail = "mutated suite exited with " + std::to_string(bad_code);
        return false;
    }
    if (out2.find("witness") == std::string::npos) {
        detail = "mutated suite reported no witness";
        return false;
    }
    int cfg_code = run_cli("suite --model dend --suites nosuch", out3);
    if (cfg_code != 2) {
        detail = "config error exited with " + std::to_string(cfg_code);
        return false;
    }
    // byte-identical reruns
    std::string a, b;
    run_cli("eval \"d(x * y) <: z\" --model tridend --json", a);
    run_cli("eval \"d(x * y) <: z\" --model tridend --json", b);
    if (a.empty() || a != b) {
        detail = "eval rerun differs";
        return false;
    }
    run_cli("suite --model qshuffle --suites axioms,commutativity --max-size 4 --json", a);
    run_cli("suite --model qshuffle --suites axioms,commutativity --max-size 4 --json", b);
    if (a.empty() || a != b) {
        detail = "suite rerun differs";
        return false;
    }
    run_cli("enumerate -n 4 --model tridend", a);
    if (a.find("count: 11") == std::string::npos) {
        detail = "enumerate did not report 11 trees";
        return false;
    }
    // config-file driven run
    {
        std::string path = "acceptance_suite_config.json";
        std::ofstream cfg(path);
        cfg << R"({"model": "dend", "max_size": 4, "suites": ["axioms", "counts"]})";
        cfg.close();
        int code = run_cli("suite --config " + path, a);
        std::remove(path.c_str());
        if (code != 0) {
            detail = "config-file suite exited with " + std::to_string(code);
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    std::printf("acceptance criteria\n-------------------\n");
    criterion("dendriform axioms, binary trees, triples up to total degree 6", 60,
              dendriform_axioms_criterion);
    criterion("q-tridendriform axioms, symbolic q, triples up to total degree 5", 120,
              qtridendriform_axioms_criterion);
    criterion("weighted Leibniz identities, symbolic lam and q, pairs up to size 4", 60,
              leibniz_criterion);
    criterion("commutative model: star commutes/associates, psi_bar intertwines d", 60,
              commutative_model_criterion);
    criterion("universal property into the quasi-shuffle model", 120, universal_tridend_criterion);
    criterion("induced Novikov-family structures at weight zero", 120, induced_criterion);
    criterion("Rota-Baxter lifts with P = 0 and P = -q id", 30, rb_criterion);
    criterion("Koszul duality dims (8,3,5) and (18,7,11) at q in {1,2,-1/2}", 5, koszul_criterion);
    criterion("enumeration counts 1,3,11,45 and 1,2,5,14 vs brute force", 10, enumeration_criterion);
    criterion("CLI: grammar fuzz, exit codes, byte-identical reruns", 60, cli_criterion);
    std::printf("-------------------\n%s (%d failure%s)\n", failures == 0 ? "ALL PASS" : "FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}

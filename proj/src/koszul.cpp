#include "dendro/koszul.hpp"

#include <algorithm>

#include "dendro/errors.hpp"

namespace dendro {

std::string quadterm_str(const QuadTerm& t, const std::vector<std::string>& ops) {
    const std::string& mu = ops.at(static_cast<std::size_t>(t.mu));
    const std::string& nu = ops.at(static_cast<std::size_t>(t.nu));
    if (t.shape == QuadTerm::Shape::Left) return "(a " + mu + " b) " + nu + " c";
    return "a " + mu + " (b " + nu + " c)";
}

void RelationVector::add(QuadTerm t, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
        coeffs.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

Rational pairing(const RelationVector& u, const RelationVector& v) {
    if (u.num_ops != v.num_ops)
        throw AlphabetMismatch("pairing of relation vectors over alphabets of sizes " +
                               std::to_string(u.num_ops) + " and " + std::to_string(v.num_ops));
    Rational acc(0);
    for (const auto& [t, cu] : u.coeffs) {
        auto it = v.coeffs.find(t);
        if (it == v.coeffs.end()) continue;
        Rational prod = cu * it->second;
        acc += t.shape == QuadTerm::Shape::Left ? prod : Rational(-prod);
    }
    return acc;
}

RelationKind relation_kind_from_string(const std::string& s) {
    if (s == "dendriform") return RelationKind::Dendriform;
    if (s == "diassociative") return RelationKind::Diassociative;
    if (s == "q_tridendriform" || s == "tridendriform") return RelationKind::QTridendriform;
    if (s == "q_triassociative" || s == "triassociative") return RelationKind::QTriassociative;
    throw ConfigError("unknown relation kind '" + s + "'");
}

std::string to_string(RelationKind k) {
    switch (k) {
        case RelationKind::Dendriform: return "dendriform";
        case RelationKind::Diassociative: return "diassociative";
        case RelationKind::QTridendriform: return "q_tridendriform";
        case RelationKind::QTriassociative: return "q_triassociative";
    }
    return "?";
}

std::vector<std::string> op_names(RelationKind k) {
    switch (k) {
        case RelationKind::Dendriform: return {"<:", ":>"};
        case RelationKind::Diassociative: return {"-|", "|-"};
        case RelationKind::QTridendriform: return {"<:", ":>", "."};
        case RelationKind::QTriassociative: return {"-|", "|-", "_|_"};
    }
    return {};
}

namespace {

using S = QuadTerm::Shape;

QuadTerm L(int mu, int nu) { return QuadTerm{S::Left, mu, nu}; }
QuadTerm R(int mu, int nu) { return QuadTerm{S::Right, mu, nu}; }

RelationVector vec(int num_ops, std::initializer_list<std::pair<QuadTerm, Rational>> terms) {
    RelationVector v;
    v.num_ops = num_ops;
    for (const auto& [t, c] : terms) v.add(t, c);
    return v;
}

}  // namespace

std::vector<RelationVector> build_relations(RelationKind kind, const Rational& q) {
    // op indices: prec/dashv = 0, succ/vdash = 1, bullet/perp = 2
    switch (kind) {
        case RelationKind::Dendriform:
            return {
                vec(2, {{L(0, 0), 1}, {R(0, 0), -1}, {R(0, 1), -1}}),
                vec(2, {{L(1, 0), 1}, {R(1, 0), -1}}),
                vec(2, {{L(0, 1), 1}, {L(1, 1), 1}, {R(1, 1), -1}}),
            };
        case RelationKind::Diassociative:
            return {
                vec(2, {{L(0, 0), 1}, {R(0, 0), -1}}),
                vec(2, {{L(0, 0), 1}, {R(0, 1), -1}}),
                vec(2, {{L(1, 0), 1}, {R(1, 0), -1}}),
                vec(2, {{L(0, 1), 1}, {R(1, 1), -1}}),
                vec(2, {{L(1, 1), 1}, {R(1, 1), -1}}),
            };
        case RelationKind::QTridendriform:
            if (q == 0) throw ZeroQ("q-tridendriform relations need q != 0");
            return {
                vec(3, {{L(0, 0), 1}, {R(0, 0), -1}, {R(0, 1), -1}, {R(0, 2), Rational(-q)}}),
                vec(3, {{L(1, 0), 1}, {R(1, 0), -1}}),
                vec(3, {{L(0, 1), 1}, {L(1, 1), 1}, {L(2, 1), q}, {R(1, 1), -1}}),
                vec(3, {{L(1, 2), 1}, {R(1, 2), -1}}),
                vec(3, {{L(0, 2), 1}, {R(2, 1), -1}}),
                vec(3, {{L(2, 0), 1}, {R(2, 0), -1}}),
                vec(3, {{L(2, 2), 1}, {R(2, 2), -1}}),
            };
        case RelationKind::QTriassociative:
            if (q == 0) throw ZeroQ("q-triassociative relations need q != 0");
            return {
                vec(3, {{L(0, 0), 1}, {R(0, 0), -1}}),
                vec(3, {{L(0, 0), 1}, {R(0, 1), -1}}),
                vec(3, {{L(1, 0), 1}, {R(1, 0), -1}}),
                vec(3, {{L(0, 1), 1}, {R(1, 1), -1}}),
                vec(3, {{L(1, 1), 1}, {R(1, 1), -1}}),
                vec(3, {{L(2, 2), 1}, {R(2, 2), -1}}),
                vec(3, {{L(0, 0), 1}, {R(0, 2), Rational(-q)}}),
                vec(3, {{L(2, 0), 1}, {R(2, 0), -1}}),
                vec(3, {{L(0, 2), 1}, {R(2, 1), -1}}),
                vec(3, {{L(1, 2), 1}, {R(1, 2), -1}}),
                vec(3, {{L(2, 1), q}, {R(1, 1), -1}}),
            };
    }
    throw ConfigError("unknown relation kind");
}

namespace {

std::vector<QuadTerm> space_basis(int num_ops) {
    std::vector<QuadTerm> out;
    for (auto shape : {S::Left, S::Right})
        for (int mu = 0; mu < num_ops; ++mu)
            for (int nu = 0; nu < num_ops; ++nu) out.push_back(QuadTerm{shape, mu, nu});
    return out;
}

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t cidx = 0; cidx < cols; ++cidx) m[r][cidx] -= f * m[row][cidx];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

Matrix to_matrix(const std::vector<RelationVector>& vectors, const std::vector<QuadTerm>& basis,
                 bool signed_rows) {
    Matrix m;
    for (const auto& v : vectors) {
        std::vector<Rational> row(basis.size(), Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto it = v.coeffs.find(basis[j]);
            if (it == v.coeffs.end()) continue;
            Rational c = it->second;
            if (signed_rows && basis[j].shape == S::Right) c = -c;
            row[j] = c;
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

int rank(const std::vector<RelationVector>& vectors) {
    if (vectors.empty()) return 0;
    auto basis = space_basis(vectors[0].num_ops);
    Matrix m = to_matrix(vectors, basis, false);
    return static_cast<int>(rref(m).size());
}

std::vector<RelationVector> annihilator(const std::vector<RelationVector>& vectors, int num_ops) {
    auto basis = space_basis(num_ops);
    const std::size_t dim = basis.size();
    // <v, w> = sum_j sign(j) v_j w_j, so the annihilator is the null space of
    // the sign-twisted coefficient matrix.
    Matrix m = to_matrix(vectors, basis, true);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RelationVector> out;
    for (std::size_t free_col = 0; free_col < dim; ++free_col) {
        if (is_pivot[free_col]) continue;
        RelationVector w;
        w.num_ops = num_ops;
        w.add(basis[free_col], Rational(1));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Rational& c = m[r][free_col];
            if (c != 0) w.add(basis[static_cast<std::size_t>(pivots[r])], Rational(-c));
        }
        out.push_back(std::move(w));
    }
    return out;
}

nlohmann::ordered_json to_json(const DualityReport& r) {
    nlohmann::ordered_json o;
    o["space_dim"] = r.space_dim;
    o["primal_rank"] = r.primal_rank;
    o["annihilator_dim"] = r.annihilator_dim;
    o["dual_rank"] = r.dual_rank;
    o["equal"] = r.equal;
    o["witnesses"] = r.witnesses;
    return o;
}

DualityReport duality_report(const std::vector<RelationVector>& primal,
                             const std::vector<RelationVector>& dual,
                             const std::vector<std::string>& primal_ops,
                             const std::vector<std::string>& dual_ops) {
    if (primal.empty() || dual.empty()) throw ConfigError("duality check needs nonempty relation sets");
    const int num_ops = primal[0].num_ops;
    DualityReport rep;
    rep.space_dim = 2 * num_ops * num_ops;
    rep.primal_rank = rank(primal);
    auto ann = annihilator(primal, num_ops);
    rep.annihilator_dim = static_cast<int>(ann.size());
    rep.dual_rank = rank(dual);
    for (std::size_t i = 0; i < primal.size(); ++i) {
        for (std::size_t j = 0; j < dual.size(); ++j) {
            Rational p = pairing(primal[i], dual[j]);
            if (p != 0)
                rep.witnesses.push_back("primal relation " + std::to_string(i + 1) + " pairs to " +
                                        to_string(p) + " with dual relation " + std::to_string(j + 1));
        }
    }
    // dual ⊆ annihilator (zero pairings) + equal dimensions ⇒ span equality
    rep.equal = rep.witnesses.empty() && rep.dual_rank == rep.annihilator_dim;
    (void)primal_ops;
    (void)dual_ops;
    return rep;
}

DualityReport verify_duality(RelationKind primal_kind, RelationKind dual_kind, const Rational& q) {
    Rational dual_q(0);
    if (primal_kind == RelationKind::QTridendriform) {
        if (q == 0) throw ZeroQ("the tridendriform/triassociative duality needs q != 0");
        dual_q = Rational(1) / q;
    }
    auto primal = build_relations(primal_kind, q);
    auto dual = build_relations(dual_kind, dual_q);
    if (primal[0].num_ops != dual[0].num_ops)
        throw AlphabetMismatch("primal and dual kinds use different alphabet sizes");
    return duality_report(primal, dual, op_names(primal_kind), op_names(dual_kind));
}

}  // namespace dendro

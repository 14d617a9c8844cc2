#pragma once

#include <map>
#include <string>
#include <vector>

#include "dendro/rational.hpp"

#include "json.hpp"

namespace dendro {

/// Basis element of the weight-2 part of a nonsymmetric binary quadratic
/// operad: a bracketing shape with two operation indices.
struct QuadTerm {
    enum class Shape { Left, Right };  // Left = (a mu b) nu c, Right = a mu (b nu c)
    Shape shape = Shape::Left;
    int mu = 0;
    int nu = 0;

    friend auto operator<=>(const QuadTerm&, const QuadTerm&) = default;
};

std::string quadterm_str(const QuadTerm& t, const std::vector<std::string>& op_names);

/// Exact rational vector in the weight-2 space over a fixed operation
/// alphabet; no zero coefficients are stored.
struct RelationVector {
    int num_ops = 0;
    std::map<QuadTerm, Rational> coeffs;

    void add(QuadTerm t, const Rational& c);
    bool is_zero() const { return coeffs.empty(); }
    int space_dim() const { return 2 * num_ops * num_ops; }
};

/// The duality pairing: matching (shape, mu, nu) pairs contribute the product
/// of coefficients, signed +1 on Left and -1 on Right shapes.
Rational pairing(const RelationVector& u, const RelationVector& v);

enum class RelationKind { Dendriform, Diassociative, QTridendriform, QTriassociative };

RelationKind relation_kind_from_string(const std::string& s);
std::string to_string(RelationKind k);

/// Operation alphabet for rendering: {"<:", ":>"} / {"-|", "|-"} and the
/// three-operation versions with "." / "_|_".
std::vector<std::string> op_names(RelationKind k);

/// The defining relations of the given kind; q enters the kinds whose
/// displays reference it and must then be nonzero.
std::vector<RelationVector> build_relations(RelationKind kind, const Rational& q);

int rank(const std::vector<RelationVector>& vectors);

/// Exact basis of the annihilator of the span under the pairing, computed by
/// rational Gaussian elimination. An empty input annihilates to the full
/// space of the given alphabet size.
std::vector<RelationVector> annihilator(const std::vector<RelationVector>& vectors, int num_ops);

struct DualityReport {
    int space_dim = 0;
    int primal_rank = 0;
    int annihilator_dim = 0;
    int dual_rank = 0;
    bool equal = false;
    std::vector<std::string> witnesses;

    bool passed() const { return equal && witnesses.empty(); }
};

nlohmann::ordered_json to_json(const DualityReport& r);

/// Checks that every dual relation pairs to zero with every primal relation
/// and that the dual relations span the primal annihilator exactly.
DualityReport duality_report(const std::vector<RelationVector>& primal,
                             const std::vector<RelationVector>& dual,
                             const std::vector<std::string>& primal_ops,
                             const std::vector<std::string>& dual_ops);

/// Instantiates the dual kind at 1/q for the triassociative pairing (q is
/// ignored by the dendriform/diassociative pair).
DualityReport verify_duality(RelationKind primal_kind, RelationKind dual_kind, const Rational& q);

}  // namespace dendro

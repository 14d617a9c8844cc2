#pragma once

#include "dendro/optable.hpp"

namespace dendro {

// Axiom lists, one per structure. Operation names used in tables:
//   prec succ bullet star        (tri)dendriform and quasi-shuffle models
//   se ne sw nw vee wedge        Novikov-(tri)dendriform
//   vdash dashv                  Novikov-associative
//   lhd rhd vw circ              pre-/post-Novikov and Novikov
IdentityList dendriform_axioms();
IdentityList qtridendriform_axioms(const Scalar& q);
IdentityList novikov_axioms();
IdentityList novikov_associative_axioms();
IdentityList novikov_dendriform_axioms();
IdentityList pre_novikov_axioms();
IdentityList novikov_tridendriform_axioms();
IdentityList post_novikov_axioms();

// Commutativity of the listed structures, written on pairs.
IdentityList commutative_qshuffle_identities();          // a succ b = b prec a, a bullet b = b bullet a
IdentityList commutative_dendriform_identities();        // a succ b = b prec a
IdentityList comm_novikov_dendriform_identities();       // nw/se and ne/sw swaps
IdentityList comm_novikov_tridendriform_identities();    // + wedge/vee swap
IdentityList comm_novikov_associative_identities();      // dashv/vdash swap

/// d(a op b) = d(a) op b + a op d(b) + lam d(a) op d(b) for each named op.
IdentityList leibniz_identities(const std::vector<std::string>& ops, const Scalar& lam);

/// a star b = a prec b + a succ b + q a bullet b, and associativity of star.
IdentityList star_sum_identity(const Scalar& q);
IdentityList star_associativity();

}  // namespace dendro

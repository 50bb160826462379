#pragma once

#include "dgcat/constructions.hpp"
#include "dgcat/cylinder.hpp"
#include "dgcat/functor.hpp"

namespace dgcat {

// M_F for F: A -> B: B⊔A extended by t_X: F(X) -> X (with its inverse
// family) per object and t_a per generator of A. F = q∘j with j an extension.
struct MappingCylinder {
    DgFunctor functor;
    CategoryPtr category;
    Coproduct sum;  // B⊔A
    SemifreeExtension j;
    DgFunctor q;
    TContext context;
};

MappingCylinder mapping_cylinder(const DgFunctor& f);
// M(α, β): M_F -> M_F' for a commuting square β∘F = F'∘α.
DgFunctor mapping_cylinder_morphism(const MappingCylinder& source, const MappingCylinder& target, const DgFunctor& alpha,
                                    const DgFunctor& beta);
// B ∪_A Cyl(A) computed as a pushout along i₁, with B renamed into B⊔A.
CategoryPtr mapping_cylinder_via_pushout(const DgFunctor& f);

// Extends G: B -> C and H: Cyl(A) -> C with G∘F = H∘i_side to E: Cyl(B) -> C
// with E∘i_side = G and E∘Cyl(F) = H.
DgFunctor hep_extend(const SemifreeExtension& f, int side, const DgFunctor& g, const DgFunctor& h);

// P = B ∪_A Cyl(A) ∪_A B and the extension G: P -> Cyl(B).
struct RelativeCylinder {
    CategoryPtr category;
    PushoutResult pushout;
    SemifreeExtension g;
    CylinderData cyl_a;
    CylinderData cyl_b;
};

RelativeCylinder relative_cylinder(const SemifreeExtension& f);

// The involution of Cyl(Cyl(A)) exchanging the two cylinder directions.
struct Interchange {
    CylinderData inner;  // Cyl(A)
    CylinderData outer;  // Cyl(Cyl(A))
    DgFunctor t;
};

Interchange interchange(const CategoryPtr& cat);

bool homotopic_via(const DgFunctor& h, const DgFunctor& f1, const DgFunctor& f2);

// From s: A -> C with homotopy inverse s', d(s_hat) = 1 - s's and
// d(s_check) = 1 - ss', builds a full datum whose r_bar satisfies
// d(r_bar) = r r_hat - r_check r.
struct EquivalenceData {
    Term r;
    Term r_prime;
    Term r_hat;
    Term r_check;
    Term r_bar;
};

EquivalenceData promote_equivalence(const DgCategory& cat, const Term& s, const Term& s_prime, const Term& s_hat,
                                    const Term& s_check);

}  // namespace dgcat

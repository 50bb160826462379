#pragma once

#include <array>

#include "dgcat/constructions.hpp"
#include "dgcat/functor.hpp"
#include "dgcat/texpansion.hpp"

namespace dgcat {

enum class CylinderMode { Category, Algebra };

// Cyl(C) with its structure maps. In category mode Cyl(C) extends C⊔C by
// t_A, t'_A, t̂_A, ť_A, t̄_A per object A and t_f per generator f. In algebra
// mode (one object) only the t_f are added and t_A acts as the identity.
// For a localized base C[S⁻¹] the cylinder is Cyl(C)[(i₁S ⊔ i₂S)⁻¹].
struct CylinderData {
    CylinderMode mode = CylinderMode::Category;
    bool localized = false;
    CategoryPtr base;
    CategoryPtr cylinder;
    Coproduct doubled;  // C⊔C
    DgFunctor i1;
    DgFunctor i2;
    DgFunctor i;  // C⊔C -> Cyl(C)
    DgFunctor p;  // Cyl(C) -> C
    TContext context;

    const DgFunctor& inclusion(int side) const { return side == 1 ? i1 : i2; }
    Term t_of(const Term& theta) const { return expand_t(context, theta); }
    Term t_object(const ObjectId& object) const { return context.t_of_object(object); }
};

CylinderData cyl_object(const CategoryPtr& cat, CylinderMode mode = CylinderMode::Category);
Term t_of(const CylinderData& cyl, const Term& theta);
// Cyl(F): Cyl(C) -> Cyl(D); works for plain, algebra-mode and localized cylinders.
DgFunctor cyl_functor(const DgFunctor& f, const CylinderData& source, const CylinderData& target);

CylinderData cyl_object_loc(const CategoryPtr& cat, const std::vector<Term>& inverted);
CylinderData cyl_object_loc(const CategoryPtr& localized);
std::array<Term, 4> t_loc_inverse_generators(const CylinderData& cyl, const Term& g);
DgFunctor cyl_functor_loc(const DgFunctor& f, const CylinderData& source, const CylinderData& target);

}  // namespace dgcat

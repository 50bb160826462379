#pragma once

#include <map>

#include "dgcat/category.hpp"
#include "dgcat/functor.hpp"

namespace dgcat {

// Data needed to expand t_θ for terms θ of `base`: two functor-like images
// ("left" plays the role of i₁, "right" of i₂), the t-morphism of every
// generator and of every object. For f_n∘…∘f_1,
//   t_θ = Σ_j (-1)^{|f_1|+…+|f_{j-1}|} right(f_n…f_{j+1}) ∘ t_{f_j} ∘ left(f_{j-1}…f_1).
struct TContext {
    CategoryPtr base;
    ObjectMap left_objects;
    ObjectMap right_objects;
    GeneratorMap left;
    GeneratorMap right;
    GeneratorMap t;
    std::map<ObjectId, Term> t_object;

    Term left_of(const Term& term) const;
    Term right_of(const Term& term) const;
    const Term& t_of_generator(const std::string& name) const;
    const Term& t_of_object(const ObjectId& object) const;
};

Term expand_t(const TContext& ctx, const Term& theta);

// (-1)^{|f|}(right(f)∘t_A - t_B∘left(f)) + t_{df}: the differential required of t_f.
Term t_differential(const TContext& ctx, const Generator& f);

// Images of t_{g'}, t_{ĝ}, t_{ǧ}, t_{ḡ} for one localized morphism g. The
// context must already know left/right images of the four inverse generators.
std::array<Term, 4> localized_t_terms(const TContext& ctx, const LocalizedInverse& inverse);

// Registers the terms above as the t-values of the inverse generators.
void add_localized_t(TContext& ctx, const std::vector<LocalizedInverse>& inverses);

// The five generators t, t', t̂, ť, t̄ attached to one object, named by
// `base_name`, running between `left` and `right`.
struct TFamilyNames {
    std::string t, t_prime, t_hat, t_check, t_bar;
};
TFamilyNames t_family_names(std::string_view base_name);
void append_t_family(std::vector<Generator>& gens, std::vector<LocalizedInverse>& localized, std::string_view base_name,
                     const ObjectId& left, const ObjectId& right);

}  // namespace dgcat

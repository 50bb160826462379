#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dgcat/category.hpp"

namespace dgcat {

using ObjectMap = std::map<ObjectId, ObjectId>;
using GeneratorMap = std::map<std::string, Term>;

// Applies a generator assignment to a term of `source`. Every letter and the
// endpoints must be covered by the maps.
Term apply_assignment(const DgCategory& source, const ObjectMap& objects, const GeneratorMap& images, const Term& term);

// A dg functor between semifree categories, determined by its values on
// objects and generators.
class DgFunctor {
public:
    DgFunctor() = default;

    const CategoryPtr& source() const { return source_; }
    const CategoryPtr& target() const { return target_; }
    const ObjectMap& object_map() const { return objects_; }
    const GeneratorMap& generator_map() const { return images_; }

    const ObjectId& operator()(const ObjectId& object) const;
    const Term& image(std::string_view generator) const;
    Term operator()(const Term& term) const { return apply(term); }
    Term apply(const Term& term) const;

private:
    friend DgFunctor make_functor(CategoryPtr, CategoryPtr, ObjectMap, GeneratorMap);
    friend DgFunctor make_functor_unchecked(CategoryPtr, CategoryPtr, ObjectMap, GeneratorMap);

    CategoryPtr source_;
    CategoryPtr target_;
    ObjectMap objects_;
    GeneratorMap images_;
};

// Validates totality, endpoints, degrees and the chain map condition
// d(F f) = F(d f).
DgFunctor make_functor(CategoryPtr source, CategoryPtr target, ObjectMap objects, GeneratorMap images);
DgFunctor make_functor_unchecked(CategoryPtr source, CategoryPtr target, ObjectMap objects, GeneratorMap images);
void validate_functor(const DgFunctor& f);

DgFunctor identity_functor(const CategoryPtr& cat);
// g∘f
DgFunctor compose_functors(const DgFunctor& g, const DgFunctor& f);
bool functor_equal(const DgFunctor& a, const DgFunctor& b);

struct Coproduct {
    CategoryPtr category;
    std::vector<CategoryPtr> factors;
    std::vector<DgFunctor> inclusions;
};

// Copy r of each object and generator is tagged ^r (r = 1..k).
Coproduct coproduct(const std::vector<CategoryPtr>& factors);
const DgFunctor& inclusion(const Coproduct& sum, int r);
// [F_1, ..., F_k]: the coproduct -> common target.
DgFunctor copair(const Coproduct& sum, const std::vector<DgFunctor>& legs);
// F_1 ⊔ ... ⊔ F_k between coproducts.
DgFunctor coproduct_functor(const Coproduct& source, const Coproduct& target, const std::vector<DgFunctor>& parts);
// ∇: C⊔C -> C.
DgFunctor codiagonal(const CategoryPtr& cat);
DgFunctor codiagonal(const Coproduct& doubled);

// An inclusion functor presenting its target as a semifree extension of its
// source: injective on objects, each generator sent to a distinct generator
// with coefficient 1.
class SemifreeExtension {
public:
    SemifreeExtension() = default;
    explicit SemifreeExtension(DgFunctor inclusion);

    const DgFunctor& inclusion() const { return inclusion_; }
    const CategoryPtr& base() const { return inclusion_.source(); }
    const CategoryPtr& extension() const { return inclusion_.target(); }
    const std::vector<ObjectId>& new_objects() const { return new_objects_; }
    const std::vector<std::string>& new_generators() const { return new_generators_; }
    // Name of the generator of the extension that a base generator maps to.
    const std::string& image_name(std::string_view base_generator) const;

private:
    DgFunctor inclusion_;
    std::vector<ObjectId> new_objects_;
    std::vector<std::string> new_generators_;
    std::map<std::string, std::string> image_names_;
};

bool is_semifree_extension(const DgFunctor& f);

}  // namespace dgcat

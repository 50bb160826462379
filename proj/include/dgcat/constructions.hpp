#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgcat/functor.hpp"

namespace dgcat {

struct ExtensionResult {
    CategoryPtr category;
    SemifreeExtension inclusion;
};

// Appends objects and generators (in order) to `base`.
ExtensionResult semifree_extension(const CategoryPtr& base, std::vector<ObjectId> new_objects,
                                   std::vector<Generator> new_generators, std::vector<LocalizedInverse> new_localized = {});

// Pushout of an extension f: A -> B along g: A -> C. The result is C extended
// by the new objects of B and one generator per new generator of B, keeping
// its name.
struct PushoutResult {
    CategoryPtr category;
    SemifreeExtension f;  // A -> B
    DgFunctor g;          // A -> C
    SemifreeExtension f_bar;  // C -> D
    DgFunctor g_bar;          // B -> D
};

PushoutResult pushout(const SemifreeExtension& f, const DgFunctor& g);
// The map D -> E induced by h_b: B -> E and h_c: C -> E with h_b∘f = h_c∘g.
DgFunctor mediating_functor(const PushoutResult& p, const DgFunctor& h_b, const DgFunctor& h_c);

// Label used to name the inverse generators of the i-th localized morphism:
// the generator name for a bare generator, id.A for an identity, s<i> otherwise.
std::string localization_label(const Term& morphism, std::size_t index);
std::array<std::string, 4> localization_names(const std::string& label);

// Adjoins g', ĝ, ǧ, ḡ for each closed degree-0 morphism, appended after all
// existing generators in that order.
ExtensionResult localize(const CategoryPtr& cat, const std::vector<Term>& morphisms);
ExtensionResult localize_named(const CategoryPtr& cat, const std::vector<LocalizedInverse>& data);

// Splits off the localization generators, returning the base presentation
// and the recorded data.
struct Delocalization {
    CategoryPtr base;
    std::vector<LocalizedInverse> inverses;
};
Delocalization delocalize(const CategoryPtr& cat);

// f ↦ unit·f + shift, with shift built from earlier generators.
struct BasisChange {
    Scalar unit = 1;
    std::optional<Term> shift;
};

struct ChangeOfBasis {
    CategoryPtr category;
    DgFunctor to_new;  // old -> new
    DgFunctor to_old;  // new -> old
};

ChangeOfBasis change_basis(const CategoryPtr& cat, const std::map<std::string, BasisChange>& changes);

// Removes pairs (a, b) with da = b.
struct Destabilization {
    CategoryPtr category;
    DgFunctor inclusion;
};
Destabilization destabilize(const CategoryPtr& cat, const std::vector<std::pair<std::string, std::string>>& pairs);

struct StabilizationPair {
    std::string a;
    std::string b;
    ObjectId source;
    ObjectId target;
    int degree = 0;  // degree of a
};
ExtensionResult stabilize(const CategoryPtr& cat, const std::vector<StabilizationPair>& pairs);

// Presentations related by renaming objects and generators.
CategoryPtr rename(const CategoryPtr& cat, const std::map<ObjectId, ObjectId>& objects,
                   const std::map<std::string, std::string>& generators);

}  // namespace dgcat

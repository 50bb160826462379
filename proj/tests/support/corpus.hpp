#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dgcat/constructions.hpp"
#include "dgcat/hocolim.hpp"
#include "dgcat/homotopy.hpp"

namespace dgcat::testing {

using Rng = std::mt19937_64;

struct CorpusLimits {
    int max_objects = 4;
    int max_generators = 6;
    int min_degree = -3;
    int max_degree = 3;
};

// Builds a source category generator by generator together with functors into
// each target, so that every functor is a chain map by construction. With no
// targets this is just a random semifree presentation.
class SourceBuilder {
public:
    SourceBuilder(std::vector<CategoryPtr> targets, Rng& rng, CorpusLimits limits = {},
                  std::optional<CoefficientRing> ring = std::nullopt);
    // Continues from an existing source and its functors into the targets.
    SourceBuilder(const CategoryPtr& start, const std::vector<DgFunctor>& functors, Rng& rng, CorpusLimits limits = {});

    void add_object();
    bool add_generator();
    void grow(int objects, int generators);

    CategoryPtr category() const;
    std::vector<DgFunctor> functors(const CategoryPtr& source) const;
    const std::vector<ObjectId>& new_objects() const { return new_objects_; }
    const std::vector<std::string>& new_generators() const { return new_generators_; }

private:
    DgCategory snapshot() const;
    std::string fresh_name();
    Scalar coefficient();
    bool add_closed();
    bool add_exact_of_path();
    bool add_bounding_closed_path();

    std::vector<CategoryPtr> targets_;
    Rng& rng_;
    CorpusLimits limits_;
    CoefficientRing ring_;
    std::vector<ObjectId> objects_;
    std::vector<Generator> gens_;
    std::vector<ObjectMap> object_maps_;
    std::vector<GeneratorMap> images_;
    // primitives_[i][g]: a term e of target i with de = F_i(g), for closed g.
    std::vector<std::map<std::string, Term>> primitives_;
    std::vector<ObjectId> new_objects_;
    std::vector<std::string> new_generators_;
    int counter_ = 0;
};

CategoryPtr random_category(Rng& rng, CorpusLimits limits = {});
// Deterministic corpus of `count` categories from `seed`.
std::vector<CategoryPtr> category_corpus(std::uint64_t seed, int count, CorpusLimits limits = {});

// A path following random arrows, possibly empty; a zero term if the walk
// cannot respect the limits.
Term random_walk(const DgCategory& cat, Rng& rng, int max_length, bool closed_letters_only = false);
// Random linear combination of parallel paths of equal degree, sometimes with
// an identity component.
Term random_term(const DgCategory& cat, Rng& rng);

// θ written as Σ c_i θ_{i,n}∘…∘θ_{i,1} with arbitrary factors, plus c·1.
struct Regrouping {
    std::vector<Scalar> coefficients;
    std::vector<std::vector<Term>> factors;  // inner factor first
    std::optional<Scalar> identity_coefficient;
    ObjectId source;
    ObjectId target;
    Term total() const;
};
std::optional<Regrouping> random_regrouping(const DgCategory& cat, Rng& rng);

CoefficientRing random_ring(Rng& rng);
DgFunctor random_functor_into(const CategoryPtr& target, Rng& rng, CorpusLimits limits = {});
Span random_span(Rng& rng, CorpusLimits limits = {});
Span random_span_over(const CategoryPtr& left, const CategoryPtr& right, Rng& rng, CorpusLimits limits = {});

// f precomposed: (id, F, id) from (α∘F, β∘F) to x.
SpanMorphism random_span_morphism_into(const Span& x, Rng& rng, CorpusLimits limits = {});

// A commuting square β∘F = F'∘α with F given as `source`.
struct Square {
    DgFunctor source;  // F: A -> B
    DgFunctor target;  // F': A' -> B'
    DgFunctor alpha;   // A -> A'
    DgFunctor beta;    // B -> B'
};
// Two composable squares F -> F' -> F''.
std::pair<Square, Square> random_composable_squares(Rng& rng, CorpusLimits limits = {});

struct HepTriple {
    SemifreeExtension f;
    int side = 1;
    DgFunctor g;
    DgFunctor h;
};
HepTriple random_hep_triple(Rng& rng, CorpusLimits limits = {});

// A category with a single non-closed generator among closed ones.
CategoryPtr category_with_one_nonclosed_generator();

}  // namespace dgcat::testing

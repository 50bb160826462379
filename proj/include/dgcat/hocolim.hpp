#pragma once

#include "dgcat/constructions.hpp"
#include "dgcat/cylinder.hpp"
#include "dgcat/functor.hpp"
#include "dgcat/texpansion.hpp"

namespace dgcat {

// A ←α C →β B.
struct Span {
    DgFunctor alpha;
    DgFunctor beta;

    const CategoryPtr& apex() const { return alpha.source(); }
    const CategoryPtr& left() const { return alpha.target(); }
    const CategoryPtr& right() const { return beta.target(); }
};

Span make_span(DgFunctor alpha, DgFunctor beta);

struct SpanMorphism {
    Span source;
    Span target;
    DgFunctor on_left;   // A -> A'
    DgFunctor on_apex;   // C -> C'
    DgFunctor on_right;  // B -> B'
};

// Checks on_left∘α = α'∘on_apex and on_right∘β = β'∘on_apex.
SpanMorphism make_span_morphism(Span source, Span target, DgFunctor on_left, DgFunctor on_apex, DgFunctor on_right);
SpanMorphism identity_span_morphism(const Span& x);
SpanMorphism compose_span_morphisms(const SpanMorphism& g, const SpanMorphism& f);

// The presentation of hocolim(X) together with the data to expand t_θ.
struct HocolimData {
    CategoryPtr category;
    Coproduct sum;  // A⊔B
    TContext context;
    bool localized = false;
};

HocolimData hocolim_data(const Span& x);
HocolimData hocolim_data_loc(const Span& x);

CategoryPtr hocolim_object(const Span& x);
DgFunctor hocolim_morphism(const SpanMorphism& f);
CategoryPtr hocolim_object_loc(const Span& x);
DgFunctor hocolim_morphism_loc(const SpanMorphism& f);

// T(X) = (A⊔B ← C⊔C → C) with legs α⊔β and ∇.
Span t_diagram(const Span& x);
SpanMorphism t_diagram(const SpanMorphism& f);

// Q(T X) replaces ∇ by i: C⊔C -> Cyl(C); the projection Q(T X) -> T X is
// (1, 1, p).
struct CofibrantResolution {
    Span resolved;
    SpanMorphism projection;
    CylinderData cylinder;
};

CofibrantResolution cofibrant_resolution(const Span& tx);
SpanMorphism cofibrant_resolution(const SpanMorphism& tf, const CofibrantResolution& source, const CofibrantResolution& target);

// Colimit of a span whose right leg is a semifree extension.
PushoutResult span_colimit(const Span& x);

// hocolim computed as colim(Q(T X)), and its action on morphisms.
CategoryPtr hocolim_via_resolution(const Span& x);
DgFunctor hocolim_morphism_via_resolution(const SpanMorphism& f);

}  // namespace dgcat

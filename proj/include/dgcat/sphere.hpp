#pragma once

#include <optional>
#include <string>

#include "dgcat/hocolim.hpp"

namespace dgcat {

// Presentation variants for the circle and the 2-sphere. They change only
// the simplified model; the gluing data and its comparison maps exist for the
// standard choices.
struct SphereOptions {
    std::optional<int> circle_degree;  // n = 1: |z| = m, no localization
    bool doubled_background = false;   // n = 2: dz = 2·1_L
    bool standard() const { return !circle_degree && !doubled_background; }
};

// The simplified model of the cotangent bundle of Sⁿ: one object L and one
// generator `var` of degree 1-n with dvar = 0, localized at var when n = 1.
CategoryPtr sphere_model(int n, const std::string& var = "z", const SphereOptions& options = {});

// The gluing span 𝟙 ← middle → 𝟙 (objects K1, K2), its homotopy colimit and
// the two comparison functors between hocolim and the simplified model. The
// comparison functors are left empty for nonstandard options.
struct SphereFixture {
    int n = 0;
    std::string var;
    SphereOptions options;
    CategoryPtr left;
    CategoryPtr right;
    CategoryPtr middle;
    Span span;
    HocolimData hocolim;
    CategoryPtr model;
    DgFunctor to_model;    // hocolim -> model
    DgFunctor from_model;  // model -> hocolim
};

SphereFixture build_fixture(int n, const std::string& var = "z", const SphereOptions& options = {});

struct Reflection {
    SpanMorphism on_span;
    DgFunctor on_hocolim;
    DgFunctor on_model;  // to_model ∘ on_hocolim ∘ from_model
};

Reflection derive_reflection(const SphereFixture& fixture);
Reflection derive_reflection(int n, const std::string& var = "z");

}  // namespace dgcat

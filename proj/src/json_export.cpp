#include "dgcat/json_export.hpp"

namespace dgcat {

using nlohmann::ordered_json;

ordered_json term_to_json(const Term& term)
{
    ordered_json terms = ordered_json::array();
    for (const auto& [word, c] : term.support()) {
        ordered_json path = ordered_json::array();
        for (auto it = word.rbegin(); it != word.rend(); ++it) path.push_back(*it);
        terms.push_back({{"coefficient", c.str()}, {"path", path}});
    }
    return {{"source", term.source().str()}, {"target", term.target().str()}, {"degree", term.degree()}, {"terms", terms}};
}

ordered_json category_to_json(std::string_view name, const DgCategory& cat)
{
    ordered_json objects = ordered_json::array();
    for (const auto& o : cat.objects()) objects.push_back(o.str());
    ordered_json gens = ordered_json::array();
    for (const auto& g : cat.generators())
        gens.push_back({{"name", g.name},
                        {"source", g.source.str()},
                        {"target", g.target.str()},
                        {"degree", g.degree},
                        {"differential", term_to_json(g.differential)}});
    ordered_json localized = ordered_json::array();
    for (const auto& loc : cat.localized())
        localized.push_back({{"morphism", term_to_json(loc.morphism)},
                             {"names", {loc.names[0], loc.names[1], loc.names[2], loc.names[3]}}});
    return {{"name", std::string(name)},
            {"ring", cat.ring().str()},
            {"objects", objects},
            {"generators", gens},
            {"localized", localized}};
}

namespace {

std::string name_or_throw(const std::optional<std::string>& n, const std::string& what)
{
    if (!n) throw DgError(ErrorCode::ResolutionError, what + " is not part of the workspace");
    return *n;
}

}  // namespace

ordered_json workspace_to_json(const Workspace& ws)
{
    ordered_json cats = ordered_json::array();
    for (const auto& e : ws.categories.entries()) cats.push_back(category_to_json(e.name, *e.value));

    ordered_json functors = ordered_json::array();
    for (const auto& e : ws.functors.entries()) {
        const DgFunctor& f = e.value;
        ordered_json objects = ordered_json::array();
        for (const auto& o : f.source()->objects()) objects.push_back({{"object", o.str()}, {"image", f(o).str()}});
        ordered_json gens = ordered_json::array();
        for (const auto& g : f.source()->generators())
            gens.push_back({{"generator", g.name}, {"image", term_to_json(f.image(g.name))}});
        functors.push_back({{"name", e.name},
                            {"source", name_or_throw(ws.name_of(f.source()), "source of " + e.name)},
                            {"target", name_or_throw(ws.name_of(f.target()), "target of " + e.name)},
                            {"objects", objects},
                            {"generators", gens}});
    }

    ordered_json spans = ordered_json::array();
    for (const auto& e : ws.spans.entries())
        spans.push_back({{"name", e.name},
                         {"left", name_or_throw(ws.name_of(e.value.alpha), "left leg of " + e.name)},
                         {"right", name_or_throw(ws.name_of(e.value.beta), "right leg of " + e.name)}});

    ordered_json maps = ordered_json::array();
    for (const auto& e : ws.span_morphisms.entries()) {
        const SpanMorphism& m = e.value;
        maps.push_back({{"name", e.name},
                        {"source", name_or_throw(ws.name_of(m.source), "source of " + e.name)},
                        {"target", name_or_throw(ws.name_of(m.target), "target of " + e.name)},
                        {"left", name_or_throw(ws.name_of(m.on_left), "left part of " + e.name)},
                        {"middle", name_or_throw(ws.name_of(m.on_apex), "middle part of " + e.name)},
                        {"right", name_or_throw(ws.name_of(m.on_right), "right part of " + e.name)}});
    }
    return {{"categories", cats}, {"functors", functors}, {"spans", spans}, {"span_morphisms", maps}};
}

}  // namespace dgcat

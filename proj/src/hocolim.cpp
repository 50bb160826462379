#include "dgcat/hocolim.hpp"

#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

Span make_span(DgFunctor alpha, DgFunctor beta)
{
    if (!same_category(alpha.source(), beta.source())) throw DgError(ErrorCode::SourceTargetMismatch, "span legs have different sources");
    return Span{std::move(alpha), std::move(beta)};
}

SpanMorphism make_span_morphism(Span source, Span target, DgFunctor on_left, DgFunctor on_apex, DgFunctor on_right)
{
    auto check = [](bool ok, const char* what) {
        if (!ok) throw DgError(ErrorCode::SourceTargetMismatch, std::string("span morphism component ") + what + " has the wrong type");
    };
    check(same_category(on_left.source(), source.left()) && same_category(on_left.target(), target.left()), "left");
    check(same_category(on_apex.source(), source.apex()) && same_category(on_apex.target(), target.apex()), "apex");
    check(same_category(on_right.source(), source.right()) && same_category(on_right.target(), target.right()), "right");
    if (!functor_equal(compose_functors(on_left, source.alpha), compose_functors(target.alpha, on_apex)))
        throw DgError(ErrorCode::SquareNotCommuting, "left square does not commute");
    if (!functor_equal(compose_functors(on_right, source.beta), compose_functors(target.beta, on_apex)))
        throw DgError(ErrorCode::SquareNotCommuting, "right square does not commute");
    return SpanMorphism{std::move(source), std::move(target), std::move(on_left), std::move(on_apex), std::move(on_right)};
}

SpanMorphism identity_span_morphism(const Span& x)
{
    return SpanMorphism{x, x, identity_functor(x.left()), identity_functor(x.apex()), identity_functor(x.right())};
}

SpanMorphism compose_span_morphisms(const SpanMorphism& g, const SpanMorphism& f)
{
    return make_span_morphism(f.source, g.target, compose_functors(g.on_left, f.on_left), compose_functors(g.on_apex, f.on_apex),
                              compose_functors(g.on_right, f.on_right));
}

namespace {

HocolimData build_hocolim(const Span& x, const CategoryPtr& apex, const std::vector<LocalizedInverse>& inverses)
{
    HocolimData h;
    h.sum = coproduct({x.left(), x.right()});
    const DgFunctor& in1 = h.sum.inclusions[0];
    const DgFunctor& in2 = h.sum.inclusions[1];

    TContext& ctx = h.context;
    ctx.base = apex;
    for (const auto& o : x.apex()->objects()) {
        ctx.left_objects.emplace(o, in1(x.alpha(o)));
        ctx.right_objects.emplace(o, in2(x.beta(o)));
    }
    for (const auto& g : x.apex()->generators()) {
        ctx.left.emplace(g.name, in1(x.alpha.image(g.name)));
        ctx.right.emplace(g.name, in2(x.beta.image(g.name)));
    }

    const DgCategory& sum = *h.sum.category;
    std::vector<Generator> added;
    std::vector<LocalizedInverse> localized = sum.localized();
    for (const auto& o : apex->objects()) {
        const ObjectId& l = ctx.left_objects.at(o);
        const ObjectId& r = ctx.right_objects.at(o);
        append_t_family(added, localized, o.str(), l, r);
        ctx.t_object.emplace(o, Term::path(l, r, 0, {derived_name(prefix::t, o.str())}));
    }
    for (const auto& f : apex->generators()) {
        std::string name = derived_name(prefix::t, f.name);
        const ObjectId& s = ctx.left_objects.at(f.source);
        const ObjectId& e = ctx.right_objects.at(f.target);
        added.push_back({name, s, e, f.degree - 1, t_differential(ctx, f)});
        ctx.t.emplace(f.name, Term::path(s, e, f.degree - 1, {name}));
    }
    std::set<std::string> names;
    for (const auto& g : sum.generators()) names.insert(g.name);
    for (const auto& g : added)
        if (!names.insert(g.name).second) throw DgError(ErrorCode::NameCollision, "constructed name " + g.name + " is already taken", g.name);
    std::vector<Generator> gens = sum.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    h.category = make_presentation(sum.objects(), std::move(gens), sum.ring(), std::move(localized));
    if (!inverses.empty()) {
        ctx.base = x.apex();
        add_localized_t(ctx, inverses);
        h.localized = true;
    }
    return h;
}

DgFunctor hocolim_map(const SpanMorphism& f, const HocolimData& src, const HocolimData& dst)
{
    const Span& x = f.source;
    ObjectMap om;
    GeneratorMap gm;
    const DgFunctor& in1 = dst.sum.inclusions[0];
    const DgFunctor& in2 = dst.sum.inclusions[1];
    for (const auto& o : x.left()->objects()) om.emplace(ObjectId::tagged(o, 1), in1(f.on_left(o)));
    for (const auto& o : x.right()->objects()) om.emplace(ObjectId::tagged(o, 2), in2(f.on_right(o)));
    for (const auto& g : x.left()->generators()) gm.emplace(tagged_name(g.name, 1), in1(f.on_left.image(g.name)));
    for (const auto& g : x.right()->generators()) gm.emplace(tagged_name(g.name, 2), in2(f.on_right.image(g.name)));
    const DgCategory& target = *dst.category;
    for (const auto& o : x.apex()->objects()) {
        TFamilyNames from = t_family_names(o.str());
        TFamilyNames to = t_family_names(f.on_apex(o).str());
        gm.emplace(from.t, target.gen(to.t));
        gm.emplace(from.t_prime, target.gen(to.t_prime));
        gm.emplace(from.t_hat, target.gen(to.t_hat));
        gm.emplace(from.t_check, target.gen(to.t_check));
        gm.emplace(from.t_bar, target.gen(to.t_bar));
    }
    for (const auto& g : x.apex()->generators()) {
        std::string tname = derived_name(prefix::t, g.name);
        if (src.category->has_generator(tname)) gm.emplace(tname, expand_t(dst.context, f.on_apex.image(g.name)));
    }
    return make_functor(src.category, dst.category, std::move(om), std::move(gm));
}

}  // namespace

HocolimData hocolim_data(const Span& x)
{
    return build_hocolim(x, x.apex(), {});
}

HocolimData hocolim_data_loc(const Span& x)
{
    Delocalization split = delocalize(x.apex());
    return build_hocolim(x, split.base, split.inverses);
}

CategoryPtr hocolim_object(const Span& x)
{
    return hocolim_data(x).category;
}

CategoryPtr hocolim_object_loc(const Span& x)
{
    return hocolim_data_loc(x).category;
}

DgFunctor hocolim_morphism(const SpanMorphism& f)
{
    return hocolim_map(f, hocolim_data(f.source), hocolim_data(f.target));
}

DgFunctor hocolim_morphism_loc(const SpanMorphism& f)
{
    return hocolim_map(f, hocolim_data_loc(f.source), hocolim_data_loc(f.target));
}

Span t_diagram(const Span& x)
{
    Coproduct sum = coproduct({x.left(), x.right()});
    Coproduct doubled = coproduct({x.apex(), x.apex()});
    return make_span(coproduct_functor(doubled, sum, {x.alpha, x.beta}), codiagonal(doubled));
}

SpanMorphism t_diagram(const SpanMorphism& f)
{
    Span tx = t_diagram(f.source);
    Span ty = t_diagram(f.target);
    Coproduct sum = coproduct({f.source.left(), f.source.right()});
    Coproduct sum2 = coproduct({f.target.left(), f.target.right()});
    Coproduct doubled = coproduct({f.source.apex(), f.source.apex()});
    Coproduct doubled2 = coproduct({f.target.apex(), f.target.apex()});
    return make_span_morphism(tx, ty, coproduct_functor(sum, sum2, {f.on_left, f.on_right}),
                              coproduct_functor(doubled, doubled2, {f.on_apex, f.on_apex}), f.on_apex);
}

CofibrantResolution cofibrant_resolution(const Span& tx)
{
    const CategoryPtr& c = tx.right();
    Coproduct doubled = coproduct({c, c});
    if (!same_category(tx.apex(), doubled.category) || !functor_equal(tx.beta, codiagonal(doubled)))
        throw DgError(ErrorCode::ShapeMismatch, "right leg is not a codiagonal C⊔C -> C");
    CofibrantResolution q;
    q.cylinder = cyl_object(c);
    q.resolved = make_span(tx.alpha, q.cylinder.i);
    q.projection = make_span_morphism(q.resolved, tx, identity_functor(tx.left()), identity_functor(tx.apex()), q.cylinder.p);
    return q;
}

SpanMorphism cofibrant_resolution(const SpanMorphism& tf, const CofibrantResolution& source, const CofibrantResolution& target)
{
    return make_span_morphism(source.resolved, target.resolved, tf.on_left, tf.on_apex,
                              cyl_functor(tf.on_right, source.cylinder, target.cylinder));
}

PushoutResult span_colimit(const Span& x)
{
    return pushout(SemifreeExtension(x.beta), x.alpha);
}

CategoryPtr hocolim_via_resolution(const Span& x)
{
    return span_colimit(cofibrant_resolution(t_diagram(x)).resolved).category;
}

DgFunctor hocolim_morphism_via_resolution(const SpanMorphism& f)
{
    CofibrantResolution qs = cofibrant_resolution(t_diagram(f.source));
    CofibrantResolution qt = cofibrant_resolution(t_diagram(f.target));
    SpanMorphism qf = cofibrant_resolution(t_diagram(f), qs, qt);
    PushoutResult ps = span_colimit(qs.resolved);
    PushoutResult pt = span_colimit(qt.resolved);
    DgFunctor h_b = compose_functors(pt.g_bar, qf.on_right);
    DgFunctor h_c = compose_functors(pt.f_bar.inclusion(), qf.on_left);
    return mediating_functor(ps, h_b, h_c);
}

}  // namespace dgcat

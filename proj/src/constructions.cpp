#include "dgcat/constructions.hpp"

#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

namespace {

SemifreeExtension identity_named_inclusion(const CategoryPtr& base, const CategoryPtr& ext)
{
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : base->objects()) om.emplace(o, o);
    for (const auto& g : base->generators()) gm.emplace(g.name, ext->gen(g.name));
    return SemifreeExtension(make_functor_unchecked(base, ext, std::move(om), std::move(gm)));
}

bool uses_any(const Term& t, const std::set<std::string>& names)
{
    for (const auto& [word, c] : t.support())
        for (const auto& letter : word)
            if (names.count(letter)) return true;
    return false;
}

}  // namespace

ExtensionResult semifree_extension(const CategoryPtr& base, std::vector<ObjectId> new_objects,
                                   std::vector<Generator> new_generators, std::vector<LocalizedInverse> new_localized)
{
    std::vector<ObjectId> objects = base->objects();
    for (auto& o : new_objects) {
        if (base->has_object(o)) throw DgError(ErrorCode::NameCollision, "object " + o.str() + " already exists", o.str());
        objects.push_back(std::move(o));
    }
    std::vector<Generator> gens = base->generators();
    for (auto& g : new_generators) {
        if (base->has_generator(g.name)) throw DgError(ErrorCode::NameCollision, "generator " + g.name + " already exists", g.name);
        gens.push_back(std::move(g));
    }
    std::vector<LocalizedInverse> localized = base->localized();
    for (auto& l : new_localized) localized.push_back(std::move(l));
    CategoryPtr ext = make_presentation(std::move(objects), std::move(gens), base->ring(), std::move(localized));
    return {ext, identity_named_inclusion(base, ext)};
}

PushoutResult pushout(const SemifreeExtension& f, const DgFunctor& g)
{
    if (!same_category(f.base(), g.source()))
        throw DgError(ErrorCode::SourceTargetMismatch, "pushout legs do not share a source");
    const DgCategory& b = *f.extension();
    const CategoryPtr& c = g.target();

    ObjectMap om;  // B -> D
    GeneratorMap gm;
    for (const auto& o : f.base()->objects()) om.emplace(f.inclusion()(o), g(o));
    for (const auto& a : f.base()->generators()) gm.emplace(f.image_name(a.name), g.image(a.name));

    std::vector<ObjectId> objects = c->objects();
    for (const auto& r : f.new_objects()) {
        if (c->has_object(r)) throw DgError(ErrorCode::NameCollision, "object " + r.str() + " exists on both sides of the pushout", r.str());
        objects.push_back(r);
        om.emplace(r, r);
    }
    std::vector<Generator> gens = c->generators();
    for (const auto& name : f.new_generators()) {
        if (c->has_generator(name))
            throw DgError(ErrorCode::NameCollision, "generator " + name + " exists on both sides of the pushout", name);
        const Generator& s = b.generator(name);
        Generator bar{name, om.at(s.source), om.at(s.target), s.degree, apply_assignment(b, om, gm, s.differential)};
        gm.emplace(name, Term::path(bar.source, bar.target, bar.degree, {name}));
        gens.push_back(std::move(bar));
    }
    std::set<std::string> fresh(f.new_generators().begin(), f.new_generators().end());
    std::vector<LocalizedInverse> localized = c->localized();
    for (const auto& loc : b.localized()) {
        bool all_new = true;
        for (const auto& n : loc.names) all_new = all_new && fresh.count(n);
        if (all_new) localized.push_back({apply_assignment(b, om, gm, loc.morphism), loc.names});
    }
    CategoryPtr d = make_presentation(std::move(objects), std::move(gens), c->ring(), std::move(localized));
    for (auto& [name, t] : gm) {
        if (fresh.count(name)) t = d->gen(name);
    }
    PushoutResult p;
    p.category = d;
    p.f = f;
    p.g = g;
    p.f_bar = identity_named_inclusion(c, d);
    p.g_bar = make_functor(f.extension(), d, std::move(om), std::move(gm));
    return p;
}

DgFunctor mediating_functor(const PushoutResult& p, const DgFunctor& h_b, const DgFunctor& h_c)
{
    if (!same_category(h_b.source(), p.f.extension()) || !same_category(h_c.source(), p.g.target()) ||
        !same_category(h_b.target(), h_c.target()))
        throw DgError(ErrorCode::SourceTargetMismatch, "cone legs do not match the pushout");
    if (!functor_equal(compose_functors(h_b, p.f.inclusion()), compose_functors(h_c, p.g)))
        throw DgError(ErrorCode::ConeNotCommuting, "h_b∘f and h_c∘g differ");
    ObjectMap om = h_c.object_map();
    GeneratorMap gm = h_c.generator_map();
    for (const auto& r : p.f.new_objects()) om.emplace(r, h_b(r));
    for (const auto& name : p.f.new_generators()) gm.emplace(name, h_b.image(name));
    return make_functor(p.category, h_b.target(), std::move(om), std::move(gm));
}

std::string localization_label(const Term& morphism, std::size_t index)
{
    if (morphism.support().size() == 1 && morphism.support().begin()->second.is_one()) {
        const Word& w = morphism.support().begin()->first;
        if (w.size() == 1) return w.front();
        if (w.empty()) return derived_name("id", morphism.source().str());
    }
    return "s" + std::to_string(index);
}

std::array<std::string, 4> localization_names(const std::string& label)
{
    return {derived_name(prefix::inv, label), derived_name(prefix::inv_hat, label), derived_name(prefix::inv_check, label),
            derived_name(prefix::inv_bar, label)};
}

ExtensionResult localize_named(const CategoryPtr& cat, const std::vector<LocalizedInverse>& data)
{
    std::vector<Generator> gens;
    for (const auto& loc : data) {
        const Term& g = loc.morphism;
        validate_term(*cat, g);
        if (!g.is_zero() && g.degree() != 0)
            throw DgError(ErrorCode::NotDegreeZero, "cannot invert " + to_string(g) + " of degree " + std::to_string(g.degree()));
        if (!diff(*cat, g).is_zero()) throw DgError(ErrorCode::NotClosed, "cannot invert non-closed " + to_string(g));
        const ObjectId& a = g.source();
        const ObjectId& b = g.target();
        Term gp = Term::path(b, a, 0, {loc.names[0]});
        Term gh = Term::path(a, a, -1, {loc.names[1]});
        Term gc = Term::path(b, b, -1, {loc.names[2]});
        gens.push_back({loc.names[0], b, a, 0, Term(b, a, 1)});
        gens.push_back({loc.names[1], a, a, -1, Term::identity(a) - compose(gp, g)});
        gens.push_back({loc.names[2], b, b, -1, Term::identity(b) - compose(g, gp)});
        gens.push_back({loc.names[3], a, b, -2, compose(g, gh) - compose(gc, g)});
    }
    return semifree_extension(cat, {}, std::move(gens), data);
}

ExtensionResult localize(const CategoryPtr& cat, const std::vector<Term>& morphisms)
{
    std::vector<LocalizedInverse> data;
    std::size_t index = cat->localized().size();
    for (const auto& g : morphisms) data.push_back({g, localization_names(localization_label(g, ++index))});
    return localize_named(cat, data);
}

Delocalization delocalize(const CategoryPtr& cat)
{
    if (cat->localized().empty()) throw DgError(ErrorCode::NotLocalized, "category carries no localization data");
    std::set<std::string> removed;
    for (const auto& loc : cat->localized())
        for (const auto& n : loc.names) removed.insert(n);
    std::vector<Generator> gens;
    for (const auto& g : cat->generators()) {
        if (removed.count(g.name)) continue;
        if (uses_any(g.differential, removed))
            throw DgError(ErrorCode::GeneratorStillUsed, "differential of " + g.name + " uses an inverse generator", g.name);
        gens.push_back(g);
    }
    for (const auto& loc : cat->localized()) {
        if (uses_any(loc.morphism, removed))
            throw DgError(ErrorCode::GeneratorStillUsed, "localized morphism " + to_string(loc.morphism) + " uses an inverse generator");
    }
    Delocalization d;
    d.base = make_presentation(cat->objects(), std::move(gens), cat->ring());
    d.inverses = cat->localized();
    return d;
}

ChangeOfBasis change_basis(const CategoryPtr& cat, const std::map<std::string, BasisChange>& changes)
{
    const DgCategory& c = *cat;
    for (const auto& [name, change] : changes) {
        const Generator& f = c.generator(name);
        if (!c.ring().is_unit(change.unit)) throw DgError(ErrorCode::NotAUnit, change.unit.str() + " is not a unit", name);
        if (change.shift) {
            const Term& s = *change.shift;
            if (s.source() != f.source || s.target() != f.target)
                throw DgError(ErrorCode::EndpointMismatch, "shift of " + name + " has the wrong endpoints", name);
            if (!s.is_zero() && s.degree() != f.degree)
                throw DgError(ErrorCode::DegreeMismatch, "shift of " + name + " has the wrong degree", name);
            validate_term(c, s);
            const std::size_t at = c.index_of(name);
            for (const auto& [word, coeff] : s.support())
                for (const auto& letter : word)
                    if (c.index_of(letter) >= at)
                        throw DgError(ErrorCode::OrderViolation, "shift of " + name + " uses " + letter + ", which is not earlier", name);
        }
    }
    ObjectMap ids;
    for (const auto& o : c.objects()) ids.emplace(o, o);
    GeneratorMap to_new;
    GeneratorMap to_old;
    std::vector<Generator> gens;
    for (const auto& f : c.generators()) {
        Term fresh = Term::path(f.source, f.target, f.degree, {f.name});
        Term old = c.gen(f.name);
        auto it = changes.find(f.name);
        Scalar unit = 1;
        Term shift(f.source, f.target, f.degree);
        if (it != changes.end()) {
            unit = c.ring().element(it->second.unit);
            if (it->second.shift) shift = *it->second.shift;
        }
        // d f̃ = P(d(u f + g))
        Term d_old = unit * f.differential + diff(c, shift);
        gens.push_back({f.name, f.source, f.target, f.degree, apply_assignment(c, ids, to_new, d_old)});
        to_old.emplace(f.name, unit * old + shift);
        to_new.emplace(f.name, c.ring().inverse(unit) * (fresh - apply_assignment(c, ids, to_new, shift)));
    }
    std::set<std::string> changed;
    for (const auto& [name, change] : changes) changed.insert(name);
    std::vector<LocalizedInverse> localized;
    for (const auto& loc : c.localized()) {
        bool untouched = true;
        for (const auto& n : loc.names) untouched = untouched && !changed.count(n);
        if (untouched) localized.push_back({apply_assignment(c, ids, to_new, loc.morphism), loc.names});
    }
    ChangeOfBasis result;
    result.category = make_presentation(c.objects(), std::move(gens), c.ring(), std::move(localized));
    result.to_new = make_functor(cat, result.category, ids, std::move(to_new));
    result.to_old = make_functor(result.category, cat, ids, std::move(to_old));
    return result;
}

Destabilization destabilize(const CategoryPtr& cat, const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::set<std::string> removed;
    for (const auto& [a, b] : pairs) {
        const Generator& ga = cat->generator(a);
        cat->generator(b);
        if (!(ga.differential == cat->gen(b)))
            throw DgError(ErrorCode::NotAStabilizationPair, "d" + a + " is not " + b, a);
        removed.insert(a);
        removed.insert(b);
    }
    std::vector<Generator> gens;
    for (const auto& g : cat->generators()) {
        if (removed.count(g.name)) continue;
        if (uses_any(g.differential, removed))
            throw DgError(ErrorCode::GeneratorStillUsed, "differential of " + g.name + " uses a removed generator", g.name);
        gens.push_back(g);
    }
    std::vector<LocalizedInverse> localized;
    for (const auto& loc : cat->localized()) {
        bool hits = uses_any(loc.morphism, removed);
        for (const auto& n : loc.names) hits = hits || removed.count(n);
        if (hits) throw DgError(ErrorCode::GeneratorStillUsed, "localization data uses a removed generator");
        localized.push_back(loc);
    }
    Destabilization d;
    d.category = make_presentation(cat->objects(), std::move(gens), cat->ring(), std::move(localized));
    d.inclusion = identity_named_inclusion(d.category, cat).inclusion();
    return d;
}

ExtensionResult stabilize(const CategoryPtr& cat, const std::vector<StabilizationPair>& pairs)
{
    std::vector<Generator> gens;
    for (const auto& p : pairs) {
        gens.push_back({p.b, p.source, p.target, p.degree + 1, Term(p.source, p.target, p.degree + 2)});
        gens.push_back({p.a, p.source, p.target, p.degree, Term::path(p.source, p.target, p.degree + 1, {p.b})});
    }
    return semifree_extension(cat, {}, std::move(gens));
}

CategoryPtr rename(const CategoryPtr& cat, const std::map<ObjectId, ObjectId>& objects,
                   const std::map<std::string, std::string>& generators)
{
    auto obj = [&](const ObjectId& o) {
        auto it = objects.find(o);
        return it == objects.end() ? o : it->second;
    };
    auto gen = [&](const std::string& n) {
        auto it = generators.find(n);
        return it == generators.end() ? n : it->second;
    };
    auto term = [&](const Term& t) {
        Term out(obj(t.source()), obj(t.target()), t.degree());
        for (const auto& [word, c] : t.support()) {
            Word w;
            for (const auto& letter : word) w.push_back(gen(letter));
            out.add(w, c);
        }
        return out;
    };
    std::vector<ObjectId> objs;
    for (const auto& o : cat->objects()) objs.push_back(obj(o));
    std::vector<Generator> gens;
    for (const auto& g : cat->generators()) gens.push_back({gen(g.name), obj(g.source), obj(g.target), g.degree, term(g.differential)});
    std::vector<LocalizedInverse> localized;
    for (const auto& loc : cat->localized())
        localized.push_back({term(loc.morphism), {gen(loc.names[0]), gen(loc.names[1]), gen(loc.names[2]), gen(loc.names[3])}});
    return std::make_shared<const DgCategory>(std::move(objs), std::move(gens), cat->ring(), std::move(localized));
}

}  // namespace dgcat

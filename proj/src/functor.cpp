#include "dgcat/functor.hpp"

#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

Term apply_assignment(const DgCategory& source, const ObjectMap& objects, const GeneratorMap& images, const Term& term)
{
    auto object_image = [&](const ObjectId& o) -> const ObjectId& {
        auto it = objects.find(o);
        if (it == objects.end()) throw DgError(ErrorCode::UnknownObject, "no image for object " + o.str(), o.str());
        return it->second;
    };
    const ObjectId& src = object_image(term.source());
    Term result(src, object_image(term.target()), term.degree());
    for (const auto& [word, c] : term.support()) {
        Term acc = Term::identity(src, c);
        for (const auto& letter : word) {
            auto it = images.find(letter);
            if (it == images.end()) {
                if (!source.has_generator(letter))
                    throw DgError(ErrorCode::UnknownGenerator, "unknown generator " + letter, letter);
                throw DgError(ErrorCode::UnknownGenerator, "no image for generator " + letter, letter);
            }
            acc = compose(it->second, acc);
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero()) result += acc;
    }
    return result;
}

const ObjectId& DgFunctor::operator()(const ObjectId& object) const
{
    auto it = objects_.find(object);
    if (it == objects_.end()) throw DgError(ErrorCode::UnknownObject, "no image for object " + object.str(), object.str());
    return it->second;
}

const Term& DgFunctor::image(std::string_view generator) const
{
    auto it = images_.find(std::string(generator));
    if (it == images_.end())
        throw DgError(ErrorCode::UnknownGenerator, "no image for generator " + std::string(generator), std::string(generator));
    return it->second;
}

Term DgFunctor::apply(const Term& term) const
{
    return apply_assignment(*source_, objects_, images_, term);
}

DgFunctor make_functor_unchecked(CategoryPtr source, CategoryPtr target, ObjectMap objects, GeneratorMap images)
{
    DgFunctor f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.objects_ = std::move(objects);
    f.images_ = std::move(images);
    for (auto& [name, image] : f.images_) image = coerce(image, f.target_->ring());
    for (const auto& g : f.source_->generators()) {
        auto it = f.images_.find(g.name);
        if (it != f.images_.end() && it->second.is_zero()) {
            auto so = f.objects_.find(g.source);
            auto to = f.objects_.find(g.target);
            if (so != f.objects_.end() && to != f.objects_.end()) it->second = Term(so->second, to->second, g.degree);
        }
    }
    return f;
}

void validate_functor(const DgFunctor& f)
{
    const DgCategory& src = *f.source();
    const DgCategory& dst = *f.target();
    for (const auto& o : src.objects()) {
        auto it = f.object_map().find(o);
        if (it == f.object_map().end()) throw DgError(ErrorCode::UnknownObject, "no image for object " + o.str(), o.str());
        if (!dst.has_object(it->second))
            throw DgError(ErrorCode::UnknownObject, "image " + it->second.str() + " of " + o.str() + " is not an object of the target",
                          o.str());
    }
    for (const auto& [o, image] : f.object_map()) {
        if (!src.has_object(o)) throw DgError(ErrorCode::UnknownObject, "object " + o.str() + " is not in the source", o.str());
    }
    for (const auto& [name, image] : f.generator_map()) {
        if (!src.has_generator(name)) throw DgError(ErrorCode::UnknownGenerator, "generator " + name + " is not in the source", name);
    }
    for (const auto& g : src.generators()) {
        auto it = f.generator_map().find(g.name);
        if (it == f.generator_map().end()) throw DgError(ErrorCode::UnknownGenerator, "no image for generator " + g.name, g.name);
        const Term& img = it->second;
        if (img.source() != f(g.source) || img.target() != f(g.target))
            throw DgError(ErrorCode::EndpointMismatch, "image of " + g.name + " goes " + img.source().str() + "->" + img.target().str() +
                                                           ", expected " + f(g.source).str() + "->" + f(g.target).str(), g.name);
        if (!img.is_zero() && img.degree() != g.degree)
            throw DgError(ErrorCode::DegreeMismatch, "image of " + g.name + " has degree " + std::to_string(img.degree()), g.name);
        try {
            validate_term(dst, img);
        } catch (DgError& e) {
            throw DgError(e.code(), "image of " + g.name + ": " + e.what(), g.name);
        }
    }
    for (const auto& g : src.generators()) {
        Term residual = diff(dst, f.image(g.name)) - f.apply(g.differential);
        if (!residual.is_zero())
            throw DgError(ErrorCode::ChainMapViolation, "d(F(" + g.name + ")) - F(d" + g.name + ") = " + to_string(residual), g.name)
                .with_residual(residual);
    }
}

DgFunctor make_functor(CategoryPtr source, CategoryPtr target, ObjectMap objects, GeneratorMap images)
{
    DgFunctor f = make_functor_unchecked(std::move(source), std::move(target), std::move(objects), std::move(images));
    validate_functor(f);
    return f;
}

DgFunctor identity_functor(const CategoryPtr& cat)
{
    ObjectMap objects;
    GeneratorMap images;
    for (const auto& o : cat->objects()) objects.emplace(o, o);
    for (const auto& g : cat->generators()) images.emplace(g.name, cat->gen(g.name));
    return make_functor_unchecked(cat, cat, std::move(objects), std::move(images));
}

DgFunctor compose_functors(const DgFunctor& g, const DgFunctor& f)
{
    if (!same_category(f.target(), g.source()))
        throw DgError(ErrorCode::SourceTargetMismatch, "functors are not composable");
    ObjectMap objects;
    GeneratorMap images;
    for (const auto& [o, image] : f.object_map()) objects.emplace(o, g(image));
    for (const auto& [name, image] : f.generator_map()) images.emplace(name, g.apply(image));
    return make_functor_unchecked(f.source(), g.target(), std::move(objects), std::move(images));
}

bool functor_equal(const DgFunctor& a, const DgFunctor& b)
{
    if (!same_category(a.source(), b.source()) || !same_category(a.target(), b.target())) return false;
    if (a.object_map() != b.object_map()) return false;
    if (a.generator_map().size() != b.generator_map().size()) return false;
    for (const auto& [name, image] : a.generator_map()) {
        auto it = b.generator_map().find(name);
        if (it == b.generator_map().end() || !(it->second == image)) return false;
    }
    return true;
}

namespace {

Term retag(const Term& t, int r)
{
    Term out(ObjectId::tagged(t.source(), r), ObjectId::tagged(t.target(), r), t.degree());
    for (const auto& [word, c] : t.support()) {
        Word w;
        w.reserve(word.size());
        for (const auto& letter : word) w.push_back(tagged_name(letter, r));
        out.add(w, c);
    }
    return out;
}

}  // namespace

Coproduct coproduct(const std::vector<CategoryPtr>& factors)
{
    CoefficientRing ring = factors.empty() ? CoefficientRing::rationals() : factors.front()->ring();
    std::vector<ObjectId> objects;
    std::vector<Generator> generators;
    std::vector<LocalizedInverse> localized;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int r = static_cast<int>(i + 1);
        const DgCategory& c = *factors[i];
        if (!(c.ring() == ring)) throw DgError(ErrorCode::RingMismatch, "coproduct of categories over different rings");
        for (const auto& o : c.objects()) objects.push_back(ObjectId::tagged(o, r));
        for (const auto& g : c.generators())
            generators.push_back({tagged_name(g.name, r), ObjectId::tagged(g.source, r), ObjectId::tagged(g.target, r), g.degree,
                                  retag(g.differential, r)});
        for (const auto& loc : c.localized()) {
            LocalizedInverse l{retag(loc.morphism, r), {}};
            for (int k = 0; k < 4; ++k) l.names[k] = tagged_name(loc.names[k], r);
            localized.push_back(std::move(l));
        }
    }
    Coproduct sum;
    sum.factors = factors;
    sum.category = std::make_shared<const DgCategory>(std::move(objects), std::move(generators), ring, std::move(localized));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int r = static_cast<int>(i + 1);
        ObjectMap om;
        GeneratorMap gm;
        for (const auto& o : factors[i]->objects()) om.emplace(o, ObjectId::tagged(o, r));
        for (const auto& g : factors[i]->generators()) gm.emplace(g.name, sum.category->gen(tagged_name(g.name, r)));
        sum.inclusions.push_back(make_functor_unchecked(factors[i], sum.category, std::move(om), std::move(gm)));
    }
    return sum;
}

const DgFunctor& inclusion(const Coproduct& sum, int r)
{
    if (r < 1 || r > static_cast<int>(sum.inclusions.size()))
        throw DgError(ErrorCode::ShapeMismatch, "coproduct has no summand " + std::to_string(r));
    return sum.inclusions[static_cast<std::size_t>(r - 1)];
}

DgFunctor copair(const Coproduct& sum, const std::vector<DgFunctor>& legs)
{
    if (legs.size() != sum.factors.size()) throw DgError(ErrorCode::ShapeMismatch, "copair needs one leg per summand");
    if (legs.empty()) throw DgError(ErrorCode::ShapeMismatch, "copair of an empty coproduct needs an explicit target");
    CategoryPtr target = legs.front().target();
    ObjectMap om;
    GeneratorMap gm;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const int r = static_cast<int>(i + 1);
        if (!same_category(legs[i].source(), sum.factors[i]) || !same_category(legs[i].target(), target))
            throw DgError(ErrorCode::SourceTargetMismatch, "copair leg " + std::to_string(r) + " has the wrong source or target");
        for (const auto& o : sum.factors[i]->objects()) {
            const ObjectId& at = sum.inclusions[i](o);
            auto [it, inserted] = om.emplace(at, legs[i](o));
            if (!inserted && it->second != legs[i](o))
                throw DgError(ErrorCode::ShapeMismatch, "copair legs disagree on object " + at.str(), at.str());
        }
        for (const auto& g : sum.factors[i]->generators()) gm.emplace(sum.inclusions[i].image(g.name).support().begin()->first.front(), legs[i].image(g.name));
    }
    return make_functor_unchecked(sum.category, target, std::move(om), std::move(gm));
}

DgFunctor coproduct_functor(const Coproduct& source, const Coproduct& target, const std::vector<DgFunctor>& parts)
{
    if (parts.size() != source.factors.size() || parts.size() != target.factors.size())
        throw DgError(ErrorCode::ShapeMismatch, "coproduct functor needs one part per summand");
    ObjectMap om;
    GeneratorMap gm;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int r = static_cast<int>(i + 1);
        if (!same_category(parts[i].source(), source.factors[i]) || !same_category(parts[i].target(), target.factors[i]))
            throw DgError(ErrorCode::SourceTargetMismatch, "coproduct part " + std::to_string(r) + " has the wrong source or target");
        for (const auto& o : source.factors[i]->objects()) om.emplace(ObjectId::tagged(o, r), ObjectId::tagged(parts[i](o), r));
        for (const auto& g : source.factors[i]->generators())
            gm.emplace(tagged_name(g.name, r), retag(parts[i].image(g.name), r));
    }
    return make_functor_unchecked(source.category, target.category, std::move(om), std::move(gm));
}

DgFunctor codiagonal(const Coproduct& doubled)
{
    if (doubled.factors.size() != 2 || !same_category(doubled.factors[0], doubled.factors[1]))
        throw DgError(ErrorCode::ShapeMismatch, "codiagonal needs C⊔C");
    DgFunctor id = identity_functor(doubled.factors[0]);
    return copair(doubled, {id, id});
}

DgFunctor codiagonal(const CategoryPtr& cat)
{
    return codiagonal(coproduct({cat, cat}));
}

SemifreeExtension::SemifreeExtension(DgFunctor inclusion) : inclusion_(std::move(inclusion))
{
    const DgCategory& base = *inclusion_.source();
    const DgCategory& ext = *inclusion_.target();
    std::set<ObjectId> hit_objects;
    for (const auto& o : base.objects()) {
        if (!hit_objects.insert(inclusion_(o)).second)
            throw DgError(ErrorCode::NotSemifreeExtension, "inclusion identifies objects", o.str());
    }
    std::set<std::string> hit;
    for (const auto& g : base.generators()) {
        const Term& img = inclusion_.image(g.name);
        if (img.support().size() != 1 || img.support().begin()->first.size() != 1 || !img.support().begin()->second.is_one())
            throw DgError(ErrorCode::NotSemifreeExtension, "generator " + g.name + " is not sent to a single generator", g.name);
        const std::string& name = img.support().begin()->first.front();
        if (!hit.insert(name).second)
            throw DgError(ErrorCode::NotSemifreeExtension, "inclusion identifies generators onto " + name, g.name);
        image_names_.emplace(g.name, name);
    }
    for (const auto& o : ext.objects())
        if (!hit_objects.count(o)) new_objects_.push_back(o);
    for (const auto& g : ext.generators())
        if (!hit.count(g.name)) new_generators_.push_back(g.name);
}

const std::string& SemifreeExtension::image_name(std::string_view base_generator) const
{
    auto it = image_names_.find(std::string(base_generator));
    if (it == image_names_.end())
        throw DgError(ErrorCode::UnknownGenerator, "unknown base generator " + std::string(base_generator), std::string(base_generator));
    return it->second;
}

bool is_semifree_extension(const DgFunctor& f)
{
    try {
        SemifreeExtension e(f);
        return true;
    } catch (const DgError&) {
        return false;
    }
}

}  // namespace dgcat

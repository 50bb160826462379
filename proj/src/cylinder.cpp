#include "dgcat/cylinder.hpp"

#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

namespace {

void check_fresh(const std::vector<Generator>& existing, const std::vector<Generator>& added)
{
    std::set<std::string> names;
    for (const auto& g : existing) names.insert(g.name);
    for (const auto& g : added)
        if (!names.insert(g.name).second) throw DgError(ErrorCode::NameCollision, "constructed name " + g.name + " is already taken", g.name);
}

CylinderData category_cylinder(const CategoryPtr& cat)
{
    CylinderData cyl;
    cyl.mode = CylinderMode::Category;
    cyl.base = cat;
    cyl.doubled = coproduct({cat, cat});
    const DgCategory& sum = *cyl.doubled.category;

    TContext& ctx = cyl.context;
    ctx.base = cat;
    for (const auto& o : cat->objects()) {
        ctx.left_objects.emplace(o, ObjectId::tagged(o, 1));
        ctx.right_objects.emplace(o, ObjectId::tagged(o, 2));
    }
    for (const auto& g : cat->generators()) {
        ctx.left.emplace(g.name, sum.gen(tagged_name(g.name, 1)));
        ctx.right.emplace(g.name, sum.gen(tagged_name(g.name, 2)));
    }

    std::vector<Generator> added;
    std::vector<LocalizedInverse> localized = sum.localized();
    for (const auto& o : cat->objects()) {
        ObjectId a1 = ObjectId::tagged(o, 1);
        ObjectId a2 = ObjectId::tagged(o, 2);
        append_t_family(added, localized, o.str(), a1, a2);
        ctx.t_object.emplace(o, Term::path(a1, a2, 0, {derived_name(prefix::t, o.str())}));
    }
    for (const auto& f : cat->generators()) {
        std::string name = derived_name(prefix::t, f.name);
        ObjectId s = ObjectId::tagged(f.source, 1);
        ObjectId e = ObjectId::tagged(f.target, 2);
        Term d = t_differential(ctx, f);
        added.push_back({name, s, e, f.degree - 1, d});
        ctx.t.emplace(f.name, Term::path(s, e, f.degree - 1, {name}));
    }
    check_fresh(sum.generators(), added);
    std::vector<Generator> gens = sum.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    cyl.cylinder = make_presentation(sum.objects(), std::move(gens), cat->ring(), std::move(localized));
    return cyl;
}

CylinderData algebra_cylinder(const CategoryPtr& cat)
{
    if (cat->objects().size() != 1)
        throw DgError(ErrorCode::ShapeMismatch, "algebra-mode cylinder needs exactly one object");
    const ObjectId& o = cat->objects().front();
    CylinderData cyl;
    cyl.mode = CylinderMode::Algebra;
    cyl.base = cat;

    // C⊔C in the algebra sense keeps the single object.
    std::vector<Generator> doubled_gens;
    for (int r = 1; r <= 2; ++r) {
        for (const auto& g : cat->generators()) {
            Term d(o, o, g.differential.degree());
            for (const auto& [word, c] : g.differential.support()) {
                Word w;
                for (const auto& letter : word) w.push_back(tagged_name(letter, r));
                d.add(w, c);
            }
            doubled_gens.push_back({tagged_name(g.name, r), o, o, g.degree, d});
        }
    }
    CategoryPtr sum = make_presentation({o}, doubled_gens, cat->ring());
    cyl.doubled.category = sum;
    cyl.doubled.factors = {cat, cat};
    for (int r = 1; r <= 2; ++r) {
        GeneratorMap gm;
        for (const auto& g : cat->generators()) gm.emplace(g.name, sum->gen(tagged_name(g.name, r)));
        cyl.doubled.inclusions.push_back(make_functor_unchecked(cat, sum, {{o, o}}, std::move(gm)));
    }

    TContext& ctx = cyl.context;
    ctx.base = cat;
    ctx.left_objects.emplace(o, o);
    ctx.right_objects.emplace(o, o);
    ctx.left = cyl.doubled.inclusions[0].generator_map();
    ctx.right = cyl.doubled.inclusions[1].generator_map();
    ctx.t_object.emplace(o, Term::identity(o));
    std::vector<Generator> added;
    for (const auto& f : cat->generators()) {
        std::string name = derived_name(prefix::t, f.name);
        added.push_back({name, o, o, f.degree - 1, t_differential(ctx, f)});
        ctx.t.emplace(f.name, Term::path(o, o, f.degree - 1, {name}));
    }
    check_fresh(doubled_gens, added);
    std::vector<Generator> gens = doubled_gens;
    gens.insert(gens.end(), added.begin(), added.end());
    cyl.cylinder = make_presentation({o}, std::move(gens), cat->ring());
    return cyl;
}

// i, i₁, i₂ and p for a built cylinder; `inverse_names` lists generators of
// the base that are localization inverses (mapped through i_r but with no t_f).
void finish_structure_maps(CylinderData& cyl)
{
    const CategoryPtr& c = cyl.base;
    const CategoryPtr& z = cyl.cylinder;
    const bool algebra = cyl.mode == CylinderMode::Algebra;

    for (int r = 1; r <= 2; ++r) {
        ObjectMap om;
        GeneratorMap gm;
        for (const auto& o : c->objects()) om.emplace(o, algebra ? o : ObjectId::tagged(o, r));
        for (const auto& g : c->generators()) gm.emplace(g.name, z->gen(tagged_name(g.name, r)));
        (r == 1 ? cyl.i1 : cyl.i2) = make_functor_unchecked(c, z, std::move(om), std::move(gm));
    }
    {
        ObjectMap om;
        GeneratorMap gm;
        for (const auto& o : cyl.doubled.category->objects()) om.emplace(o, o);
        for (const auto& g : cyl.doubled.category->generators()) gm.emplace(g.name, z->gen(g.name));
        cyl.i = make_functor_unchecked(cyl.doubled.category, z, std::move(om), std::move(gm));
    }
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : c->objects()) {
        if (algebra) {
            om.emplace(o, o);
            continue;
        }
        om.emplace(ObjectId::tagged(o, 1), o);
        om.emplace(ObjectId::tagged(o, 2), o);
        TFamilyNames n = t_family_names(o.str());
        gm.emplace(n.t, Term::identity(o));
        gm.emplace(n.t_prime, Term::identity(o));
        gm.emplace(n.t_hat, Term(o, o, -1));
        gm.emplace(n.t_check, Term(o, o, -1));
        gm.emplace(n.t_bar, Term(o, o, -2));
    }
    for (const auto& g : c->generators()) {
        for (int r = 1; r <= 2; ++r) gm.emplace(tagged_name(g.name, r), c->gen(g.name));
        std::string tname = derived_name(prefix::t, g.name);
        if (z->has_generator(tname)) gm.emplace(tname, Term(g.source, g.target, g.degree - 1));
    }
    cyl.p = make_functor(z, c, std::move(om), std::move(gm));
}

}  // namespace

CylinderData cyl_object(const CategoryPtr& cat, CylinderMode mode)
{
    CylinderData cyl = mode == CylinderMode::Category ? category_cylinder(cat) : algebra_cylinder(cat);
    finish_structure_maps(cyl);
    return cyl;
}

Term t_of(const CylinderData& cyl, const Term& theta)
{
    return cyl.t_of(theta);
}

CylinderData cyl_object_loc(const CategoryPtr& cat, const std::vector<Term>& inverted)
{
    return cyl_object_loc(localize(cat, inverted).category);
}

CylinderData cyl_object_loc(const CategoryPtr& localized)
{
    Delocalization split = delocalize(localized);
    CylinderData plain = category_cylinder(split.base);

    std::vector<LocalizedInverse> data;
    for (int r = 1; r <= 2; ++r) {
        for (const auto& inv : split.inverses) {
            LocalizedInverse tagged{(r == 1 ? plain.context.left_of(inv.morphism) : plain.context.right_of(inv.morphism)), {}};
            for (int k = 0; k < 4; ++k) tagged.names[k] = tagged_name(inv.names[k], r);
            data.push_back(std::move(tagged));
        }
    }
    CylinderData cyl;
    cyl.mode = CylinderMode::Category;
    cyl.localized = true;
    cyl.base = localized;
    cyl.cylinder = localize_named(plain.cylinder, data).category;
    cyl.doubled = coproduct({localized, localized});

    cyl.context = plain.context;
    cyl.context.base = localized;
    for (const auto& inv : split.inverses) {
        for (const auto& n : inv.names) {
            cyl.context.left.emplace(n, cyl.cylinder->gen(tagged_name(n, 1)));
            cyl.context.right.emplace(n, cyl.cylinder->gen(tagged_name(n, 2)));
        }
    }
    add_localized_t(cyl.context, split.inverses);
    finish_structure_maps(cyl);
    return cyl;
}

std::array<Term, 4> t_loc_inverse_generators(const CylinderData& cyl, const Term& g)
{
    for (const auto& inv : cyl.base->localized()) {
        if (inv.morphism == g) {
            return {cyl.context.t_of_generator(inv.names[0]), cyl.context.t_of_generator(inv.names[1]),
                    cyl.context.t_of_generator(inv.names[2]), cyl.context.t_of_generator(inv.names[3])};
        }
    }
    throw DgError(ErrorCode::NotLocalized, to_string(g) + " is not among the localized morphisms");
}

DgFunctor cyl_functor(const DgFunctor& f, const CylinderData& source, const CylinderData& target)
{
    if (source.mode != target.mode) throw DgError(ErrorCode::ShapeMismatch, "cylinders are in different modes");
    if (!same_category(f.source(), source.base) || !same_category(f.target(), target.base))
        throw DgError(ErrorCode::SourceTargetMismatch, "functor does not match the cylinder bases");
    const bool algebra = source.mode == CylinderMode::Algebra;
    const DgCategory& c = *source.base;
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : c.objects()) {
        const ObjectId& fo = f(o);
        if (algebra) {
            om.emplace(o, fo);
            continue;
        }
        om.emplace(ObjectId::tagged(o, 1), ObjectId::tagged(fo, 1));
        om.emplace(ObjectId::tagged(o, 2), ObjectId::tagged(fo, 2));
        TFamilyNames from = t_family_names(o.str());
        TFamilyNames to = t_family_names(fo.str());
        const DgCategory& z = *target.cylinder;
        gm.emplace(from.t, z.gen(to.t));
        gm.emplace(from.t_prime, z.gen(to.t_prime));
        gm.emplace(from.t_hat, z.gen(to.t_hat));
        gm.emplace(from.t_check, z.gen(to.t_check));
        gm.emplace(from.t_bar, z.gen(to.t_bar));
    }
    for (const auto& g : c.generators()) {
        const Term& fg = f.image(g.name);
        gm.emplace(tagged_name(g.name, 1), target.i1(fg));
        gm.emplace(tagged_name(g.name, 2), target.i2(fg));
        std::string tname = derived_name(prefix::t, g.name);
        if (source.cylinder->has_generator(tname)) gm.emplace(tname, target.t_of(fg));
    }
    return make_functor(source.cylinder, target.cylinder, std::move(om), std::move(gm));
}

DgFunctor cyl_functor_loc(const DgFunctor& f, const CylinderData& source, const CylinderData& target)
{
    if (!source.localized || !target.localized) throw DgError(ErrorCode::NotLocalized, "cyl_functor_loc needs localized cylinders");
    return cyl_functor(f, source, target);
}

}  // namespace dgcat

#include "dgcat/homotopy.hpp"

#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

MappingCylinder mapping_cylinder(const DgFunctor& f)
{
    MappingCylinder m;
    m.functor = f;
    const CategoryPtr& a = f.source();
    const CategoryPtr& b = f.target();
    m.sum = coproduct({b, a});
    const DgFunctor& in1 = m.sum.inclusions[0];
    const DgFunctor& in2 = m.sum.inclusions[1];
    const DgCategory& sum = *m.sum.category;

    TContext& ctx = m.context;
    ctx.base = a;
    for (const auto& o : a->objects()) {
        ctx.left_objects.emplace(o, in1(f(o)));
        ctx.right_objects.emplace(o, in2(o));
    }
    for (const auto& g : a->generators()) {
        ctx.left.emplace(g.name, in1(f.image(g.name)));
        ctx.right.emplace(g.name, in2.image(g.name));
    }
    std::vector<Generator> added;
    std::vector<LocalizedInverse> localized = sum.localized();
    for (const auto& o : a->objects()) {
        const ObjectId& l = ctx.left_objects.at(o);
        const ObjectId& r = ctx.right_objects.at(o);
        append_t_family(added, localized, o.str(), l, r);
        ctx.t_object.emplace(o, Term::path(l, r, 0, {derived_name(prefix::t, o.str())}));
    }
    for (const auto& g : a->generators()) {
        std::string name = derived_name(prefix::t, g.name);
        const ObjectId& s = ctx.left_objects.at(g.source);
        const ObjectId& e = ctx.right_objects.at(g.target);
        added.push_back({name, s, e, g.degree - 1, t_differential(ctx, g)});
        ctx.t.emplace(g.name, Term::path(s, e, g.degree - 1, {name}));
    }
    std::set<std::string> names;
    for (const auto& g : sum.generators()) names.insert(g.name);
    for (const auto& g : added)
        if (!names.insert(g.name).second) throw DgError(ErrorCode::NameCollision, "constructed name " + g.name + " is already taken", g.name);
    std::vector<Generator> gens = sum.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    m.category = make_presentation(sum.objects(), std::move(gens), sum.ring(), std::move(localized));

    ObjectMap jo;
    GeneratorMap jg;
    for (const auto& o : a->objects()) jo.emplace(o, in2(o));
    for (const auto& g : a->generators()) jg.emplace(g.name, m.category->gen(tagged_name(g.name, 2)));
    m.j = SemifreeExtension(make_functor_unchecked(a, m.category, std::move(jo), std::move(jg)));

    ObjectMap qo;
    GeneratorMap qg;
    for (const auto& o : b->objects()) qo.emplace(in1(o), o);
    for (const auto& g : b->generators()) qg.emplace(tagged_name(g.name, 1), b->gen(g.name));
    for (const auto& o : a->objects()) {
        const ObjectId& fo = f(o);
        qo.emplace(in2(o), fo);
        TFamilyNames n = t_family_names(o.str());
        qg.emplace(n.t, Term::identity(fo));
        qg.emplace(n.t_prime, Term::identity(fo));
        qg.emplace(n.t_hat, Term(fo, fo, -1));
        qg.emplace(n.t_check, Term(fo, fo, -1));
        qg.emplace(n.t_bar, Term(fo, fo, -2));
    }
    for (const auto& g : a->generators()) {
        qg.emplace(tagged_name(g.name, 2), f.image(g.name));
        qg.emplace(derived_name(prefix::t, g.name), Term(f(g.source), f(g.target), g.degree - 1));
    }
    m.q = make_functor(m.category, b, std::move(qo), std::move(qg));
    return m;
}

DgFunctor mapping_cylinder_morphism(const MappingCylinder& source, const MappingCylinder& target, const DgFunctor& alpha,
                                    const DgFunctor& beta)
{
    const DgFunctor& f = source.functor;
    const DgFunctor& f2 = target.functor;
    if (!same_category(alpha.source(), f.source()) || !same_category(alpha.target(), f2.source()) ||
        !same_category(beta.source(), f.target()) || !same_category(beta.target(), f2.target()))
        throw DgError(ErrorCode::SourceTargetMismatch, "square components have the wrong types");
    if (!functor_equal(compose_functors(beta, f), compose_functors(f2, alpha)))
        throw DgError(ErrorCode::SquareNotCommuting, "beta∘F differs from F'∘alpha");
    const DgFunctor& in1 = target.sum.inclusions[0];
    const DgFunctor& in2 = target.sum.inclusions[1];
    const DgCategory& z = *target.category;
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : f.target()->objects()) om.emplace(ObjectId::tagged(o, 1), in1(beta(o)));
    for (const auto& g : f.target()->generators()) gm.emplace(tagged_name(g.name, 1), in1(beta.image(g.name)));
    for (const auto& o : f.source()->objects()) {
        om.emplace(ObjectId::tagged(o, 2), in2(alpha(o)));
        TFamilyNames from = t_family_names(o.str());
        TFamilyNames to = t_family_names(alpha(o).str());
        gm.emplace(from.t, z.gen(to.t));
        gm.emplace(from.t_prime, z.gen(to.t_prime));
        gm.emplace(from.t_hat, z.gen(to.t_hat));
        gm.emplace(from.t_check, z.gen(to.t_check));
        gm.emplace(from.t_bar, z.gen(to.t_bar));
    }
    for (const auto& g : f.source()->generators()) {
        const Term& ag = alpha.image(g.name);
        gm.emplace(tagged_name(g.name, 2), in2(ag));
        gm.emplace(derived_name(prefix::t, g.name), expand_t(target.context, ag));
    }
    return make_functor(source.category, target.category, std::move(om), std::move(gm));
}

CategoryPtr mapping_cylinder_via_pushout(const DgFunctor& f)
{
    CylinderData cyl = cyl_object(f.source());
    PushoutResult p = pushout(SemifreeExtension(cyl.i1), f);
    std::map<ObjectId, ObjectId> objects;
    std::map<std::string, std::string> gens;
    for (const auto& o : f.target()->objects()) objects.emplace(o, ObjectId::tagged(o, 1));
    for (const auto& g : f.target()->generators()) gens.emplace(g.name, tagged_name(g.name, 1));
    return rename(p.category, objects, gens);
}

DgFunctor hep_extend(const SemifreeExtension& f, int side, const DgFunctor& g, const DgFunctor& h)
{
    if (side != 1 && side != 2) throw DgError(ErrorCode::ShapeMismatch, "side must be 1 or 2");
    CylinderData cyl_a = cyl_object(f.base());
    if (!same_category(h.source(), cyl_a.cylinder)) throw DgError(ErrorCode::SourceTargetMismatch, "H is not defined on Cyl(A)");
    if (!same_category(g.source(), f.extension()) || !same_category(g.target(), h.target()))
        throw DgError(ErrorCode::SourceTargetMismatch, "G must go from B to the target of H");
    if (!functor_equal(compose_functors(g, f.inclusion()), compose_functors(h, cyl_a.inclusion(side))))
        throw DgError(ErrorCode::PrerequisiteSquareFails, "G∘F differs from H∘i_" + std::to_string(side));

    CylinderData cyl_b = cyl_object(f.extension());
    DgFunctor cyl_f = cyl_functor(f.inclusion(), cyl_a, cyl_b);
    const DgCategory& zb = *cyl_b.cylinder;
    const DgCategory& b = *f.extension();

    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : cyl_a.cylinder->objects()) om.emplace(cyl_f(o), h(o));
    for (const auto& x : cyl_a.cylinder->generators()) {
        const Term& img = cyl_f.image(x.name);
        gm.emplace(img.support().begin()->first.front(), h.image(x.name));
    }
    for (const auto& o : f.new_objects()) {
        const ObjectId& go = g(o);
        om.emplace(ObjectId::tagged(o, 1), go);
        om.emplace(ObjectId::tagged(o, 2), go);
        TFamilyNames n = t_family_names(o.str());
        gm.emplace(n.t, Term::identity(go));
        gm.emplace(n.t_prime, Term::identity(go));
        gm.emplace(n.t_hat, Term(go, go, -1));
        gm.emplace(n.t_check, Term(go, go, -1));
        gm.emplace(n.t_bar, Term(go, go, -2));
    }
    auto E = [&](const Term& t) { return apply_assignment(zb, om, gm, t); };
    for (const auto& name : f.new_generators()) {
        const Generator& bg = b.generator(name);
        const Scalar s = bg.degree % 2 == 0 ? Scalar(1) : Scalar(-1);
        TFamilyNames u = t_family_names(bg.source.str());
        TFamilyNames v = t_family_names(bg.target.str());
        Term t_u = zb.gen(u.t), tp_u = zb.gen(u.t_prime), th_u = zb.gen(u.t_hat), tc_u = zb.gen(u.t_check), tb_u = zb.gen(u.t_bar);
        Term t_v = zb.gen(v.t), tp_v = zb.gen(v.t_prime), th_v = zb.gen(v.t_hat), tc_v = zb.gen(v.t_check), tb_v = zb.gen(v.t_bar);
        Term db1 = cyl_b.i1(bg.differential);
        Term db2 = cyl_b.i2(bg.differential);
        Term t_db = cyl_b.t_of(bg.differential);
        const std::string b1 = tagged_name(name, 1);
        const std::string b2 = tagged_name(name, 2);
        const std::string tb = derived_name(prefix::t, name);
        if (side == 1) {
            gm.emplace(b1, g.image(name));
            Term bb = zb.gen(b1);
            Term x2 = compose({&t_v, &bb, &tp_u}) - s * compose(t_db, tp_u) - s * compose(db2, tc_u);
            gm.emplace(b2, E(x2));
            Term y = -compose({&t_v, &bb, &th_u}) + s * compose(t_db, th_u) - s * compose(db2, tb_u);
            gm.emplace(tb, E(y));
        } else {
            gm.emplace(b2, g.image(name));
            Term bb = zb.gen(b2);
            Term x1 = compose({&tp_v, &bb, &t_u}) + compose(th_v, db1) + s * compose(tp_v, t_db);
            gm.emplace(b1, E(x1));
            Term y = s * compose({&tc_v, &bb, &t_u}) + compose(tc_v, t_db) - s * compose(tb_v, db1);
            gm.emplace(tb, E(y));
        }
    }
    return make_functor(cyl_b.cylinder, h.target(), std::move(om), std::move(gm));
}

RelativeCylinder relative_cylinder(const SemifreeExtension& f)
{
    RelativeCylinder rc;
    rc.cyl_a = cyl_object(f.base());
    rc.cyl_b = cyl_object(f.extension());
    Coproduct bb = coproduct({f.extension(), f.extension()});
    SemifreeExtension ff(coproduct_functor(rc.cyl_a.doubled, bb, {f.inclusion(), f.inclusion()}));
    rc.pushout = pushout(ff, rc.cyl_a.i);
    rc.category = rc.pushout.category;

    DgFunctor cyl_f = cyl_functor(f.inclusion(), rc.cyl_a, rc.cyl_b);
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : rc.cyl_a.cylinder->objects()) om.emplace(o, cyl_f(o));
    for (const auto& x : rc.cyl_a.cylinder->generators()) gm.emplace(x.name, cyl_f.image(x.name));
    for (const auto& o : ff.new_objects()) om.emplace(o, o);
    for (const auto& name : ff.new_generators()) gm.emplace(name, rc.cyl_b.cylinder->gen(name));
    rc.g = SemifreeExtension(make_functor(rc.category, rc.cyl_b.cylinder, std::move(om), std::move(gm)));
    return rc;
}

Interchange interchange(const CategoryPtr& cat)
{
    Interchange x;
    x.inner = cyl_object(cat);
    x.outer = cyl_object(x.inner.cylinder);
    const DgCategory& zz = *x.outer.cylinder;
    const DgCategory& a = *cat;

    ObjectMap om;
    GeneratorMap gm;
    auto gen = [&](const std::string& n) { return zz.gen(n); };
    for (const auto& o : a.objects()) {
        for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 2; ++s)
                om.emplace(ObjectId::tagged(ObjectId::tagged(o, r), s), ObjectId::tagged(ObjectId::tagged(o, s), r));
        TFamilyNames fam = t_family_names(o.str());
        const std::array<std::string, 5> members = {fam.t, fam.t_prime, fam.t_hat, fam.t_check, fam.t_bar};
        for (int r = 1; r <= 2; ++r) {
            TFamilyNames outer = t_family_names(ObjectId::tagged(o, r).str());
            const std::array<std::string, 5> outer_members = {outer.t, outer.t_prime, outer.t_hat, outer.t_check, outer.t_bar};
            for (int k = 0; k < 5; ++k) {
                gm.emplace(tagged_name(members[k], r), gen(outer_members[k]));
                gm.emplace(outer_members[k], gen(tagged_name(members[k], r)));
            }
        }
        TFamilyNames a1 = t_family_names(ObjectId::tagged(o, 1).str());
        TFamilyNames a2 = t_family_names(ObjectId::tagged(o, 2).str());
        Term tt = gen(derived_name(prefix::t, fam.t));
        Term t_1 = gen(tagged_name(fam.t, 1));
        Term t_2 = gen(tagged_name(fam.t, 2));
        Term tp1 = gen(a1.t_prime), th1 = gen(a1.t_hat), tc1 = gen(a1.t_check), tb1 = gen(a1.t_bar);
        Term tp2 = gen(a2.t_prime), th2 = gen(a2.t_hat), tc2 = gen(a2.t_check), tb2 = gen(a2.t_bar);
        gm.emplace(derived_name(prefix::t, fam.t), -tt);
        gm.emplace(derived_name(prefix::t, fam.t_prime),
                   compose({&tp2, &tt, &tp1}) - compose({&th2, &t_1, &tp1}) + compose({&tp2, &t_2, &tc1}));
        gm.emplace(derived_name(prefix::t, fam.t_hat),
                   -compose({&tp2, &tt, &th1}) + compose({&th2, &t_1, &th1}) + compose({&tp2, &t_2, &tb1}));
        gm.emplace(derived_name(prefix::t, fam.t_check),
                   compose({&tc2, &tt, &tp1}) + compose({&tc2, &t_2, &tc1}) + compose({&tb2, &t_1, &tp1}));
        gm.emplace(derived_name(prefix::t, fam.t_bar),
                   compose({&tc2, &tt, &th1}) + compose({&tb2, &t_1, &th1}) - compose({&tc2, &t_2, &tb1}));
    }
    for (const auto& g : a.generators()) {
        const std::string ta = derived_name(prefix::t, g.name);
        for (int r = 1; r <= 2; ++r) {
            for (int s = 1; s <= 2; ++s)
                gm.emplace(tagged_name(tagged_name(g.name, r), s), gen(tagged_name(tagged_name(g.name, s), r)));
            gm.emplace(tagged_name(ta, r), gen(derived_name(prefix::t, tagged_name(g.name, r))));
            gm.emplace(derived_name(prefix::t, tagged_name(g.name, r)), gen(tagged_name(ta, r)));
        }
        gm.emplace(derived_name(prefix::t, ta), -gen(derived_name(prefix::t, ta)));
    }
    x.t = make_functor(x.outer.cylinder, x.outer.cylinder, std::move(om), std::move(gm));
    return x;
}

bool homotopic_via(const DgFunctor& h, const DgFunctor& f1, const DgFunctor& f2)
{
    if (!same_category(f1.source(), f2.source()) || !same_category(f1.target(), f2.target())) return false;
    CylinderData cyl = cyl_object(f1.source());
    if (!same_category(h.source(), cyl.cylinder) || !same_category(h.target(), f1.target())) return false;
    return functor_equal(compose_functors(h, cyl.i1), f1) && functor_equal(compose_functors(h, cyl.i2), f2);
}

EquivalenceData promote_equivalence(const DgCategory& cat, const Term& s, const Term& s_prime, const Term& s_hat, const Term& s_check)
{
    auto fail = [](const std::string& why) { throw DgError(ErrorCode::NotAHomotopyEquivalenceDatum, why); };
    for (const Term* t : {&s, &s_prime, &s_hat, &s_check}) validate_term(cat, *t);
    const ObjectId& a = s.source();
    const ObjectId& c = s.target();
    if (s_prime.source() != c || s_prime.target() != a) fail("s' does not go back from the target of s");
    if (s_hat.source() != a || s_hat.target() != a || s_check.source() != c || s_check.target() != c)
        fail("homotopies have the wrong endpoints");
    if ((!s.is_zero() && s.degree() != 0) || (!s_prime.is_zero() && s_prime.degree() != 0)) fail("s and s' must have degree 0");
    if ((!s_hat.is_zero() && s_hat.degree() != -1) || (!s_check.is_zero() && s_check.degree() != -1)) fail("homotopies must have degree -1");
    if (!diff(cat, s).is_zero() || !diff(cat, s_prime).is_zero()) fail("s and s' must be closed");
    if (!(diff(cat, s_hat) == Term::identity(a) - compose(s_prime, s))) fail("d(s_hat) is not 1 - s's");
    if (!(diff(cat, s_check) == Term::identity(c) - compose(s, s_prime))) fail("d(s_check) is not 1 - ss'");

    EquivalenceData e;
    e.r = s;
    e.r_prime = compose({&s_prime, &s, &s_prime});
    e.r_hat = s_hat + compose({&s_prime, &s_check, &s});
    e.r_check = s_check + compose({&s, &s_hat, &s_prime});
    e.r_bar = compose({&s_check, &s, &s_hat}) - compose({&s, &s_hat, &s_hat}) - compose({&s_check, &s_check, &s});
    if (!(diff(cat, e.r_bar) == compose(e.r, e.r_hat) - compose(e.r_check, e.r)))
        fail("d(r_bar) differs from r r_hat - r_check r");
    return e;
}

}  // namespace dgcat

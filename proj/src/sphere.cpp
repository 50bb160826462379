#include "dgcat/sphere.hpp"

#include "dgcat/constructions.hpp"
#include "dgcat/error.hpp"
#include "dgcat/homotopy.hpp"

namespace dgcat {

namespace {

const ObjectId fiber("L");

CategoryPtr point(const std::string& object)
{
    return make_presentation({ObjectId(object)}, {});
}

// The middle of the gluing span for Sⁿ is the model of S^{n-1}; S⁰ is two points.
CategoryPtr middle_category(int n)
{
    if (n == 1) return make_presentation({"K3", "K4"}, {});
    return sphere_model(n - 1, "x");
}

DgFunctor collapse(const CategoryPtr& middle, const CategoryPtr& target, int n)
{
    const ObjectId& k = target->objects().front();
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : middle->objects()) om.emplace(o, k);
    for (const auto& g : middle->generators()) {
        bool unit = n == 2 && (g.name == "x" || g.name == derived_name(prefix::inv, "x"));
        gm.emplace(g.name, unit ? Term::identity(k) : Term(k, k, g.degree));
    }
    return make_functor(middle, target, std::move(om), std::move(gm));
}

}  // namespace

CategoryPtr sphere_model(int n, const std::string& var, const SphereOptions& options)
{
    if (n < 1) throw DgError(ErrorCode::ShapeMismatch, "sphere dimension must be at least 1");
    int degree = 1 - n;
    if (n == 1 && options.circle_degree) degree = *options.circle_degree;
    Term dz(fiber, fiber, degree + 1);
    if (n == 2 && options.doubled_background) dz = Term::identity(fiber, 2);
    CategoryPtr c = make_presentation({fiber}, {{var, fiber, fiber, degree, dz}});
    if (n == 1 && !options.circle_degree) c = localize(c, {c->gen(var)}).category;
    return c;
}

SphereFixture build_fixture(int n, const std::string& var, const SphereOptions& options)
{
    SphereFixture fx;
    fx.n = n;
    fx.var = var;
    fx.options = options;
    fx.left = point("K1");
    fx.right = point("K2");
    fx.middle = middle_category(n);
    fx.span = make_span(collapse(fx.middle, fx.left, n), collapse(fx.middle, fx.right, n));
    fx.hocolim = fx.middle->localized().empty() ? hocolim_data(fx.span) : hocolim_data_loc(fx.span);
    fx.model = sphere_model(n, var, options);
    if (!options.standard()) return fx;

    const DgCategory& h = *fx.hocolim.category;
    const DgCategory& m = *fx.model;
    const ObjectId k1 = ObjectId::tagged("K1", 1);
    const ObjectId k2 = ObjectId::tagged("K2", 2);
    auto unit_family = [&](GeneratorMap& gm, const std::string& object) {
        TFamilyNames fam = t_family_names(object);
        gm.emplace(fam.t, m.id(fiber));
        gm.emplace(fam.t_prime, m.id(fiber));
        gm.emplace(fam.t_hat, Term(fiber, fiber, -1));
        gm.emplace(fam.t_check, Term(fiber, fiber, -1));
        gm.emplace(fam.t_bar, Term(fiber, fiber, -2));
    };

    ObjectMap to_o{{k1, fiber}, {k2, fiber}};
    GeneratorMap to_g;
    ObjectMap from_o{{fiber, k1}};
    GeneratorMap from_g;
    if (n == 1) {
        // K4 carries the unit, K3 the loop and its inverse data.
        unit_family(to_g, "K4");
        TFamilyNames k3 = t_family_names("K3");
        auto inv = localization_names(var);
        to_g.emplace(k3.t, m.gen(var));
        to_g.emplace(k3.t_prime, m.gen(inv[0]));
        to_g.emplace(k3.t_hat, m.gen(inv[1]));
        to_g.emplace(k3.t_check, m.gen(inv[2]));
        to_g.emplace(k3.t_bar, m.gen(inv[3]));

        // z ↦ t'_{K4} t_{K3}, completed to a full inverse datum.
        TFamilyNames k4 = t_family_names("K4");
        Term u = h.gen(k4.t_prime), u_inv = h.gen(k4.t), u_hat = h.gen(k4.t_check), u_check = h.gen(k4.t_hat);
        Term v = h.gen(k3.t), v_inv = h.gen(k3.t_prime), v_hat = h.gen(k3.t_hat), v_check = h.gen(k3.t_check);
        Term w = compose(u, v);
        Term w_inv = compose(v_inv, u_inv);
        Term w_hat = v_hat + compose({&v_inv, &u_hat, &v});
        Term w_check = u_check + compose({&u, &v_check, &u_inv});
        EquivalenceData e = promote_equivalence(h, w, w_inv, w_hat, w_check);
        from_g.emplace(var, e.r);
        from_g.emplace(inv[0], e.r_prime);
        from_g.emplace(inv[1], e.r_hat);
        from_g.emplace(inv[2], e.r_check);
        from_g.emplace(inv[3], e.r_bar);
    } else {
        unit_family(to_g, fiber.str());
        to_g.emplace(derived_name(prefix::t, "x"), m.gen(var));
        TFamilyNames l = t_family_names(fiber.str());
        Term tp = h.gen(l.t_prime);
        Term tx = h.gen(derived_name(prefix::t, "x"));
        from_g.emplace(var, compose(tp, tx));
    }
    fx.to_model = make_functor(fx.hocolim.category, fx.model, std::move(to_o), std::move(to_g));
    fx.from_model = make_functor(fx.model, fx.hocolim.category, std::move(from_o), std::move(from_g));
    return fx;
}

Reflection derive_reflection(const SphereFixture& fx)
{
    if (!fx.options.standard())
        throw DgError(ErrorCode::ShapeMismatch, "the reflection is only derived for the standard presentation");
    DgFunctor on_middle;
    if (fx.n == 1) {
        on_middle = make_functor(fx.middle, fx.middle, {{"K3", "K4"}, {"K4", "K3"}}, {});
    } else {
        on_middle = derive_reflection(fx.n - 1, "x").on_model;
    }
    Reflection r;
    r.on_span = make_span_morphism(fx.span, fx.span, identity_functor(fx.left), on_middle, identity_functor(fx.right));
    r.on_hocolim = fx.hocolim.localized ? hocolim_morphism_loc(r.on_span) : hocolim_morphism(r.on_span);
    r.on_model = compose_functors(fx.to_model, compose_functors(r.on_hocolim, fx.from_model));
    validate_functor(r.on_model);
    return r;
}

Reflection derive_reflection(int n, const std::string& var)
{
    return derive_reflection(build_fixture(n, var));
}

}  // namespace dgcat

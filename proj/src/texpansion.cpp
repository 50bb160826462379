#include "dgcat/texpansion.hpp"

#include "dgcat/error.hpp"

namespace dgcat {

Term TContext::left_of(const Term& term) const
{
    return apply_assignment(*base, left_objects, left, term);
}

Term TContext::right_of(const Term& term) const
{
    return apply_assignment(*base, right_objects, right, term);
}

const Term& TContext::t_of_generator(const std::string& name) const
{
    auto it = t.find(name);
    if (it == t.end()) throw DgError(ErrorCode::UnknownGenerator, "no t-morphism for generator " + name, name);
    return it->second;
}

const Term& TContext::t_of_object(const ObjectId& object) const
{
    auto it = t_object.find(object);
    if (it == t_object.end()) throw DgError(ErrorCode::UnknownObject, "no t-morphism for object " + object.str(), object.str());
    return it->second;
}

Term expand_t(const TContext& ctx, const Term& theta)
{
    const ObjectId& ls = ctx.left_objects.at(theta.source());
    const ObjectId& rt = ctx.right_objects.at(theta.target());
    Term result(ls, rt, theta.degree() - 1);
    std::vector<Term> prefix;
    std::vector<Term> suffix;
    for (const auto& [word, c] : theta.support()) {
        const std::size_t n = word.size();
        if (n == 0) continue;
        prefix.clear();
        prefix.push_back(Term::identity(ls));
        for (std::size_t k = 0; k < n; ++k) {
            auto it = ctx.left.find(word[k]);
            if (it == ctx.left.end()) throw DgError(ErrorCode::UnknownGenerator, "no left image for " + word[k], word[k]);
            prefix.push_back(compose(it->second, prefix.back()));
        }
        suffix.assign(n + 1, Term());
        suffix[n] = Term::identity(rt);
        for (std::size_t k = n; k-- > 0;) {
            auto it = ctx.right.find(word[k]);
            if (it == ctx.right.end()) throw DgError(ErrorCode::UnknownGenerator, "no right image for " + word[k], word[k]);
            suffix[k] = compose(suffix[k + 1], it->second);
        }
        int before = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!prefix[j].is_zero() && !suffix[j + 1].is_zero()) {
                Term piece = compose(suffix[j + 1], compose(ctx.t_of_generator(word[j]), prefix[j]));
                if (!piece.is_zero()) result += (before % 2 == 0 ? c : -c) * piece;
            }
            before += ctx.base->generator(word[j]).degree;
        }
    }
    return result;
}

Term t_differential(const TContext& ctx, const Generator& f)
{
    Term left_f = ctx.left.at(f.name);
    Term right_f = ctx.right.at(f.name);
    Term boundary = compose(right_f, ctx.t_of_object(f.source)) - compose(ctx.t_of_object(f.target), left_f);
    if (f.degree % 2 != 0) boundary *= Scalar(-1);
    return boundary + expand_t(ctx, f.differential);
}

std::array<Term, 4> localized_t_terms(const TContext& ctx, const LocalizedInverse& inverse)
{
    const Term& g = inverse.morphism;
    const Term& ta = ctx.t_of_object(g.source());
    const Term& tb = ctx.t_of_object(g.target());
    const Term tg = expand_t(ctx, g);
    auto L = [&](int k) -> const Term& { return ctx.left.at(inverse.names[k]); };
    auto R = [&](int k) -> const Term& { return ctx.right.at(inverse.names[k]); };
    enum { P = 0, H = 1, C = 2, B = 3 };

    // composites in the right-hand copy
    Term hp_minus_pc = compose(R(H), R(P)) - compose(R(P), R(C));
    Term hh_plus_pb = compose(R(H), R(H)) + compose(R(P), R(B));
    Term cc_plus_bp = compose(R(C), R(C)) + compose(R(B), R(P));
    Term cb_minus_bh = compose(R(C), R(B)) - compose(R(B), R(H));

    Term t_p = -compose({&R(P), &tg, &L(P)}) - compose({&R(H), &ta, &L(P)}) + compose({&R(P), &tb, &L(C)}) + compose(hp_minus_pc, tb);
    Term t_h = compose({&R(P), &tg, &L(H)}) + compose({&R(H), &ta, &L(H)}) + compose({&R(P), &tb, &L(B)}) - compose(hh_plus_pb, ta) -
               compose(hp_minus_pc, tg);
    Term t_c = -compose({&R(C), &tg, &L(P)}) + compose({&R(C), &tb, &L(C)}) + compose({&R(B), &ta, &L(P)}) - compose(cc_plus_bp, tb);
    Term t_b = -compose({&R(C), &tg, &L(H)}) - compose({&R(C), &tb, &L(B)}) + compose({&R(B), &ta, &L(H)}) + compose(cb_minus_bh, ta) -
               compose(cc_plus_bp, tg);
    return {t_p, t_h, t_c, t_b};
}

void add_localized_t(TContext& ctx, const std::vector<LocalizedInverse>& inverses)
{
    for (const auto& inv : inverses) {
        auto terms = localized_t_terms(ctx, inv);
        for (int k = 0; k < 4; ++k) ctx.t[inv.names[k]] = terms[k];
    }
}

TFamilyNames t_family_names(std::string_view base_name)
{
    return {derived_name(prefix::t, base_name), derived_name(prefix::t_prime, base_name), derived_name(prefix::t_hat, base_name),
            derived_name(prefix::t_check, base_name), derived_name(prefix::t_bar, base_name)};
}

void append_t_family(std::vector<Generator>& gens, std::vector<LocalizedInverse>& localized, std::string_view base_name,
                     const ObjectId& left, const ObjectId& right)
{
    TFamilyNames n = t_family_names(base_name);
    Term t = Term::path(left, right, 0, {n.t});
    Term tp = Term::path(right, left, 0, {n.t_prime});
    Term th = Term::path(left, left, -1, {n.t_hat});
    Term tc = Term::path(right, right, -1, {n.t_check});
    gens.push_back({n.t, left, right, 0, Term(left, right, 1)});
    gens.push_back({n.t_prime, right, left, 0, Term(right, left, 1)});
    gens.push_back({n.t_hat, left, left, -1, Term::identity(left) - compose(tp, t)});
    gens.push_back({n.t_check, right, right, -1, Term::identity(right) - compose(t, tp)});
    gens.push_back({n.t_bar, left, right, -2, compose(t, th) - compose(tc, t)});
    localized.push_back({t, {n.t_prime, n.t_hat, n.t_check, n.t_bar}});
}

}  // namespace dgcat

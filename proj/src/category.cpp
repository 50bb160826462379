#include "dgcat/category.hpp"

#include <algorithm>
#include <set>

#include "dgcat/error.hpp"

namespace dgcat {

DgCategory::DgCategory(std::vector<ObjectId> objects, std::vector<Generator> generators, CoefficientRing ring,
                       std::vector<LocalizedInverse> localized)
    : objects_(std::move(objects)), generators_(std::move(generators)), ring_(ring), localized_(std::move(localized))
{
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (!object_index_.emplace(objects_[i], i).second)
            throw DgError(ErrorCode::DuplicateName, "object " + objects_[i].str() + " declared twice", objects_[i].str());
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!index_.emplace(generators_[i].name, i).second)
            throw DgError(ErrorCode::DuplicateName, "generator " + generators_[i].name + " declared twice", generators_[i].name);
    }
}

bool DgCategory::has_object(const ObjectId& object) const
{
    return object_index_.count(object) != 0;
}

const Generator* DgCategory::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &generators_[it->second];
}

const Generator& DgCategory::generator(std::string_view name) const
{
    const Generator* g = find(name);
    if (!g) throw DgError(ErrorCode::UnknownGenerator, "unknown generator " + std::string(name), std::string(name));
    return *g;
}

std::size_t DgCategory::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw DgError(ErrorCode::UnknownGenerator, "unknown generator " + std::string(name), std::string(name));
    return it->second;
}

Term DgCategory::gen(std::string_view name, const Scalar& coefficient) const
{
    const Generator& g = generator(name);
    return Term::path(g.source, g.target, g.degree, {g.name}, coefficient);
}

Term DgCategory::id(const ObjectId& object) const
{
    if (!has_object(object)) throw DgError(ErrorCode::UnknownObject, "unknown object " + object.str(), object.str());
    return Term::identity(object);
}

bool operator==(const DgCategory& a, const DgCategory& b)
{
    return a.objects_ == b.objects_ && a.ring_ == b.ring_ && a.generators_ == b.generators_ && a.localized_ == b.localized_;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int word_degree(const DgCategory& cat, const Word& word)
{
    int d = 0;
    for (const auto& letter : word) d += cat.generator(letter).degree;
    return d;
}

Term coerce(const Term& term, const CoefficientRing& ring)
{
    if (ring.kind() != CoefficientRing::Kind::Modular) return term;
    Term out(term.source(), term.target(), term.degree());
    for (const auto& [word, c] : term.support()) out.add(word, ring.element(c));
    return out;
}

void validate_term(const DgCategory& cat, const Term& term)
{
    if (!cat.has_object(term.source()))
        throw DgError(ErrorCode::UnknownObject, "unknown object " + term.source().str(), term.source().str());
    if (!cat.has_object(term.target()))
        throw DgError(ErrorCode::UnknownObject, "unknown object " + term.target().str(), term.target().str());
    for (const auto& [word, c] : term.support()) {
        if (!cat.ring().contains(c))
            throw DgError(ErrorCode::NotInRing, "coefficient " + c.str() + " is not in " + cat.ring().str());
        ObjectId at = term.source();
        int degree = 0;
        for (const auto& letter : word) {
            const Generator& g = cat.generator(letter);
            if (g.source != at)
                throw DgError(ErrorCode::EndpointMismatch, "generator " + letter + " does not start at " + at.str(), letter);
            at = g.target;
            degree += g.degree;
        }
        if (at != term.target())
            throw DgError(ErrorCode::EndpointMismatch, "path " + format_word(word, term.source()) + " does not end at " + term.target().str());
        if (degree != term.degree())
            throw DgError(ErrorCode::DegreeMismatch, "path " + format_word(word, term.source()) + " has degree " + std::to_string(degree) +
                                                         ", expected " + std::to_string(term.degree()));
    }
}

Term diff(const DgCategory& cat, const Term& term)
{
    Term result(term.source(), term.target(), term.degree() + 1);
    std::vector<int> degrees;
    std::vector<const Term*> diffs;
    for (const auto& [word, c] : term.support()) {
        const std::size_t n = word.size();
        degrees.resize(n);
        diffs.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Generator& g = cat.generator(word[k]);
            degrees[k] = g.degree;
            diffs[k] = &g.differential;
        }
        // sign of letter j: (-1)^(sum of degrees of letters applied after it)
        int later = 0;
        for (std::size_t jj = n; jj-- > 0;) {
            const Term& dj = *diffs[jj];
            if (!dj.is_zero()) {
                Scalar sign = (later % 2 == 0) ? c : -c;
                for (const auto& [inner, ci] : dj.support()) {
                    Word w;
                    w.reserve(n - 1 + inner.size());
                    w.insert(w.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(jj));
                    w.insert(w.end(), inner.begin(), inner.end());
                    w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(jj) + 1, word.end());
                    result.add(w, sign * ci);
                }
            }
            later += degrees[jj];
        }
    }
    return result;
}

Term diff_generator(const DgCategory& cat, std::string_view name)
{
    return cat.generator(name).differential;
}

DSquaredReport check_d_squared(const DgCategory& cat)
{
    DSquaredReport report;
    for (const auto& g : cat.generators()) {
        Term residual = diff(cat, g.differential);
        if (!residual.is_zero()) report.failures.push_back({g.name, residual});
    }
    return report;
}

namespace {

void validate_localized(const DgCategory& cat)
{
    for (const auto& loc : cat.localized()) {
        const Term& g = loc.morphism;
        validate_term(cat, g);
        if (!g.is_zero() && g.degree() != 0)
            throw DgError(ErrorCode::NotDegreeZero, "localized morphism " + to_string(g) + " is not of degree 0");
        if (!diff(cat, g).is_zero())
            throw DgError(ErrorCode::NotClosed, "localized morphism " + to_string(g) + " is not closed");
        const ObjectId& a = g.source();
        const ObjectId& b = g.target();
        Term gp = cat.gen(loc.names[0]);
        Term gh = cat.gen(loc.names[1]);
        Term gc = cat.gen(loc.names[2]);
        Term gb = cat.gen(loc.names[3]);
        Term expected_gp(b, a, 1);
        Term expected_gh = Term::identity(a) - compose(gp, g);
        Term expected_gc = Term::identity(b) - compose(g, gp);
        Term expected_gb = compose(g, gh) - compose(gc, g);
        auto check = [&](const Term& gen, int degree, const Term& expected, const std::string& name) {
            const Generator& gg = cat.generator(name);
            if (gen.source() != expected.source() || gen.target() != expected.target() || gg.degree != degree ||
                !(gg.differential == expected))
                throw DgError(ErrorCode::BadLocalizationData, "generator " + name + " does not match the localization pattern", name);
        };
        check(gp, 0, expected_gp, loc.names[0]);
        check(gh, -1, expected_gh, loc.names[1]);
        check(gc, -1, expected_gc, loc.names[2]);
        check(gb, -2, expected_gb, loc.names[3]);
    }
}

}  // namespace

CategoryPtr make_presentation(std::vector<ObjectId> objects, std::vector<Generator> generators, CoefficientRing ring,
                              std::vector<LocalizedInverse> localized)
{
    for (auto& g : generators) {
        if (g.differential.is_zero()) g.differential = Term(g.source, g.target, g.degree + 1);
        try {
            g.differential = coerce(g.differential, ring);
        } catch (DgError& e) {
            throw DgError(e.code(), "differential of " + g.name + ": " + e.what(), g.name);
        }
    }
    for (auto& loc : localized) loc.morphism = coerce(loc.morphism, ring);
    auto cat = std::make_shared<DgCategory>(std::move(objects), std::move(generators), ring, std::move(localized));

    for (const auto& g : cat->generators()) {
        for (const ObjectId* end : {&g.source, &g.target}) {
            if (!cat->has_object(*end))
                throw DgError(ErrorCode::DanglingEndpoint, "generator " + g.name + " refers to missing object " + end->str(), g.name);
        }
    }
    for (std::size_t i = 0; i < cat->generators().size(); ++i) {
        const Generator& g = cat->generators()[i];
        const Term& dg = g.differential;
        if (dg.source() != g.source || dg.target() != g.target)
            throw DgError(ErrorCode::EndpointMismatch, "differential of " + g.name + " has the wrong endpoints", g.name);
        for (const auto& [word, c] : dg.support()) {
            for (const auto& letter : word) {
                const Generator* h = cat->find(letter);
                if (!h)
                    throw DgError(ErrorCode::UnknownGenerator, "differential of " + g.name + " uses unknown generator " + letter, g.name);
                if (cat->index_of(letter) >= i)
                    throw DgError(ErrorCode::OrderViolation, "differential of " + g.name + " uses " + letter + ", which is not earlier", g.name);
            }
        }
        if (!dg.is_zero() && dg.degree() != g.degree + 1)
            throw DgError(ErrorCode::DegreeMismatch, "differential of " + g.name + " has degree " + std::to_string(dg.degree()) +
                                                         ", expected " + std::to_string(g.degree + 1), g.name);
        try {
            validate_term(*cat, dg);
        } catch (DgError& e) {
            throw DgError(e.code(), "differential of " + g.name + ": " + e.what(), g.name);
        }
        Term dd = diff(*cat, dg);
        if (!dd.is_zero())
            throw DgError(ErrorCode::DSquaredNonzero, "d^2(" + g.name + ") = " + to_string(dd), g.name).with_residual(dd);
    }
    validate_localized(*cat);
    return cat;
}

std::vector<Word> enumerate_paths(const DgCategory& cat, const ObjectId& source, const ObjectId& target, int degree,
                                  std::size_t max_length)
{
    std::map<ObjectId, std::vector<const Generator*>> outgoing;
    for (const auto& g : cat.generators()) outgoing[g.source].push_back(&g);
    std::vector<Word> found;
    Word current;
    auto walk = [&](auto&& self, const ObjectId& at, int deg) -> void {
        if (at == target && deg == degree) found.push_back(current);
        if (current.size() == max_length) return;
        auto it = outgoing.find(at);
        if (it == outgoing.end()) return;
        for (const Generator* g : it->second) {
            current.push_back(g->name);
            self(self, g->target, deg + g->degree);
            current.pop_back();
        }
    };
    walk(walk, source, 0);
    std::sort(found.begin(), found.end(), WordLess{});
    return found;
}

HomTruncation hom_truncation(const DgCategory& cat, const ObjectId& source, const ObjectId& target, int degree,
                             std::size_t max_length)
{
    if (!cat.has_object(source)) throw DgError(ErrorCode::UnknownObject, "unknown object " + source.str(), source.str());
    if (!cat.has_object(target)) throw DgError(ErrorCode::UnknownObject, "unknown object " + target.str(), target.str());
    HomTruncation h;
    h.basis = enumerate_paths(cat, source, target, degree, max_length);
    h.target_basis = enumerate_paths(cat, source, target, degree + 1, max_length);
    std::map<Word, std::size_t, WordLess> row_of;
    for (std::size_t r = 0; r < h.target_basis.size(); ++r) row_of[h.target_basis[r]] = r;
    h.escapes.assign(h.basis.size(), false);
    for (std::size_t col = 0; col < h.basis.size(); ++col) {
        Term d = diff(cat, Term::path(source, target, degree, h.basis[col]));
        for (const auto& [w, c] : d.support()) {
            auto it = row_of.find(w);
            if (it == row_of.end()) {
                h.escapes[col] = true;
                continue;
            }
            h.d_matrix[{it->second, col}] = c;
        }
    }
    return h;
}

}  // namespace dgcat

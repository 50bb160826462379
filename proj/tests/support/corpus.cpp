#include "corpus.hpp"

#include <algorithm>

namespace dgcat::testing {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items)
{
    return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

Scalar random_coefficient(const CoefficientRing& ring, Rng& rng)
{
    static const std::vector<std::string> rational = {"1", "-1", "2", "-2", "1/2", "-3/2", "3", "2/3"};
    static const std::vector<std::string> integral = {"1", "-1", "2", "-3"};
    const auto& pool = ring == CoefficientRing::rationals() ? rational : integral;
    Scalar c = ring.element(Scalar::parse(pick(rng, pool)));
    return c.is_zero() ? ring.element(1) : c;
}

bool all_closed(const DgCategory& cat, const Word& w)
{
    for (const auto& letter : w)
        if (!cat.generator(letter).differential.is_zero()) return false;
    return true;
}

// A closed term of `cat` with the given type, and a primitive when it was
// produced as a boundary.
struct ClosedChoice {
    Term term;
    std::optional<Term> primitive;
};

ClosedChoice closed_term(const DgCategory& cat, const ObjectId& s, const ObjectId& t, int degree, Rng& rng)
{
    int mode = uniform(rng, 0, 3);
    if (mode == 1) {
        std::vector<Word> closed;
        for (auto& w : enumerate_paths(cat, s, t, degree, 3))
            if (all_closed(cat, w)) closed.push_back(std::move(w));
        if (!closed.empty()) {
            Term r(s, t, degree);
            int k = uniform(rng, 1, 2);
            for (int i = 0; i < k; ++i) r.add(pick(rng, closed), random_coefficient(cat.ring(), rng));
            return {r, std::nullopt};
        }
    } else if (mode == 2) {
        std::vector<Word> candidates = enumerate_paths(cat, s, t, degree - 1, 2);
        if (!candidates.empty()) {
            Term e = Term::path(s, t, degree - 1, pick(rng, candidates), random_coefficient(cat.ring(), rng));
            Term de = diff(cat, e);
            if (!de.is_zero()) return {de, e};
        }
    }
    Term zero(s, t, degree);
    return {zero, zero};
}

bool in_range(const CorpusLimits& l, int degree)
{
    return degree >= l.min_degree && degree <= l.max_degree;
}

DgFunctor inclusion_functor(const CategoryPtr& small, const CategoryPtr& big)
{
    ObjectMap om;
    GeneratorMap gm;
    for (const auto& o : small->objects()) om.emplace(o, o);
    for (const auto& g : small->generators()) gm.emplace(g.name, big->gen(g.name));
    return make_functor(small, big, std::move(om), std::move(gm));
}

}  // namespace

CoefficientRing random_ring(Rng& rng)
{
    int r = uniform(rng, 0, 19);
    if (r < 15) return CoefficientRing::rationals();
    if (r < 18) return CoefficientRing::integers();
    return CoefficientRing::modular(r == 18 ? 5 : 7);
}

// ---------------------------------------------------------------- builder

SourceBuilder::SourceBuilder(std::vector<CategoryPtr> targets, Rng& rng, CorpusLimits limits, std::optional<CoefficientRing> ring)
    : targets_(std::move(targets)), rng_(rng), limits_(limits),
      ring_(ring ? *ring : (targets_.empty() ? CoefficientRing::rationals() : targets_.front()->ring())),
      object_maps_(targets_.size()), images_(targets_.size()), primitives_(targets_.size())
{
}

SourceBuilder::SourceBuilder(const CategoryPtr& start, const std::vector<DgFunctor>& functors, Rng& rng, CorpusLimits limits)
    : rng_(rng), limits_(limits), ring_(start->ring()), objects_(start->objects()), gens_(start->generators())
{
    for (const auto& f : functors) {
        targets_.push_back(f.target());
        object_maps_.push_back(f.object_map());
        images_.push_back(f.generator_map());
        primitives_.emplace_back();
    }
    counter_ = static_cast<int>(gens_.size());
}

DgCategory SourceBuilder::snapshot() const
{
    return DgCategory(objects_, gens_, ring_);
}

std::string SourceBuilder::fresh_name()
{
    for (;;) {
        std::string name = "g" + std::to_string(counter_++);
        if (chance(rng_, 0.15)) name += "'";
        bool taken = std::any_of(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.name == name; });
        if (!taken) return name;
    }
}

Scalar SourceBuilder::coefficient()
{
    return random_coefficient(ring_, rng_);
}

void SourceBuilder::add_object()
{
    static const std::vector<std::string> pool = {"A", "B", "C", "D", "E", "F", "G", "H", "P", "Q"};
    std::string name;
    for (const auto& candidate : pool) {
        if (std::find(objects_.begin(), objects_.end(), ObjectId(candidate)) == objects_.end()) {
            name = candidate;
            break;
        }
    }
    if (name.empty()) name = "O" + std::to_string(objects_.size());
    objects_.emplace_back(name);
    new_objects_.emplace_back(name);
    for (std::size_t i = 0; i < targets_.size(); ++i) object_maps_[i].emplace(ObjectId(name), pick(rng_, targets_[i]->objects()));
}

bool SourceBuilder::add_closed()
{
    const ObjectId s = pick(rng_, objects_);
    const ObjectId t = pick(rng_, objects_);
    int degree = uniform(rng_, limits_.min_degree, limits_.max_degree);
    std::string name = fresh_name();
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        ClosedChoice c = closed_term(*targets_[i], object_maps_[i].at(s), object_maps_[i].at(t), degree, rng_);
        images_[i].emplace(name, c.term);
        if (c.primitive) primitives_[i].emplace(name, *c.primitive);
    }
    gens_.push_back({name, s, t, degree, Term(s, t, degree + 1)});
    new_generators_.push_back(name);
    return true;
}

bool SourceBuilder::add_exact_of_path()
{
    DgCategory cat = snapshot();
    Term path = random_walk(cat, rng_, 3);
    if (path.is_zero() || path.support().begin()->first.empty()) return false;
    int degree = path.degree();
    if (!in_range(limits_, degree)) return false;
    Term dpath = diff(cat, path);
    if (dpath.is_zero()) return false;
    Scalar c = coefficient();
    std::string name = fresh_name();
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        Term image = c * apply_assignment(cat, object_maps_[i], images_[i], path);
        if (chance(rng_, 0.5)) image += closed_term(*targets_[i], image.source(), image.target(), degree, rng_).term;
        images_[i].emplace(name, image);
    }
    gens_.push_back({name, path.source(), path.target(), degree, c * dpath});
    new_generators_.push_back(name);
    return true;
}

bool SourceBuilder::add_bounding_closed_path()
{
    DgCategory cat = snapshot();
    Term path = random_walk(cat, rng_, 3, true);
    if (path.is_zero()) return false;
    int degree = path.degree() - 1;
    if (!in_range(limits_, degree)) return false;
    const Word& word = path.support().begin()->first;
    Scalar c = coefficient();
    std::vector<Term> images;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const DgCategory& tcat = *targets_[i];
        Term fp = apply_assignment(cat, object_maps_[i], images_[i], path);
        if (fp.is_zero()) {
            images.push_back(closed_term(tcat, fp.source(), fp.target(), degree, rng_).term);
            continue;
        }
        std::optional<Term> primitive;
        for (std::size_t j = 0; j < word.size() && !primitive; ++j) {
            auto it = primitives_[i].find(word[j]);
            if (it == primitives_[i].end()) continue;
            Word inner(word.begin(), word.begin() + static_cast<long>(j));
            Word outer(word.begin() + static_cast<long>(j) + 1, word.end());
            const Generator& letter = cat.generator(word[j]);
            Term y = apply_assignment(cat, object_maps_[i], images_[i],
                                      Term::path(path.source(), letter.source, word_degree(cat, inner), inner));
            Term x = apply_assignment(cat, object_maps_[i], images_[i],
                                      Term::path(letter.target, path.target(), word_degree(cat, outer), outer));
            Term candidate = compose({&x, &it->second, &y});
            if (x.degree() % 2 != 0) candidate = -candidate;
            if (diff(tcat, candidate) == fp) primitive = candidate;
        }
        if (!primitive) return false;
        images.push_back(c * *primitive);
    }
    std::string name = fresh_name();
    for (std::size_t i = 0; i < targets_.size(); ++i) images_[i].emplace(name, images[i]);
    gens_.push_back({name, path.source(), path.target(), degree, c * path});
    new_generators_.push_back(name);
    return true;
}

bool SourceBuilder::add_generator()
{
    if (objects_.empty()) add_object();
    for (int attempt = 0; attempt < 8; ++attempt) {
        int kind = uniform(rng_, 0, 2);
        if (kind == 1 && add_exact_of_path()) return true;
        if (kind == 2 && add_bounding_closed_path()) return true;
    }
    return add_closed();
}

void SourceBuilder::grow(int objects, int generators)
{
    for (int i = 0; i < objects && static_cast<int>(objects_.size()) < limits_.max_objects; ++i) add_object();
    if (objects_.empty()) add_object();
    for (int i = 0; i < generators && static_cast<int>(gens_.size()) < limits_.max_generators; ++i) add_generator();
}

CategoryPtr SourceBuilder::category() const
{
    return make_presentation(objects_, gens_, ring_);
}

std::vector<DgFunctor> SourceBuilder::functors(const CategoryPtr& source) const
{
    std::vector<DgFunctor> out;
    for (std::size_t i = 0; i < targets_.size(); ++i) out.push_back(make_functor(source, targets_[i], object_maps_[i], images_[i]));
    return out;
}

// ----------------------------------------------------------------- corpus

CategoryPtr random_category(Rng& rng, CorpusLimits limits)
{
    SourceBuilder b({}, rng, limits, random_ring(rng));
    b.grow(uniform(rng, 1, limits.max_objects), uniform(rng, 0, limits.max_generators));
    return b.category();
}

std::vector<CategoryPtr> category_corpus(std::uint64_t seed, int count, CorpusLimits limits)
{
    Rng rng(seed);
    std::vector<CategoryPtr> out;
    for (int i = 0; i < count; ++i) out.push_back(random_category(rng, limits));
    return out;
}

Term random_walk(const DgCategory& cat, Rng& rng, int max_length, bool closed_letters_only)
{
    if (cat.objects().empty()) return Term();
    ObjectId start = pick(rng, cat.objects());
    ObjectId at = start;
    Word word;
    int degree = 0;
    int length = uniform(rng, 0, max_length);
    for (int step = 0; step < length; ++step) {
        std::vector<const Generator*> out;
        for (const auto& g : cat.generators())
            if (g.source == at && (!closed_letters_only || g.differential.is_zero())) out.push_back(&g);
        if (out.empty()) break;
        const Generator* g = pick(rng, out);
        word.push_back(g->name);
        degree += g->degree;
        at = g->target;
    }
    return Term::path(start, at, degree, word);
}

Term random_term(const DgCategory& cat, Rng& rng)
{
    Term walk = random_walk(cat, rng, 4);
    const Word& w = walk.support().begin()->first;
    Term r(walk.source(), walk.target(), walk.degree());
    r.add(w, random_coefficient(cat.ring(), rng));
    std::vector<Word> parallel = enumerate_paths(cat, walk.source(), walk.target(), walk.degree(), std::max<std::size_t>(w.size(), 2));
    if (!parallel.empty()) {
        int extra = uniform(rng, 0, 2);
        for (int i = 0; i < extra; ++i) r.add(pick(rng, parallel), random_coefficient(cat.ring(), rng));
    }
    return r;
}

Term Regrouping::total() const
{
    int degree = 0;
    if (!factors.empty())
        for (const auto& f : factors.front()) degree += f.degree();
    Term sum(source, target, degree);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Term product = factors[i].front();
        for (std::size_t j = 1; j < factors[i].size(); ++j) product = compose(factors[i][j], product);
        sum += coefficients[i] * product;
    }
    if (identity_coefficient) sum += Term::identity(source, *identity_coefficient);
    return sum;
}

std::optional<Regrouping> random_regrouping(const DgCategory& cat, Rng& rng)
{
    Term walk = random_walk(cat, rng, 5);
    const Word& w = walk.support().begin()->first;
    if (w.empty()) return std::nullopt;
    Regrouping r;
    r.source = walk.source();
    r.target = walk.target();

    auto factorize = [&](const Word& word) {
        std::vector<Term> factors;
        std::size_t i = 0;
        ObjectId at = r.source;
        while (i < word.size()) {
            std::size_t len = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(word.size() - i)));
            Word piece(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i + len));
            ObjectId end = cat.generator(piece.back()).target;
            int deg = word_degree(cat, piece);
            Term f = Term::path(at, end, deg, piece, random_coefficient(cat.ring(), rng));
            if (chance(rng, 0.5)) {
                auto others = enumerate_paths(cat, at, end, deg, 3);
                if (!others.empty()) f.add(pick(rng, others), random_coefficient(cat.ring(), rng));
            }
            factors.push_back(std::move(f));
            at = end;
            i += len;
        }
        return factors;
    };

    r.factors.push_back(factorize(w));
    r.coefficients.push_back(random_coefficient(cat.ring(), rng));
    auto parallel = enumerate_paths(cat, r.source, r.target, walk.degree(), 4);
    std::vector<Word> nonempty;
    for (auto& p : parallel)
        if (!p.empty()) nonempty.push_back(std::move(p));
    if (!nonempty.empty() && chance(rng, 0.6)) {
        r.factors.push_back(factorize(pick(rng, nonempty)));
        r.coefficients.push_back(random_coefficient(cat.ring(), rng));
    }
    if (r.source == r.target && walk.degree() == 0 && chance(rng, 0.5))
        r.identity_coefficient = random_coefficient(cat.ring(), rng);
    return r;
}

DgFunctor random_functor_into(const CategoryPtr& target, Rng& rng, CorpusLimits limits)
{
    SourceBuilder b({target}, rng, limits);
    b.grow(uniform(rng, 1, 3), uniform(rng, 0, 5));
    return b.functors(b.category()).front();
}

Span random_span_over(const CategoryPtr& left, const CategoryPtr& right, Rng& rng, CorpusLimits limits)
{
    SourceBuilder b({left, right}, rng, limits);
    b.grow(uniform(rng, 1, 3), uniform(rng, 0, 5));
    auto fs = b.functors(b.category());
    return make_span(fs[0], fs[1]);
}

Span random_span(Rng& rng, CorpusLimits limits)
{
    CategoryPtr left = random_category(rng, limits);
    SourceBuilder rb({}, rng, limits, left->ring());
    rb.grow(uniform(rng, 1, limits.max_objects), uniform(rng, 0, limits.max_generators));
    return random_span_over(left, rb.category(), rng, limits);
}

SpanMorphism random_span_morphism_into(const Span& x, Rng& rng, CorpusLimits limits)
{
    DgFunctor f = random_functor_into(x.apex(), rng, limits);
    Span source = make_span(compose_functors(x.alpha, f), compose_functors(x.beta, f));
    return make_span_morphism(source, x, identity_functor(x.left()), f, identity_functor(x.right()));
}

std::pair<Square, Square> random_composable_squares(Rng& rng, CorpusLimits limits)
{
    CategoryPtr b = random_category(rng, limits);
    DgFunctor f2 = random_functor_into(b, rng, limits);
    DgFunctor alpha2 = random_functor_into(f2.source(), rng, limits);
    DgFunctor f1 = compose_functors(f2, alpha2);
    DgFunctor alpha1 = random_functor_into(f1.source(), rng, limits);
    DgFunctor f0 = compose_functors(f1, alpha1);
    DgFunctor beta2 = identity_functor(b);
    if (chance(rng, 0.5)) {
        SourceBuilder ext(b, {}, rng, limits);
        ext.grow(uniform(rng, 0, 1), uniform(rng, 1, 2));
        CategoryPtr bigger = ext.category();
        beta2 = inclusion_functor(b, bigger);
        f2 = compose_functors(beta2, f2);
    }
    Square first{f0, f1, alpha1, identity_functor(b)};
    Square second{f1, f2, alpha2, beta2};
    return {first, second};
}

HepTriple random_hep_triple(Rng& rng, CorpusLimits limits)
{
    CategoryPtr c = random_category(rng, limits);
    SourceBuilder b({c}, rng, limits);
    b.grow(uniform(rng, 1, 2), uniform(rng, 0, 3));
    CategoryPtr a = b.category();
    DgFunctor g_a = b.functors(a).front();
    b.grow(uniform(rng, 0, 1), uniform(rng, 1, 3));
    CategoryPtr big = b.category();

    HepTriple t;
    t.f = SemifreeExtension(inclusion_functor(a, big));
    t.side = uniform(rng, 1, 2);
    t.g = b.functors(big).front();
    CylinderData cyl = cyl_object(a);
    DgFunctor h = compose_functors(g_a, cyl.p);
    if (chance(rng, 0.5)) {
        // Replace the homotopies at one object by the same closed term.
        const ObjectId& x = pick(rng, a->objects());
        const ObjectId& gx = g_a(x);
        Term shift = closed_term(*c, gx, gx, -1, rng).term;
        GeneratorMap gm = h.generator_map();
        TFamilyNames fam = t_family_names(x.str());
        gm[fam.t_hat] = shift;
        gm[fam.t_check] = shift;
        h = make_functor(cyl.cylinder, c, h.object_map(), std::move(gm));
    } else {
        validate_functor(h);
    }
    t.h = h;
    return t;
}

CategoryPtr category_with_one_nonclosed_generator()
{
    std::vector<Generator> gens;
    gens.push_back({"f", "A", "B", 0, Term("A", "B", 1)});
    gens.push_back({"g", "A", "B", 0, Term("A", "B", 1)});
    gens.push_back({"e", "B", "B", 1, Term("B", "B", 2)});
    Term dh = Term::path("A", "B", 0, {"f"}) - Term::path("A", "B", 0, {"g"});
    gens.push_back({"h", "A", "B", -1, dh});
    return make_presentation({"A", "B"}, std::move(gens));
}

}  // namespace dgcat::testing

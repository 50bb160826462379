#include "dgcat/dsl.hpp"

#include <cctype>
#include <functional>
#include <algorithm>
#include <set>
#include <sstream>

#include "dgcat/constructions.hpp"

namespace dgcat {

// ---------------------------------------------------------------- workspace

namespace {

template <typename T>
const T& lookup(const NamedList<T>& list, std::string_view name, std::string_view kind)
{
    const T* v = list.find(name);
    if (!v)
        throw DgError(ErrorCode::ResolutionError, "no " + std::string(kind) + " named " + std::string(name), std::string(name));
    return *v;
}

template <typename T>
void merge_list(NamedList<T>& into, const NamedList<T>& from)
{
    for (const auto& e : from.entries()) into.add(e.name, e.value, e.position);
}

}  // namespace

const CategoryPtr& Workspace::category(std::string_view name) const { return lookup(categories, name, "category"); }
const DgFunctor& Workspace::functor(std::string_view name) const { return lookup(functors, name, "functor"); }
const Span& Workspace::span(std::string_view name) const { return lookup(spans, name, "span"); }
const SpanMorphism& Workspace::span_morphism(std::string_view name) const
{
    return lookup(span_morphisms, name, "span map");
}

std::optional<std::string> Workspace::name_of(const CategoryPtr& cat) const
{
    for (const auto& e : categories.entries())
        if (e.value == cat) return e.name;
    for (const auto& e : categories.entries())
        if (same_category(e.value, cat)) return e.name;
    return std::nullopt;
}

std::optional<std::string> Workspace::name_of(const DgFunctor& f) const
{
    for (const auto& e : functors.entries())
        if (functor_equal(e.value, f)) return e.name;
    return std::nullopt;
}

std::optional<std::string> Workspace::name_of(const Span& x) const
{
    for (const auto& e : spans.entries())
        if (functor_equal(e.value.alpha, x.alpha) && functor_equal(e.value.beta, x.beta)) return e.name;
    return std::nullopt;
}

void Workspace::merge(const Workspace& other)
{
    merge_list(categories, other.categories);
    merge_list(functors, other.functors);
    merge_list(spans, other.spans);
    merge_list(span_morphisms, other.span_morphisms);
}

// ------------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Quoted, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePosition pos;
};

[[noreturn]] void syntax_error(const std::string& message, SourcePosition pos)
{
    DgError err(ErrorCode::SyntaxError, message);
    err.at(pos);
    throw err;
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        auto uc = static_cast<unsigned char>(c);
        SourcePosition pos{line, col};
        if (std::isspace(uc)) {
            advance(1);
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (std::isalpha(uc) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
            advance(j - i);
        } else if (std::isdigit(uc)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Number, std::string(text.substr(i, j - i)), pos});
            advance(j - i);
        } else if (c == '`') {
            std::size_t j = text.find('`', i + 1);
            if (j == std::string_view::npos) syntax_error("unterminated quoted name", pos);
            std::string name(text.substr(i + 1, j - i - 1));
            if (name.empty()) syntax_error("empty quoted name", pos);
            if (name.find('\n') != std::string::npos) syntax_error("quoted name spans lines", pos);
            out.push_back({Tok::Quoted, std::move(name), pos});
            advance(j + 1 - i);
        } else if ((c == '-' || c == '=') && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Punct, std::string(text.substr(i, 2)), pos});
            advance(2);
        } else if (std::string_view("{}();,:=*+-/").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), pos});
            advance(1);
        } else {
            syntax_error(std::string("unexpected character '") + c + "'", pos);
        }
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

// ------------------------------------------------------------ expressions

struct GenHeader {
    ObjectId source;
    ObjectId target;
    int degree = 0;
};

struct Scope {
    std::function<const GenHeader*(const std::string&)> generator;
    std::function<bool(const ObjectId&)> has_object;
    CoefficientRing ring;
};

// A partially evaluated expression: a scalar until a morphism shows up.
struct Value {
    std::optional<Term> term;
    Scalar scalar = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    std::size_t mark() const { return pos_; }
    void reset(std::size_t m) { pos_ = m; }
    bool at_end() const { return peek().kind == Tok::End; }

    bool is_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool is_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

    const Token& next()
    {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    bool accept_punct(std::string_view p)
    {
        if (!is_punct(p)) return false;
        next();
        return true;
    }
    bool accept_word(std::string_view w)
    {
        if (!is_word(w)) return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        syntax_error("expected " + expected + ", found " + got, t.pos);
    }

    void expect_punct(std::string_view p)
    {
        if (!accept_punct(p)) fail("'" + std::string(p) + "'");
    }
    void expect_word(std::string_view w)
    {
        if (!accept_word(w)) fail("'" + std::string(w) + "'");
    }

    std::string name(const std::string& what = "a name")
    {
        if (peek().kind != Tok::Ident && peek().kind != Tok::Quoted) fail(what);
        return next().text;
    }

    int integer()
    {
        bool negative = accept_punct("-");
        if (peek().kind != Tok::Number) fail("an integer");
        const Token& t = next();
        if (t.text.size() > 9) syntax_error("integer out of range", t.pos);
        int v = std::stoi(t.text);
        return negative ? -v : v;
    }

    // Skips to the ';' or ',' ending an expression at parenthesis depth 0.
    void skip_expression()
    {
        int depth = 0;
        while (!at_end()) {
            if (depth == 0 && (is_punct(";") || is_punct(",") || is_punct("}") || is_word("as"))) return;
            if (is_punct("(")) ++depth;
            if (is_punct(")")) --depth;
            next();
        }
    }

    Term expression(const Scope& scope, const std::optional<TermType>& expected)
    {
        SourcePosition start = peek().pos;
        Value v = sum(scope);
        if (v.term) {
            if (expected && v.term->is_zero()) return Term(expected->source, expected->target, expected->degree);
            return *v.term;
        }
        if (!v.scalar.is_zero()) syntax_error("a bare nonzero scalar is not a morphism; write c*id(A)", start);
        if (!expected) syntax_error("cannot infer the endpoints of 0 here", start);
        return Term(expected->source, expected->target, expected->degree);
    }

private:
    Value sum(const Scope& scope)
    {
        bool negative = false;
        if (accept_punct("-"))
            negative = true;
        else
            accept_punct("+");
        SourcePosition pos = peek().pos;
        Value acc = product(scope);
        if (negative) negate(acc);
        while (is_punct("+") || is_punct("-")) {
            bool minus = next().text == "-";
            pos = peek().pos;
            Value rhs = product(scope);
            if (minus) negate(rhs);
            add(acc, rhs, pos);
        }
        return acc;
    }

    static void negate(Value& v)
    {
        if (v.term) *v.term = -*v.term;
        v.scalar = -v.scalar;
    }

    static void add(Value& acc, const Value& rhs, SourcePosition pos)
    {
        try {
            if (acc.term && rhs.term) {
                *acc.term += *rhs.term;
            } else if (rhs.term) {
                if (!acc.scalar.is_zero()) syntax_error("cannot add a scalar to a morphism; write c*id(A)", pos);
                acc.term = rhs.term;
            } else if (acc.term) {
                if (!rhs.scalar.is_zero()) syntax_error("cannot add a scalar to a morphism; write c*id(A)", pos);
            } else {
                acc.scalar = acc.scalar + rhs.scalar;
            }
        } catch (DgError& e) {
            if (!e.position()) e.at(pos);
            throw;
        }
    }

    Value product(const Scope& scope)
    {
        Value acc = factor(scope);
        while (is_punct("*")) {
            next();
            SourcePosition pos = peek().pos;
            Value rhs = factor(scope);
            try {
                if (acc.term && rhs.term) {
                    acc.term = compose(*acc.term, *rhs.term);
                } else if (acc.term) {
                    *acc.term *= rhs.scalar;
                } else if (rhs.term) {
                    acc.term = acc.scalar * *rhs.term;
                } else {
                    acc.scalar = acc.scalar * rhs.scalar;
                }
            } catch (DgError& e) {
                if (!e.position()) e.at(pos);
                throw;
            }
        }
        return acc;
    }

    Value factor(const Scope& scope)
    {
        const Token& t = peek();
        SourcePosition pos = t.pos;
        if (t.kind == Tok::Number) {
            std::string literal = next().text;
            if (accept_punct("/")) {
                if (peek().kind != Tok::Number) fail("a denominator");
                literal += "/" + next().text;
            }
            try {
                return Value{std::nullopt, scope.ring.element(Scalar::parse(literal))};
            } catch (DgError& e) {
                if (!e.position()) e.at(pos);
                throw;
            }
        }
        if (accept_punct("(")) {
            Value v = sum(scope);
            expect_punct(")");
            return v;
        }
        if (t.kind == Tok::Ident && t.text == "id" && peek(1).kind == Tok::Punct && peek(1).text == "(") {
            next();
            next();
            SourcePosition opos = peek().pos;
            ObjectId obj(name("an object name"));
            expect_punct(")");
            if (!scope.has_object(obj)) {
                DgError err(ErrorCode::UnknownObject, "unknown object " + obj.str(), obj.str());
                err.at(opos);
                throw err;
            }
            return Value{Term::identity(obj, scope.ring.element(1)), 0};
        }
        if (t.kind == Tok::Ident || t.kind == Tok::Quoted) {
            std::string gen = next().text;
            const GenHeader* h = scope.generator(gen);
            if (!h) {
                DgError err(ErrorCode::UnknownGenerator, "unknown generator " + gen, gen);
                err.at(pos);
                throw err;
            }
            return Value{Term::path(h->source, h->target, h->degree, {gen}, scope.ring.element(1)), 0};
        }
        fail("an expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Scope category_scope(const DgCategory& cat)
{
    auto headers = std::make_shared<std::map<std::string, GenHeader, std::less<>>>();
    for (const auto& g : cat.generators()) headers->emplace(g.name, GenHeader{g.source, g.target, g.degree});
    Scope s;
    s.generator = [headers](const std::string& n) -> const GenHeader* {
        auto it = headers->find(n);
        return it == headers->end() ? nullptr : &it->second;
    };
    s.has_object = [&cat](const ObjectId& o) { return cat.has_object(o); };
    s.ring = cat.ring();
    return s;
}

// Attaches `pos` to errors that do not carry a position yet.
template <typename F>
auto positioned(SourcePosition pos, F&& body)
{
    try {
        return body();
    } catch (DgError& e) {
        if (!e.position()) e.at(pos);
        throw;
    }
}

// ------------------------------------------------------------- statements

struct PendingGen {
    std::string name;
    GenHeader header;
    std::size_t expr;
    SourcePosition pos;
};

struct PendingInverse {
    std::size_t expr;
    std::optional<std::array<std::string, 4>> names;
    std::optional<std::string> label;
    SourcePosition pos;
};

void parse_category(Parser& p, Workspace& ws)
{
    SourcePosition pos = p.peek().pos;
    p.expect_word("category");
    std::string cat_name = p.name("a category name");
    CoefficientRing ring = CoefficientRing::rationals();
    if (p.accept_word("over")) {
        SourcePosition rpos = p.peek().pos;
        std::string text = p.name("a coefficient ring");
        if (p.accept_punct("/")) {
            if (p.peek().kind != Tok::Number) p.fail("a modulus");
            text += "/" + p.next().text;
        }
        ring = positioned(rpos, [&] { return CoefficientRing::parse(text); });
    }
    p.expect_punct("{");

    std::vector<ObjectId> objects;
    std::map<ObjectId, SourcePosition> object_pos;
    std::vector<PendingGen> gens;
    std::vector<PendingInverse> localize_block;
    std::vector<PendingInverse> recorded;
    while (!p.accept_punct("}")) {
        if (p.accept_word("object")) {
            do {
                SourcePosition opos = p.peek().pos;
                ObjectId o(p.name("an object name"));
                if (object_pos.count(o)) {
                    DgError err(ErrorCode::DuplicateName, "object " + o.str() + " is declared twice", o.str());
                    err.at(opos);
                    throw err;
                }
                object_pos.emplace(o, opos);
                objects.push_back(o);
            } while (p.accept_punct(","));
            p.expect_punct(";");
        } else if (p.is_word("gen")) {
            SourcePosition gpos = p.next().pos;
            PendingGen g;
            g.pos = gpos;
            g.name = p.name("a generator name");
            p.expect_punct(":");
            g.header.source = ObjectId(p.name("an object name"));
            p.expect_punct("->");
            g.header.target = ObjectId(p.name("an object name"));
            p.expect_word("deg");
            g.header.degree = p.integer();
            p.expect_word("d");
            g.expr = p.mark();
            p.skip_expression();
            p.expect_punct(";");
            gens.push_back(std::move(g));
        } else if (p.accept_word("localize")) {
            p.expect_punct("{");
            if (!p.is_punct("}")) {
                do {
                    PendingInverse inv;
                    inv.pos = p.peek().pos;
                    inv.expr = p.mark();
                    p.skip_expression();
                    if (p.accept_word("as")) inv.label = p.name("a label");
                    localize_block.push_back(std::move(inv));
                } while (p.accept_punct(","));
            }
            p.expect_punct("}");
            p.accept_punct(";");
        } else if (p.is_word("localized")) {
            PendingInverse inv;
            inv.pos = p.next().pos;
            inv.expr = p.mark();
            p.skip_expression();
            p.expect_word("as");
            p.expect_punct("(");
            std::array<std::string, 4> names;
            for (int k = 0; k < 4; ++k) {
                if (k > 0) p.expect_punct(",");
                names[k] = p.name("a generator name");
            }
            p.expect_punct(")");
            p.expect_punct(";");
            inv.names = names;
            recorded.push_back(std::move(inv));
        } else {
            p.fail("'object', 'gen', 'localize', 'localized' or '}'");
        }
    }
    std::size_t resume = p.mark();

    std::map<std::string, GenHeader, std::less<>> headers;
    std::map<std::string, SourcePosition> gen_pos;
    for (const auto& g : gens) {
        if (!headers.emplace(g.name, g.header).second) {
            DgError err(ErrorCode::DuplicateName, "generator " + g.name + " is declared twice", g.name);
            err.at(g.pos);
            throw err;
        }
        gen_pos.emplace(g.name, g.pos);
    }
    Scope scope;
    scope.generator = [&](const std::string& n) -> const GenHeader* {
        auto it = headers.find(n);
        return it == headers.end() ? nullptr : &it->second;
    };
    scope.has_object = [&](const ObjectId& o) { return object_pos.count(o) > 0; };
    scope.ring = ring;

    std::vector<Generator> built;
    for (const auto& g : gens) {
        p.reset(g.expr);
        TermType expected{g.header.source, g.header.target, g.header.degree + 1};
        Term d = p.expression(scope, expected);
        built.push_back({g.name, g.header.source, g.header.target, g.header.degree, std::move(d)});
    }
    std::vector<LocalizedInverse> metadata;
    for (const auto& r : recorded) {
        p.reset(r.expr);
        metadata.push_back({p.expression(scope, std::nullopt), *r.names});
    }

    auto locate = [&](DgError& e) {
        if (e.position()) return;
        auto it = gen_pos.find(e.subject());
        if (it != gen_pos.end()) {
            e.at(it->second);
            return;
        }
        auto ot = object_pos.find(ObjectId(e.subject()));
        e.at(ot != object_pos.end() ? ot->second : pos);
    };
    CategoryPtr cat;
    try {
        cat = make_presentation(objects, std::move(built), ring, std::move(metadata));
    } catch (DgError& e) {
        locate(e);
        throw;
    }

    if (!localize_block.empty()) {
        std::vector<LocalizedInverse> data;
        std::size_t index = cat->localized().size();
        for (const auto& inv : localize_block) {
            p.reset(inv.expr);
            Term m = p.expression(scope, std::nullopt);
            ++index;
            std::string label = inv.label ? *inv.label : localization_label(m, index);
            data.push_back({std::move(m), localization_names(label)});
        }
        try {
            cat = localize_named(cat, data).category;
        } catch (DgError& e) {
            if (!e.position()) e.at(localize_block.front().pos);
            throw;
        }
    }
    p.reset(resume);
    ws.categories.add(cat_name, cat, pos);
}

}  // namespace

namespace {

void parse_functor(Parser& p, Workspace& ws)
{
    SourcePosition pos = p.peek().pos;
    p.expect_word("functor");
    std::string fname = p.name("a functor name");
    p.expect_punct(":");
    SourcePosition spos = p.peek().pos;
    std::string src = p.name("a category name");
    p.expect_punct("->");
    SourcePosition tpos = p.peek().pos;
    std::string dst = p.name("a category name");
    CategoryPtr source = positioned(spos, [&] { return ws.category(src); });
    CategoryPtr target = positioned(tpos, [&] { return ws.category(dst); });
    p.expect_punct("{");

    ObjectMap objects;
    std::map<std::string, SourcePosition> item_pos;
    std::vector<std::pair<std::string, std::size_t>> images;
    auto claim = [&](const std::string& key, const std::string& what, SourcePosition at) {
        if (!item_pos.emplace(key, at).second) {
            DgError err(ErrorCode::DuplicateName, what + " is assigned twice", key);
            err.at(at);
            throw err;
        }
    };
    while (!p.accept_punct("}")) {
        SourcePosition ipos = p.peek().pos;
        if (p.accept_word("object")) {
            ObjectId from(p.name("an object name"));
            p.expect_punct("=>");
            ObjectId to(p.name("an object name"));
            p.expect_punct(";");
            claim(from.str(), "object " + from.str(), ipos);
            objects.emplace(from, to);
        } else if (p.accept_word("gen")) {
            std::string g = p.name("a generator name");
            p.expect_punct("=>");
            images.emplace_back(g, p.mark());
            p.skip_expression();
            p.expect_punct(";");
            claim(g, "generator " + g, ipos);
        } else {
            p.fail("'object', 'gen' or '}'");
        }
    }
    std::size_t resume = p.mark();

    Scope scope = category_scope(*target);
    GeneratorMap gens;
    for (const auto& [g, expr] : images) {
        SourcePosition at = item_pos.at(g);
        const Generator* sg = source->find(g);
        if (!sg) {
            DgError err(ErrorCode::UnknownGenerator, "no generator " + g + " in " + src, g);
            err.at(at);
            throw err;
        }
        auto so = objects.find(sg->source);
        auto to = objects.find(sg->target);
        if (so == objects.end() || to == objects.end()) {
            DgError err(ErrorCode::ResolutionError, "endpoints of " + g + " are not mapped", g);
            err.at(at);
            throw err;
        }
        p.reset(expr);
        gens.emplace(g, p.expression(scope, TermType{so->second, to->second, sg->degree}));
    }
    DgFunctor f;
    try {
        f = make_functor(source, target, std::move(objects), std::move(gens));
    } catch (DgError& e) {
        if (!e.position()) {
            auto it = item_pos.find(e.subject());
            e.at(it != item_pos.end() ? it->second : pos);
        }
        throw;
    }
    p.reset(resume);
    ws.functors.add(fname, std::move(f), pos);
}

// Parses `key = NAME;` items until '}' for the given keys.
std::map<std::string, std::pair<std::string, SourcePosition>> parse_fields(Parser& p, const std::vector<std::string>& keys)
{
    std::map<std::string, std::pair<std::string, SourcePosition>> fields;
    p.expect_punct("{");
    while (!p.accept_punct("}")) {
        SourcePosition kpos = p.peek().pos;
        std::string key = p.name("a field name");
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) syntax_error("unknown field " + key, kpos);
        p.expect_punct("=");
        SourcePosition vpos = p.peek().pos;
        std::string value = p.name("a functor name");
        p.expect_punct(";");
        if (!fields.emplace(key, std::make_pair(value, vpos)).second) syntax_error("field " + key + " is given twice", kpos);
    }
    for (const auto& k : keys)
        if (!fields.count(k)) syntax_error("missing field " + k, p.peek().pos);
    return fields;
}

void parse_span(Parser& p, Workspace& ws)
{
    SourcePosition pos = p.peek().pos;
    p.expect_word("span");
    std::string name = p.name("a span name");
    auto fields = parse_fields(p, {"left", "right"});
    auto get = [&](const std::string& key) {
        const auto& [value, at] = fields.at(key);
        return positioned(at, [&] { return ws.functor(value); });
    };
    Span x = positioned(pos, [&] { return make_span(get("left"), get("right")); });
    ws.spans.add(name, std::move(x), pos);
}

void parse_span_morphism(Parser& p, Workspace& ws)
{
    SourcePosition pos = p.peek().pos;
    p.expect_word("spanmap");
    std::string name = p.name("a span map name");
    p.expect_punct(":");
    SourcePosition spos = p.peek().pos;
    Span source = positioned(spos, [&] { return ws.span(p.name("a span name")); });
    p.expect_punct("->");
    SourcePosition tpos = p.peek().pos;
    Span target = positioned(tpos, [&] { return ws.span(p.name("a span name")); });
    auto fields = parse_fields(p, {"left", "middle", "right"});
    auto get = [&](const std::string& key) {
        const auto& [value, at] = fields.at(key);
        return positioned(at, [&] { return ws.functor(value); });
    };
    SpanMorphism m = positioned(pos, [&] {
        return make_span_morphism(std::move(source), std::move(target), get("left"), get("middle"), get("right"));
    });
    ws.span_morphisms.add(name, std::move(m), pos);
}

}  // namespace

Workspace parse(std::string_view text)
{
    Parser p(tokenize(text));
    Workspace ws;
    while (!p.at_end()) {
        if (p.is_word("category"))
            parse_category(p, ws);
        else if (p.is_word("functor"))
            parse_functor(p, ws);
        else if (p.is_word("span"))
            parse_span(p, ws);
        else if (p.is_word("spanmap"))
            parse_span_morphism(p, ws);
        else
            p.fail("'category', 'functor', 'span' or 'spanmap'");
    }
    return ws;
}

Term parse_term(const DgCategory& cat, std::string_view text, const std::optional<TermType>& expected)
{
    Parser p(tokenize(text));
    Term t = p.expression(category_scope(cat), expected);
    if (!p.at_end()) p.fail("end of expression");
    validate_term(cat, t);
    return t;
}

// --------------------------------------------------------------- serializer

std::string serialize_term(const Term& term)
{
    return to_string(term);
}

std::string serialize_category(std::string_view name, const DgCategory& cat)
{
    std::ostringstream out;
    out << "category " << quoted(name);
    if (!(cat.ring() == CoefficientRing::rationals())) out << " over " << cat.ring().str();
    out << " {\n";
    if (!cat.objects().empty()) {
        out << "  object ";
        for (std::size_t i = 0; i < cat.objects().size(); ++i) out << (i ? ", " : "") << quoted(cat.objects()[i].str());
        out << ";\n";
    }
    for (const auto& g : cat.generators())
        out << "  gen " << quoted(g.name) << " : " << quoted(g.source.str()) << " -> " << quoted(g.target.str()) << " deg "
            << g.degree << " d " << serialize_term(g.differential) << ";\n";
    for (const auto& loc : cat.localized()) {
        out << "  localized " << serialize_term(loc.morphism) << " as (";
        for (std::size_t k = 0; k < 4; ++k) out << (k ? ", " : "") << quoted(loc.names[k]);
        out << ");\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string require_name(const std::optional<std::string>& n, const std::string& what)
{
    if (!n) throw DgError(ErrorCode::ResolutionError, what + " is not part of the workspace");
    return *n;
}

std::string serialize_functor(const Workspace& ws, std::string_view name, const DgFunctor& f)
{
    std::ostringstream out;
    out << "functor " << quoted(name) << " : " << quoted(require_name(ws.name_of(f.source()), "source of " + std::string(name)))
        << " -> " << quoted(require_name(ws.name_of(f.target()), "target of " + std::string(name))) << " {\n";
    for (const auto& o : f.source()->objects()) out << "  object " << quoted(o.str()) << " => " << quoted(f(o).str()) << ";\n";
    for (const auto& g : f.source()->generators())
        out << "  gen " << quoted(g.name) << " => " << serialize_term(f.image(g.name)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string serialize(const Workspace& ws)
{
    std::vector<std::string> blocks;
    for (const auto& e : ws.categories.entries()) blocks.push_back(serialize_category(e.name, *e.value));
    for (const auto& e : ws.functors.entries()) blocks.push_back(serialize_functor(ws, e.name, e.value));
    for (const auto& e : ws.spans.entries()) {
        std::ostringstream out;
        out << "span " << quoted(e.name) << " {\n  left = "
            << quoted(require_name(ws.name_of(e.value.alpha), "left leg of " + e.name)) << ";\n  right = "
            << quoted(require_name(ws.name_of(e.value.beta), "right leg of " + e.name)) << ";\n}\n";
        blocks.push_back(out.str());
    }
    for (const auto& e : ws.span_morphisms.entries()) {
        const SpanMorphism& m = e.value;
        std::ostringstream out;
        out << "spanmap " << quoted(e.name) << " : " << quoted(require_name(ws.name_of(m.source), "source of " + e.name))
            << " -> " << quoted(require_name(ws.name_of(m.target), "target of " + e.name)) << " {\n"
            << "  left = " << quoted(require_name(ws.name_of(m.on_left), "left part of " + e.name)) << ";\n"
            << "  middle = " << quoted(require_name(ws.name_of(m.on_apex), "middle part of " + e.name)) << ";\n"
            << "  right = " << quoted(require_name(ws.name_of(m.on_right), "right part of " + e.name)) << ";\n}\n";
        blocks.push_back(out.str());
    }
    std::string text;
    for (std::size_t i = 0; i < blocks.size(); ++i) text += (i ? "\n" : "") + blocks[i];
    return text;
}

}  // namespace dgcat

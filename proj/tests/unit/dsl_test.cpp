#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "helpers.hpp"

#include "dgcat/dsl.hpp"
#include "dgcat/json_export.hpp"
#include "dgcat/sphere.hpp"

using namespace dgcat;
using dgcat::test::loop_category;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

DgError parse_error(std::string_view text)
{
    try {
        parse(text);
    } catch (const DgError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return DgError(ErrorCode::SyntaxError, "");
}

Workspace single_category(const std::string& name, const CategoryPtr& c)
{
    Workspace ws;
    ws.categories.add(name, c);
    return ws;
}

}  // namespace

TEST_SUITE("dsl") {
    TEST_CASE("degree -1 loop") {
        Workspace ws = parse("category C2 { object L; gen z : L -> L deg -1 d 0; }");
        CHECK(*ws.category("C2") == *loop_category(2));
    }

    TEST_CASE("empty input") {
        Workspace ws = parse("");
        CHECK(ws.categories.empty());
        CHECK(ws.functors.empty());
        CHECK(ws.spans.empty());
        CHECK(parse("  # only a comment\n").categories.empty());
        CHECK(serialize(ws).empty());
    }

    TEST_CASE("hand-written inverse generator") {
        Workspace ws = parse(R"(
category C {
  object A;
  gen g : A -> A deg 0 d 0;
  gen gp : A -> A deg 0 d 0;
  gen h : A -> A deg -1 d id(A) - gp*g;
}
)");
        const DgCategory& c = *ws.category("C");
        CHECK(c.generator("h").differential == c.id("A") - compose(c.gen("gp"), c.gen("g")));
    }

    TEST_CASE("expressions") {
        CategoryPtr c = make_presentation({"A", "B"}, {{"f", "A", "B", 0, {}}, {"g", "B", "B", 0, {}}});
        CHECK(parse_term(*c, "g*f") == compose(c->gen("g"), c->gen("f")));
        CHECK(parse_term(*c, "1/2*g*f - 3/4*f") == Scalar::parse("1/2") * compose(c->gen("g"), c->gen("f")) - Scalar::parse("3/4") * c->gen("f"));
        CHECK(parse_term(*c, "-(g - id(B))*f") == -compose(c->gen("g"), c->gen("f")) + c->gen("f"));
        CHECK(parse_term(*c, "0", TermType{"A", "B", 0}).is_zero());
        CHECK_ERROR(parse_term(*c, "0"), ErrorCode::SyntaxError);
        CHECK_ERROR(parse_term(*c, "2"), ErrorCode::SyntaxError);
        CHECK_ERROR(parse_term(*c, "f*g"), ErrorCode::EndpointMismatch);
        CHECK_ERROR(parse_term(*c, "k"), ErrorCode::UnknownGenerator);
        CHECK_ERROR(parse_term(*c, "f +"), ErrorCode::SyntaxError);
    }

    TEST_CASE("localize block and quoted names") {
        Workspace ws = parse(R"(
category C1 {
  object L;
  gen z : L -> L deg 0 d 0;
  localize { z };
}
category Q { object `A^1`; gen `t.f` : `A^1` -> `A^1` deg 2 d 0; }
)");
        const DgCategory& c = *ws.category("C1");
        CHECK(c.generators().size() == 5);
        CHECK(c.has_generator("ib.z"));
        CHECK(ws.category("Q")->has_generator("t.f"));
    }

    TEST_CASE("functors and spans") {
        Workspace ws = parse(R"(
category X { object L; gen x : L -> L deg -1 d 0; }
category K { object K; }
functor F : X -> K { object L => K; gen x => 0; }
functor G : X -> X { object L => L; gen x => -x; }
span S { left = F; right = F; }
)");
        CHECK(ws.functor("F").image("x").is_zero());
        CHECK(ws.functor("G").image("x") == -ws.category("X")->gen("x"));
        CHECK(same_category(ws.span("S").apex(), ws.category("X")));
        CHECK_ERROR(ws.functor("H"), ErrorCode::ResolutionError);
    }

    TEST_CASE("errors carry positions") {
        DgError syntax = parse_error("category C {\n  object A\n}\n");
        CHECK(syntax.code() == ErrorCode::SyntaxError);
        REQUIRE(syntax.position().has_value());
        CHECK(syntax.position()->line == 3);
        CHECK(syntax.position()->column == 1);

        DgError dangling = parse_error("category C {\n  object A;\n  gen f : A -> B deg 0 d 0;\n}\n");
        CHECK(dangling.code() == ErrorCode::DanglingEndpoint);
        REQUIRE(dangling.position().has_value());
        CHECK(dangling.position()->line == 3);

        DgError missing = parse_error("functor F : X -> Y { }");
        CHECK(missing.code() == ErrorCode::ResolutionError);
        CHECK(missing.subject() == "X");

        DgError twice = parse_error("category C { object A; }\ncategory C { object B; }");
        CHECK(twice.code() == ErrorCode::DuplicateName);
        REQUIRE(twice.position().has_value());
        CHECK(twice.position()->line == 2);

        DgError d2 = parse_error("category C { object A; gen c : A -> A deg 0 d 0; gen b : A -> A deg -1 d c; gen a : A -> A deg -2 d b; }");
        CHECK(d2.code() == ErrorCode::DSquaredNonzero);
        CHECK(d2.subject() == "a");

        CHECK(parse_error("category C { object A; gen f : A -> A deg 1 d 0; }\nfunctor F : C -> C { object A => A; gen f => 2*f*f; }")
                  .code() == ErrorCode::DegreeMismatch);
        CHECK(parse_error("category C { object A; gen f : A -> A deg x d 0; }").code() == ErrorCode::SyntaxError);
        CHECK(parse_error("category C { object A; gen f : A -> A deg 0 d 0; } @").code() == ErrorCode::SyntaxError);
        CHECK(parse_error("category C over ZZ { object A; gen f : A -> A deg 0 d 0; gen g : A -> A deg -1 d 1/2*f; }").code() ==
              ErrorCode::NotInRing);
    }

    TEST_CASE("zero differential prints d 0") {
        std::string text = serialize(single_category("C2", loop_category(2)));
        CHECK(text == "category C2 {\n  object L;\n  gen z : L -> L deg -1 d 0;\n}\n");
    }

    TEST_CASE("round trips") {
        CategoryPtr c1 = loop_category(1);
        CategoryPtr inverted = localize(c1, {c1->gen("z")}).category;
        CategoryPtr cyl = cyl_object(loop_category(2)).cylinder;
        CategoryPtr over_f5 = make_presentation({"A"}, {{"f", "A", "A", 0, {}}}, CoefficientRing::modular(5));
        for (const CategoryPtr& c : {inverted, cyl, over_f5, cyl_object_loc(inverted).cylinder}) {
            std::string text = serialize(single_category("C", c));
            Workspace back = parse(text);
            CHECK(*back.category("C") == *c);
            CHECK(serialize(back) == text);
        }
    }

    TEST_CASE("round trips on the corpus") {
        testing::Rng rng(81);
        for (int i = 0; i < 25; ++i) {
            Span x = testing::random_span(rng);
            Workspace ws;
            ws.categories.add("A", x.left());
            if (!same_category(x.right(), x.left())) ws.categories.add("B", x.right());
            ws.categories.add("C", x.apex());
            ws.functors.add("alpha", x.alpha);
            ws.functors.add("beta", x.beta);
            ws.spans.add("X", x);
            std::string text = serialize(ws);
            Workspace back = parse(text);
            CHECK(serialize(back) == text);
            CHECK(functor_equal(back.functor("alpha"), x.alpha));
            CHECK(*back.category("C") == *x.apex());
        }
    }

    TEST_CASE("workspace lookup and merge") {
        Workspace a = parse("category P { object K; }");
        Workspace b = parse("category Q { object K; }");
        a.merge(b);
        CHECK(a.categories.size() == 2);
        CHECK(a.name_of(b.category("Q")) == "Q");
        CHECK(a.name_of(make_presentation({"K"}, {})) == "P");
        CHECK_ERROR(a.merge(b), ErrorCode::DuplicateName);
    }

    TEST_CASE("sphere fixtures are valid and canonical") {
        for (int n = 1; n <= 3; ++n) {
            std::string path = std::string(DGCAT_FIXTURE_DIR) + "/sphere_n" + std::to_string(n) + ".dg";
            std::string text = read_file(path);
            REQUIRE_FALSE(text.empty());
            Workspace ws = parse(text);
            CHECK(serialize(ws) == text);
            SphereFixture fx = build_fixture(n);
            CHECK(*ws.category("hocolim") == *fx.hocolim.category);
            CHECK(*ws.category("model") == *fx.model);
        }
    }
}

TEST_SUITE("json") {
    TEST_CASE("term layout") {
        CategoryPtr c = make_presentation({"A", "B"}, {{"f", "A", "B", 0, {}}, {"g", "B", "B", 0, {}}});
        auto j = term_to_json(Scalar::parse("1/2") * compose(c->gen("g"), c->gen("f")));
        CHECK(j["source"] == "A");
        CHECK(j["target"] == "B");
        CHECK(j["degree"] == 0);
        REQUIRE(j["terms"].size() == 1);
        CHECK(j["terms"][0]["coefficient"] == "1/2");
        CHECK(j["terms"][0]["path"] == nlohmann::ordered_json::array({"g", "f"}));
    }

    TEST_CASE("workspace layout") {
        Workspace ws = parse(R"(
category X { object L; gen x : L -> L deg -1 d 0; }
category K { object K; }
functor F : X -> K { object L => K; gen x => 0; }
span S { left = F; right = F; }
)");
        auto j = workspace_to_json(ws);
        CHECK(j["categories"].size() == 2);
        CHECK(j["categories"][0]["name"] == "X");
        CHECK(j["categories"][0]["generators"][0]["degree"] == -1);
        CHECK(j["functors"][0]["source"] == "X");
        CHECK(j["functors"][0]["objects"][0]["image"] == "K");
        CHECK(j["spans"][0]["left"] == "F");
        CHECK(j["span_morphisms"].empty());
    }
}

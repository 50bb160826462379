#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"

#include "dgcat/cli.hpp"
#include "dgcat/dsl.hpp"

using namespace dgcat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dgcat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = std::filesystem::temp_directory_path() / ("dgcat_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::string p = (path_ / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
    static inline int counter_ = 0;
};

std::string fixture(int n)
{
    return std::string(DGCAT_FIXTURE_DIR) + "/sphere_n" + std::to_string(n) + ".dg";
}

const char* c2_text = "category C2 { object L; gen z : L -> L deg -1 d 0; }\n";

const char* extension_text = R"(
category K { object L; }
category C1 { object L; gen z : L -> L deg 0 d 0; }
category P { object K; }
functor incl : K -> C1 { object L => L; }
functor to_point : K -> P { object L => K; }
functor crush : C1 -> P { object L => K; gen z => id(K); }
)";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("validate") {
        TempDir dir;
        Run r = run({"validate", dir.write("c2.dg", c2_text)});
        CHECK(r.code == 0);
        CHECK(r.out.find("C2") != std::string::npos);
        CHECK(r.err.empty());
    }

    TEST_CASE("hocolim of the circle gluing span") {
        Run r = run({"hocolim", fixture(1), "--span", "gluing"});
        REQUIRE(r.code == 0);
        Workspace ws = parse(r.out);
        const CategoryPtr& h = ws.category("gluing_hocolim");
        CHECK(h->objects().size() == 2);
        CHECK(h->generators().size() == 10);
    }

    TEST_CASE("reflection through compose and apply") {
        TempDir dir;
        for (int n = 2; n <= 3; ++n) {
            std::string out = dir.file("composite" + std::to_string(n) + ".dg");
            Run c = run({"--output", out, "compose", fixture(n), "--functors", "from_model,reflect_hocolim,to_model", "--name", "r"});
            REQUIRE(c.code == 0);
            Run a = run({"apply", out, "--functor", "r", "--term", "z"});
            CHECK(a.code == 0);
            CHECK(a.out == "-1*z\n");
        }
        Run direct = run({"compose", fixture(1), "--functors", "from_model,reflect_hocolim,to_model", "--term", "z"});
        CHECK(direct.code == 0);
        CHECK(direct.out == "1*`inv.z`\n");
    }

    TEST_CASE("constructions on the command line") {
        TempDir dir;
        std::string c2 = dir.write("c2.dg", c2_text);
        std::string ext = dir.write("ext.dg", extension_text);

        Run cyl = run({"cyl", c2, "--cat", "C2"});
        REQUIRE(cyl.code == 0);
        CHECK(*parse(cyl.out).category("C2_cyl") == *cyl_object(parse(c2_text).category("C2")).cylinder);
        CHECK(run({"cyl", c2, "--cat", "C2", "--algebra-mode"}).code == 0);
        CHECK(run({"interchange", c2, "--cat", "C2"}).code == 0);

        Run loc = run({"localize", ext, "--cat", "C1", "--at", "z"});
        REQUIRE(loc.code == 0);
        CHECK(parse(loc.out).category("C1_loc")->generators().size() == 5);

        Run po = run({"pushout", ext, "--ext", "incl", "--along", "to_point"});
        REQUIRE(po.code == 0);
        CHECK(parse(po.out).category("incl_to_point_pushout")->has_generator("z"));

        Run mc = run({"mapcyl", ext, "--functor", "crush"});
        REQUIRE(mc.code == 0);
        CHECK(parse(mc.out).functors.contains("crush_q"));

        Run bad = run({"localize", c2, "--cat", "C2", "--at", "z"});
        CHECK(bad.code == 1);
        auto report = nlohmann::json::parse(bad.err);
        CHECK(report["error"] == "NotDegreeZero");
    }

    TEST_CASE("json output") {
        TempDir dir;
        std::string c2 = dir.write("c2.dg", c2_text);
        Run r = run({"--format", "json", "cyl", c2, "--cat", "C2"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["categories"][1]["name"] == "C2_cyl");
        CHECK(run({"--format", "yaml", "validate", c2}).code == 2);
    }

    TEST_CASE("output is deterministic") {
        Run a = run({"hocolim", fixture(2), "--span", "gluing"});
        Run b = run({"hocolim", fixture(2), "--span", "gluing"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("several input files") {
        TempDir dir;
        std::string c2 = dir.write("c2.dg", c2_text);
        std::string other = dir.write("other.dg", "category K { object K; }\n");
        CHECK(run({"validate", c2, other}).code == 0);
        Run clash = run({"validate", c2, dir.write("again.dg", c2_text)});
        CHECK(clash.code == 1);
        CHECK(nlohmann::json::parse(clash.err)["error"] == "DuplicateName");
    }

    TEST_CASE("error reports") {
        TempDir dir;
        Run syntax = run({"validate", dir.write("bad.dg", "category C {\n  object A\n}\n")});
        CHECK(syntax.code == 1);
        auto j = nlohmann::json::parse(syntax.err);
        CHECK(j["error"] == "SyntaxError");
        CHECK(j["line"] == 3);
        CHECK(j["column"] == 1);
        CHECK(j["file"].get<std::string>().find("bad.dg") != std::string::npos);

        Run d2 = run({"validate", dir.write("d2.dg",
                                            "category C { object A; gen c : A -> A deg 0 d 0; gen b : A -> A deg -1 d c; "
                                            "gen a : A -> A deg -2 d b; }\n")});
        CHECK(d2.code == 1);
        auto k = nlohmann::json::parse(d2.err);
        CHECK(k["error"] == "DSquaredNonzero");
        CHECK(k["subject"] == "a");
        CHECK(k["residual"] == "1*c");

        std::string c2 = dir.write("c2.dg", c2_text);
        CHECK(run({"cyl", c2, "--cat", "Nope"}).code == 1);
        CHECK(run({"apply", c2, "--functor", "F", "--term", "z"}).code == 1);
    }

    TEST_CASE("usage errors") {
        CHECK(run({}).code == 2);
        CHECK(run({"validate"}).code == 2);
        CHECK(run({"validate", "/no/such/file.dg"}).code == 2);
        CHECK(run({"cyl", fixture(1)}).code == 2);
        CHECK(run({"hep", fixture(1), "--ext", "a", "--side", "3", "--g", "b", "--h", "c"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }
}

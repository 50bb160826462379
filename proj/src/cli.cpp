#include "dgcat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dgcat/constructions.hpp"
#include "dgcat/cylinder.hpp"
#include "dgcat/dsl.hpp"
#include "dgcat/error.hpp"
#include "dgcat/hocolim.hpp"
#include "dgcat/homotopy.hpp"
#include "dgcat/json_export.hpp"
#include "dgcat/sphere.hpp"

namespace dgcat {

namespace {

enum class Format { Dsl, Json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An engine error raised while reading one input file.
struct FileError {
    std::string file;
    DgError error;
};

Workspace load(const std::vector<std::string>& files)
{
    Workspace ws;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw UsageError("cannot read " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            ws.merge(parse(buf.str()));
        } catch (const DgError& e) {
            throw FileError{path, e};
        }
    }
    return ws;
}

// Collects result entities; referenced input categories are copied in under
// their original names so the output is self-contained.
class Output {
public:
    explicit Output(const Workspace* input = nullptr) : input_(input) {}

    void category(const std::string& name, const CategoryPtr& cat)
    {
        if (ws_.name_of(cat)) return;
        ws_.categories.add(name, cat);
    }

    void functor(const std::string& name, const DgFunctor& f)
    {
        bring(f.source());
        bring(f.target());
        ws_.functors.add(name, f);
    }

    void span(const std::string& name, const Span& x, const std::string& left, const std::string& right)
    {
        if (!ws_.name_of(x.alpha)) functor(left, x.alpha);
        if (!ws_.name_of(x.beta)) functor(right, x.beta);
        ws_.spans.add(name, x);
    }

    void span_morphism(const std::string& name, const SpanMorphism& m) { ws_.span_morphisms.add(name, m); }

    const Workspace& workspace() const { return ws_; }

private:
    void bring(const CategoryPtr& cat)
    {
        if (ws_.name_of(cat)) return;
        std::optional<std::string> name = input_ ? input_->name_of(cat) : std::nullopt;
        if (!name) throw DgError(ErrorCode::ResolutionError, "result refers to an unnamed category");
        ws_.categories.add(*name, cat);
    }

    const Workspace* input_;
    Workspace ws_;
};

std::string render(const Workspace& ws, Format format)
{
    if (format == Format::Json) return workspace_to_json(ws).dump(2) + "\n";
    return serialize(ws);
}

std::string render_term(const Term& t, Format format)
{
    if (format == Format::Json) return term_to_json(t).dump(2) + "\n";
    return serialize_term(t) + "\n";
}

std::string error_report(const DgError& e, const std::string& file)
{
    nlohmann::ordered_json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    if (!e.subject().empty()) j["subject"] = e.subject();
    if (!file.empty()) j["file"] = file;
    if (e.position()) {
        j["line"] = e.position()->line;
        j["column"] = e.position()->column;
    }
    if (e.residual()) j["residual"] = serialize_term(*e.residual());
    return j.dump() + "\n";
}

struct Args {
    std::vector<std::string> files;
    std::string format;
    std::string output;
    int jobs = 1;
    std::string cat, span, morphism, functor, ext, along, g, h, term, functors, name, var = "z";
    std::vector<std::string> at;
    bool algebra_mode = false, localized = false, plain = false;
    int side = 1;
    int n = 1;
};

std::string run_command(const std::string& command, const Args& a, Format format)
{
    if (command == "sphere") {
        SphereFixture fx = build_fixture(a.n, a.var);
        Reflection r = derive_reflection(fx);
        Output o;
        o.category("K1", fx.left);
        o.category("K2", fx.right);
        o.category("middle", fx.middle);
        o.category("hocolim", fx.hocolim.category);
        o.category("model", fx.model);
        o.span("gluing", fx.span, "collapse1", "collapse2");
        o.functor("id_K1", r.on_span.on_left);
        o.functor("id_K2", r.on_span.on_right);
        o.functor("reflect_middle", r.on_span.on_apex);
        o.span_morphism("reflection", r.on_span);
        o.functor("to_model", fx.to_model);
        o.functor("from_model", fx.from_model);
        o.functor("reflect_hocolim", r.on_hocolim);
        o.functor("reflect", r.on_model);
        return render(o.workspace(), format);
    }

    Workspace ws = load(a.files);
    Output o(&ws);
    if (command == "validate") {
        if (format == Format::Json) return workspace_to_json(ws).dump(2) + "\n";
        std::ostringstream out;
        for (const auto& e : ws.categories.entries())
            out << "category " << e.name << ": " << e.value->objects().size() << " objects, " << e.value->generators().size()
                << " generators\n";
        for (const auto& e : ws.functors.entries()) out << "functor " << e.name << ": chain map\n";
        for (const auto& e : ws.spans.entries()) out << "span " << e.name << ": ok\n";
        for (const auto& e : ws.span_morphisms.entries()) out << "spanmap " << e.name << ": squares commute\n";
        return out.str();
    }
    if (command == "cyl") {
        const CategoryPtr& c = ws.category(a.cat);
        CylinderData cyl = a.localized ? cyl_object_loc(c)
                                       : cyl_object(c, a.algebra_mode ? CylinderMode::Algebra : CylinderMode::Category);
        o.category(a.cat, c);
        o.category(a.cat + "_cyl", cyl.cylinder);
        o.functor(a.cat + "_i1", cyl.i1);
        o.functor(a.cat + "_i2", cyl.i2);
        o.functor(a.cat + "_p", cyl.p);
        return render(o.workspace(), format);
    }
    if (command == "hocolim") {
        const Span& x = ws.span(a.span);
        bool loc = !a.plain && !x.apex()->localized().empty();
        if (a.morphism.empty()) {
            o.category(a.span + "_hocolim", loc ? hocolim_object_loc(x) : hocolim_object(x));
            return render(o.workspace(), format);
        }
        const SpanMorphism& m = ws.span_morphism(a.morphism);
        if (!functor_equal(m.source.alpha, x.alpha) || !functor_equal(m.source.beta, x.beta))
            throw DgError(ErrorCode::SourceTargetMismatch, "span map " + a.morphism + " does not start at " + a.span);
        DgFunctor f = loc ? hocolim_morphism_loc(m) : hocolim_morphism(m);
        std::string target = ws.name_of(m.target).value_or(a.morphism + "_target");
        o.category(a.span + "_hocolim", f.source());
        o.category(target + "_hocolim", f.target());
        o.functor(a.morphism + "_hocolim", f);
        return render(o.workspace(), format);
    }
    if (command == "localize") {
        const CategoryPtr& c = ws.category(a.cat);
        std::vector<Term> at;
        for (const auto& text : a.at) at.push_back(parse_term(*c, text));
        ExtensionResult r = localize(c, at);
        o.category(a.cat, c);
        o.category(a.cat + "_loc", r.category);
        o.functor(a.cat + "_loc_incl", r.inclusion.inclusion());
        return render(o.workspace(), format);
    }
    if (command == "pushout") {
        PushoutResult p = pushout(SemifreeExtension(ws.functor(a.ext)), ws.functor(a.along));
        std::string base = a.ext + "_" + a.along;
        o.category(base + "_pushout", p.category);
        o.functor(base + "_fbar", p.f_bar.inclusion());
        o.functor(base + "_gbar", p.g_bar);
        return render(o.workspace(), format);
    }
    if (command == "mapcyl") {
        MappingCylinder m = mapping_cylinder(ws.functor(a.functor));
        o.category(a.functor + "_mapcyl", m.category);
        o.functor(a.functor + "_j", m.j.inclusion());
        o.functor(a.functor + "_q", m.q);
        return render(o.workspace(), format);
    }
    if (command == "hep") {
        SemifreeExtension f(ws.functor(a.ext));
        DgFunctor e = hep_extend(f, a.side, ws.functor(a.g), ws.functor(a.h));
        std::string base = ws.name_of(f.extension()).value_or(a.ext + "_target");
        o.category(base + "_cyl", e.source());
        o.functor(a.h + "_extended", e);
        return render(o.workspace(), format);
    }
    if (command == "interchange") {
        const CategoryPtr& c = ws.category(a.cat);
        Interchange t = interchange(c);
        o.category(a.cat + "_cyl_cyl", t.outer.cylinder);
        o.functor(a.cat + "_interchange", t.t);
        return render(o.workspace(), format);
    }
    if (command == "apply") {
        const DgFunctor& f = ws.functor(a.functor);
        return render_term(f(parse_term(*f.source(), a.term)), format);
    }
    if (command == "compose") {
        std::vector<std::string> names;
        std::stringstream list(a.functors);
        for (std::string item; std::getline(list, item, ',');)
            if (!item.empty()) names.push_back(item);
        if (names.empty()) throw UsageError("--functors needs at least one functor name");
        DgFunctor acc = ws.functor(names.front());
        for (std::size_t i = 1; i < names.size(); ++i) acc = compose_functors(ws.functor(names[i]), acc);
        validate_functor(acc);
        if (!a.term.empty()) return render_term(acc(parse_term(*acc.source(), a.term)), format);
        o.functor(a.name, acc);
        return render(o.workspace(), format);
    }
    throw UsageError("unknown command " + command);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"dgcat: semifree dg categories, cylinders and homotopy colimits"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    const char* env = std::getenv("DGCAT_FORMAT");
    a.format = env && *env ? env : "dsl";
    app.add_option("--format", a.format, "Output format (dsl or json); default from DGCAT_FORMAT");
    app.add_option("--output", a.output, "Write the result to PATH instead of stdout");
    app.add_option("--jobs", a.jobs, "Worker count (results do not depend on it)")->check(CLI::PositiveNumber);

    auto files = [&](CLI::App* sub) { sub->add_option("FILE", a.files, "Input .dg files")->required()->check(CLI::ExistingFile); };

    auto* validate = app.add_subcommand("validate", "Parse and validate input files");
    files(validate);

    auto* cyl = app.add_subcommand("cyl", "Cylinder object of a category");
    files(cyl);
    cyl->add_option("--cat", a.cat, "Category name")->required();
    cyl->add_flag("--algebra-mode", a.algebra_mode, "One-object cylinder with t_A the identity");
    cyl->add_flag("--localized", a.localized, "Treat recorded inverses as a localization");

    auto* hocolim = app.add_subcommand("hocolim", "Homotopy colimit of a span or of a span map");
    files(hocolim);
    hocolim->add_option("--span", a.span, "Span name")->required();
    hocolim->add_option("--morphism", a.morphism, "Span map out of the span");
    hocolim->add_flag("--plain", a.plain, "Ignore localization data on the middle category");

    auto* localize_cmd = app.add_subcommand("localize", "Invert closed degree 0 morphisms");
    files(localize_cmd);
    localize_cmd->add_option("--cat", a.cat, "Category name")->required();
    localize_cmd->add_option("--at", a.at, "Morphisms to invert")->required();

    auto* pushout_cmd = app.add_subcommand("pushout", "Pushout of a semifree extension along a functor");
    files(pushout_cmd);
    pushout_cmd->add_option("--ext", a.ext, "Semifree extension functor")->required();
    pushout_cmd->add_option("--along", a.along, "Functor out of the same source")->required();

    auto* mapcyl = app.add_subcommand("mapcyl", "Mapping cylinder factorization F = q∘j");
    files(mapcyl);
    mapcyl->add_option("--functor", a.functor, "Functor name")->required();

    auto* hep = app.add_subcommand("hep", "Extend a homotopy along a semifree extension");
    hep->set_help_flag("--help", "Print this help message and exit");
    files(hep);
    hep->add_option("--ext", a.ext, "Semifree extension F: A -> B")->required();
    hep->add_option("--side", a.side, "End of the cylinder G lives on")->required()->check(CLI::IsMember({1, 2}));
    hep->add_option("--g", a.g, "Functor G: B -> C")->required();
    hep->add_option("--h", a.h, "Homotopy H: Cyl(A) -> C")->required();

    auto* inter = app.add_subcommand("interchange", "Interchange map of Cyl(Cyl(A))");
    files(inter);
    inter->add_option("--cat", a.cat, "Category name")->required();

    auto* apply = app.add_subcommand("apply", "Apply a functor to a term");
    files(apply);
    apply->add_option("--functor", a.functor, "Functor name")->required();
    apply->add_option("--term", a.term, "Term in the source category")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Compose functors, applied left to right");
    files(compose_cmd);
    compose_cmd->add_option("--functors", a.functors, "Comma separated functor names")->required();
    compose_cmd->add_option("--name", a.name, "Name of the composite")->default_val("composite");
    compose_cmd->add_option("--term", a.term, "Print the image of this term instead");

    auto* sphere = app.add_subcommand("sphere", "Gluing fixture and reflection for the cotangent bundle of a sphere");
    sphere->add_option("--n", a.n, "Sphere dimension")->required()->check(CLI::Range(1, 64));
    sphere->add_option("--var", a.var, "Name of the model generator")->default_val("z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Format format;
    if (a.format == "dsl") {
        format = Format::Dsl;
    } else if (a.format == "json") {
        format = Format::Json;
    } else {
        err << "unknown format " << a.format << " (expected dsl or json)\n";
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    std::string text;
    try {
        text = run_command(command, a, format);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const FileError& e) {
        err << error_report(e.error, e.file);
        return 1;
    } catch (const DgError& e) {
        err << error_report(e, "");
        return 1;
    } catch (const std::exception& e) {
        err << error_report(DgError(ErrorCode::ResolutionError, e.what()), "");
        return 1;
    }

    if (a.output.empty()) {
        out << text;
    } else {
        std::ofstream file(a.output, std::ios::binary);
        if (!file) {
            err << "cannot write " << a.output << "\n";
            return 2;
        }
        file << text;
    }
    return 0;
}

}  // namespace dgcat

// Command-line front end for the toric library.
//
// Exit codes: 0 success or valid, 2 domain error or invalid input object, 1 usage or parse error.

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "toric/io.hpp"

using namespace toric;
using io::Json;

namespace {

struct Options {
    std::string output;
    std::string format = "json";
    bool big_strings = false;
    std::size_t max_steps = 10000;
    io::WriteOptions write() const { return {big_strings}; }
};

struct Outcome {
    Json body;
    int code = 0;
};

Json optional_int(const std::optional<Int>& x, const io::WriteOptions& w) {
    return x ? io::to_json(*x, w) : Json("infinite");
}

Json bools(const std::vector<bool>& v) {
    Json a = Json::array();
    for (bool b : v) a.push_back(b);
    return a;
}

Json monoid_list(const std::vector<AffineMonoid>& ms, const io::WriteOptions& w) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(io::to_json(m.hilbert_basis(), w));
    return a;
}

Outcome cmd_dual(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    GeneralCone c = io::cone_from_document(doc);
    return {io::envelope("cone", doc.rank, io::cone_payload(dual(c), o.write()), {{"operation", "dual"}})};
}

Outcome cmd_hilbert(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    GeneralCone c = io::cone_from_document(doc);
    AffineMonoid s = AffineMonoid::saturated(c, Matrix::identity(doc.rank).row_vectors());
    return {io::envelope("monoid", doc.rank, Json{{"generators", io::to_json(s.hilbert_basis(), o.write())}},
                         {{"operation", "hilbert"}})};
}

Outcome cmd_saturate(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    AffineMonoid s = io::monoid_from_document(doc);
    AffineMonoid sat = saturate(s);
    return {io::envelope("monoid", doc.rank, Json{{"generators", io::to_json(sat.hilbert_basis(), o.write())}},
                         {{"operation", "saturate"}, {"input_saturated", s.is_saturated() ? "true" : "false"}})};
}

Outcome cmd_validate_fan(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    io::expect_kind(doc, "fan");
    if (!doc.payload.contains("cones") || !doc.payload.at("cones").is_array())
        throw io::ParseError("fan payload: \"cones\" must be an array");
    const Json& cones = doc.payload.at("cones");
    std::vector<Cone> cs;
    for (const auto& c : cones) cs.push_back(Cone::from_rays(io::vecs_from_json(c, doc.rank), doc.rank));
    if (auto bad = fan_violation(cs))
        return {Json{{"valid", false}, {"violation", Json::array({bad->first, bad->second})}}, 2};
    Fan f = Fan::from_cones(cs, doc.rank);
    return {Json{{"valid", true},
                 {"cone_count", f.cones().size()},
                 {"rays", io::to_json(f.rays(), o.write())},
                 {"fan", io::fan_payload(f, o.write())},
                 {"simplicial", f.is_simplicial()},
                 {"smooth", f.is_smooth()}}};
}

Outcome cmd_validate_collection(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    auto report = validate_collection(io::collection_from_document(doc));
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"kind", std::string(violation_name(v.kind))},
                                  {"first", v.first},
                                  {"second", v.second},
                                  {"element", io::to_json(v.element, o.write())},
                                  {"message", v.message}});
    Json body{{"valid", report.valid}, {"violations", std::move(violations)}};
    if (report.collection) {
        Json rel = Json::array();
        for (const auto& [key, u] : report.collection->face_relation())
            rel.push_back(Json{{"from", key.first}, {"to", key.second}, {"witness", io::to_json(u, o.write())}});
        body["face_relation"] = std::move(rel);
        body["monoids"] = monoid_list(report.collection->monoids(), o.write());
    }
    return {std::move(body), report.valid ? 0 : 2};
}

Outcome cmd_classgroup(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    Fan f = io::fan_from_document(doc);
    ClassGroup g = ClassGroup::of(f);
    auto report = simplicial_smooth_report(f);
    Json orders = Json::array();
    for (std::size_t i = 0; i < f.rays().size(); ++i)
        orders.push_back(Json{{"ray", io::to_json(f.rays()[i], o.write())},
                              {"order", optional_int(divisor_class_order(f, TorusDivisor::ray(f, i)), o.write())}});
    Json torsion = Json::array();
    for (const auto& t : g.torsion()) torsion.push_back(io::to_json(t, o.write()));
    return {Json{{"rank", g.rank()},
                 {"torsion", std::move(torsion)},
                 {"ray_orders", std::move(orders)},
                 {"simplicial", report.simplicial},
                 {"smooth", report.smooth}}};
}

Outcome cmd_cartier(const std::vector<std::string>& files, const Options& o) {
    auto fdoc = io::read_document(files[0]);
    auto ddoc = io::read_document(files[1]);
    Fan f = io::fan_from_document(fdoc);
    auto d = TorusDivisor::on(f, io::divisor_from_document(ddoc));
    auto res = is_cartier(f, d);
    Json wit = Json::array();
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i)
        wit.push_back(Json{{"cone", io::to_json(f.maximal_cones()[i].rays(), o.write())},
                           {"u", res.witnesses[i] ? io::to_json(*res.witnesses[i], o.write()) : Json(nullptr)}});
    return {Json{{"cartier", res.cartier}, {"witnesses", std::move(wit)}}};
}

Outcome cmd_polyhedron_monoids(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    Polyhedron p = io::polyhedron_from_document(doc);
    MonoidCollection c = monoid_collection_of_polyhedron(p);
    Json faces = Json::array();
    for (const auto& f : p.faces()) {
        Json tight = Json::array();
        for (auto t : f.tight) tight.push_back(t);
        faces.push_back(Json{{"dim", f.dim}, {"tight", std::move(tight)}, {"monoid", io::to_json(face_monoid(p, f).hilbert_basis(), o.write())}});
    }
    return {io::envelope("monoid", doc.rank,
                         Json{{"collection", monoid_list(c.monoids(), o.write())},
                              {"faces", std::move(faces)},
                              {"polyhedron", io::polyhedron_payload(p, o.write())}},
                         {{"operation", "polyhedron-monoids"}})};
}

Outcome cmd_blowup(const std::vector<std::string>& files, const Options& o) {
    auto mdoc = io::read_document(files[0]);
    auto idoc = io::read_document(files[1]);
    AffineMonoid s = io::monoid_from_document(mdoc);
    MonoidIdeal a(s, io::ideal_generators_from_document(idoc));
    BlowupResult r = blowup_affine(s, a);
    const auto w = o.write();
    Json g2f = Json::array();
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const auto& f = r.newton.faces()[r.generator_to_face[i]];
        Json verts = Json::array();
        for (auto v : f.vertices) {
            Json row = Json::array();
            for (const auto& q : r.newton.vertices()[v]) row.push_back(io::to_json(q, w));
            verts.push_back(std::move(row));
        }
        g2f.push_back(Json{{"generator", io::to_json(a.generators()[i], w)},
                           {"face_dim", f.dim},
                           {"face_vertices", std::move(verts)},
                           {"chart_matches_face", bool(r.chart_matches_face[i])}});
    }
    return {Json{{"center", io::to_json(a.generators(), w)},
                 {"newton", io::polyhedron_payload(r.newton, w)},
                 {"fan_after", io::fan_payload(r.fan_after, w)},
                 {"generator_to_face", std::move(g2f)},
                 {"patches", monoid_list(r.patches.monoids(), w)}}};
}

Outcome cmd_normalize(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    auto r = normalization_blowup(io::monoid_from_document(doc));
    const auto w = o.write();
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"target", io::to_json(p.target, w)}, {"plus", io::to_json(p.plus, w)}, {"minus", io::to_json(p.minus, w)}});
    return {Json{{"pairs", std::move(pairs)},
                 {"product_ideal", io::to_json(r.product_ideal, w)},
                 {"saturation", io::to_json(r.saturation.hilbert_basis(), w)},
                 {"composite_is_saturation", r.composite_is_saturation},
                 {"sandwich", bools(r.sandwich)}}};
}

Outcome cmd_simplicialize(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    return {io::trace_json(simplicialize(io::fan_from_document(doc), o.max_steps), o.write())};
}

Outcome cmd_resolve(const std::vector<std::string>& files, const Options& o) {
    auto doc = io::read_document(files[0]);
    return {io::trace_json(resolve(io::fan_from_document(doc), o.max_steps), o.write())};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with cones, monoids, fans and toric blow-ups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--output", opt.output, "Write the result to this file instead of stdout");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--big-strings", opt.big_strings, "Emit every integer as a decimal string");
    app.add_option("--max-steps", opt.max_steps, "Step bound for simplicialize and resolve");

    using Handler = std::function<Outcome(const std::vector<std::string>&, const Options&)>;
    struct Command {
        const char* name;
        const char* help;
        std::vector<const char*> args;
        Handler run;
    };
    const std::vector<Command> commands{
        {"dual", "Dual cone", {"cone"}, cmd_dual},
        {"hilbert", "Hilbert basis of cone ∩ Z^d", {"cone"}, cmd_hilbert},
        {"saturate", "Saturation of a monoid", {"monoid"}, cmd_saturate},
        {"validate-fan", "Check that cones form a fan", {"fan"}, cmd_validate_fan},
        {"validate-collection", "Check the fan conditions on a monoid collection", {"monoids"}, cmd_validate_collection},
        {"classgroup", "Class group and ray divisor orders", {"fan"}, cmd_classgroup},
        {"cartier", "Cartier test with local witnesses", {"fan", "divisor"}, cmd_cartier},
        {"polyhedron-monoids", "Face monoids of a lattice polyhedron", {"polyhedron"}, cmd_polyhedron_monoids},
        {"blowup", "Blow-up of an integrally closed monoid ideal", {"monoid", "ideal"}, cmd_blowup},
        {"normalize", "Normalization as a blow-up", {"monoid"}, cmd_normalize},
        {"simplicialize", "Simplicialize a fan without new rays", {"fan"}, cmd_simplicialize},
        {"resolve", "Toric resolution by stellar subdivisions", {"fan"}, cmd_resolve},
    };
    std::vector<std::vector<std::string>> files(commands.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        auto* sub = app.add_subcommand(commands[i].name, commands[i].help);
        files[i].resize(commands[i].args.size());
        for (std::size_t k = 0; k < commands[i].args.size(); ++k)
            sub->add_option(commands[i].args[k], files[i][k], std::string(commands[i].args[k]) + " JSON file")->required();
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    Outcome out;
    try {
        for (std::size_t i = 0; i < commands.size(); ++i)
            if (subs[i]->parsed()) out = commands[i].run(files[i], opt);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = opt.format == "text" ? io::render_text(out.body) : io::dump(out.body);
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.output);
        if (!f) {
            std::cerr << "usage error: cannot write " << opt.output << "\n";
            return 1;
        }
        f << text;
    }
    return out.code;
}

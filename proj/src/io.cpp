#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {

namespace {

const Int kExactLimit = Int(1) << 53;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

Rat rat_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail("rational must be [numerator, denominator]");
        Int den = int_from_json(j[1]);
        if (den == 0) fail("rational with zero denominator");
        Rat q(int_from_json(j[0]), den);
        q.canonicalize();
        return q;
    }
    return Rat(int_from_json(j));
}

bool scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

void render(const Json& j, int indent, std::ostringstream& out);

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
        return s + "]";
    }
    return j.dump();
}

bool inline_value(const Json& j) {
    if (!j.is_array() && !j.is_object()) return true;
    if (j.is_object()) return j.empty();
    if (scalar_array(j)) return true;
    for (const auto& x : j)
        if (!scalar_array(x)) return false;
    return true;
}

void render(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (inline_value(it.value())) {
                out << pad << it.key() << ": " << (it.value().is_object() ? "{}" : scalar_text(it.value())) << "\n";
            } else {
                out << pad << it.key() << ":\n";
                render(it.value(), indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (inline_value(x)) {
                out << pad << "- " << scalar_text(x) << "\n";
            } else {
                out << pad << "-\n";
                render(x, indent + 2, out);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

Document parse_document(const std::string& text, const std::string& source) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        fail(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
    if (!j.is_object()) fail(source + ": document must be a JSON object");
    Document doc;
    const Json& kind = field(j, "kind", source);
    if (!kind.is_string()) fail(source + ": \"kind\" must be a string");
    doc.kind = kind.get<std::string>();
    static const std::vector<std::string> kinds{"cone", "fan", "monoid", "polyhedron", "ideal", "divisor"};
    if (std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end()) fail(source + ": unknown kind \"" + doc.kind + "\"");
    const Json& rank = field(j, "rank", source);
    if (!rank.is_number_unsigned() && !(rank.is_number_integer() && rank.get<long long>() >= 0))
        fail(source + ": \"rank\" must be a nonnegative integer");
    doc.rank = rank.get<std::size_t>();
    doc.payload = field(j, "payload", source);
    if (!doc.payload.is_object()) fail(source + ": \"payload\" must be an object");
    if (j.contains("meta")) {
        const Json& meta = j.at("meta");
        if (!meta.is_object()) fail(source + ": \"meta\" must be an object");
        for (auto it = meta.begin(); it != meta.end(); ++it) {
            if (!it.value().is_string()) fail(source + ": meta values must be strings");
            doc.meta[it.key()] = it.value().get<std::string>();
        }
    }
    return doc;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

void expect_kind(const Document& doc, const std::string& kind) {
    if (doc.kind != kind) fail("expected a " + kind + " document, got " + doc.kind);
}

Json to_json(const Int& x, const WriteOptions& opt) {
    if (!opt.big_strings && abs(x) < kExactLimit) return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const Rat& x, const WriteOptions& opt) {
    if (x.get_den() == 1) return to_json(x.get_num(), opt);
    return Json::array({to_json(Int(x.get_num()), opt), to_json(Int(x.get_den()), opt)});
}

Json to_json(const Vec& v, const WriteOptions& opt) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x, opt));
    return a;
}

Json to_json(const std::vector<Vec>& vs, const WriteOptions& opt) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v, opt));
    return a;
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
        return Int(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
            fail("\"" + s + "\" is not a decimal integer");
        return Int(s);
    }
    fail("expected an integer, got " + j.dump());
}

Vec vec_from_json(const Json& j, std::size_t rank) {
    if (!j.is_array()) fail("expected an integer vector, got " + j.dump());
    if (j.size() != rank) fail("vector " + j.dump() + " does not have length " + std::to_string(rank));
    Vec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

std::vector<Vec> vecs_from_json(const Json& j, std::size_t rank) {
    if (!j.is_array()) fail("expected an array of vectors, got " + j.dump());
    std::vector<Vec> out;
    for (const auto& x : j) out.push_back(vec_from_json(x, rank));
    return out;
}

GeneralCone cone_from_document(const Document& doc) {
    expect_kind(doc, "cone");
    auto rays = vecs_from_json(field(doc.payload, "rays", "cone payload"), doc.rank);
    std::vector<Vec> lin;
    if (doc.payload.contains("lineality")) lin = vecs_from_json(doc.payload.at("lineality"), doc.rank);
    return GeneralCone::from_generators(rays, lin, doc.rank);
}

Fan fan_from_document(const Document& doc) {
    expect_kind(doc, "fan");
    const Json& cones = field(doc.payload, "cones", "fan payload");
    if (!cones.is_array()) fail("fan payload: \"cones\" must be an array");
    std::vector<Cone> cs;
    for (const auto& c : cones) cs.push_back(Cone::from_rays(vecs_from_json(c, doc.rank), doc.rank));
    return Fan::from_cones(cs, doc.rank);
}

AffineMonoid monoid_from_document(const Document& doc) {
    expect_kind(doc, "monoid");
    return AffineMonoid::from_generators(vecs_from_json(field(doc.payload, "generators", "monoid payload"), doc.rank),
                                         doc.rank);
}

std::vector<AffineMonoid> collection_from_document(const Document& doc) {
    expect_kind(doc, "monoid");
    const Json& c = field(doc.payload, "collection", "monoid payload");
    if (!c.is_array() || c.empty()) fail("monoid payload: \"collection\" must be a nonempty array");
    std::vector<AffineMonoid> out;
    for (const auto& gens : c) out.push_back(AffineMonoid::from_generators(vecs_from_json(gens, doc.rank), doc.rank));
    return out;
}

Polyhedron polyhedron_from_document(const Document& doc) {
    expect_kind(doc, "polyhedron");
    const std::size_t d = doc.rank;
    if (doc.payload.contains("inequalities")) {
        const Json& rows = doc.payload.at("inequalities");
        if (!rows.is_array()) fail("polyhedron payload: \"inequalities\" must be an array");
        std::vector<Halfspace> hs;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != d + 1)
                fail("inequality " + row.dump() + " must have " + std::to_string(d + 1) + " entries");
            Vec a;
            for (std::size_t i = 0; i < d; ++i) a.push_back(int_from_json(row[i]));
            Rat b = rat_from_json(row[d]);
            if (is_zero(a)) {
                if (b > 0) throw Error(ErrorKind::EmptyPolyhedron, "inequality 0 >= " + b.get_str() + " is infeasible");
                continue;
            }
            Int g = gcd_of(a);
            Rat off = b / Rat(g);
            off.canonicalize();
            hs.push_back({primitive(a), off});
        }
        return Polyhedron::from_inequalities(hs, d);
    }
    const Json& vs = field(doc.payload, "vertices", "polyhedron payload");
    if (!vs.is_array()) fail("polyhedron payload: \"vertices\" must be an array");
    std::vector<RatVec> vertices;
    for (const auto& v : vs) {
        if (!v.is_array() || v.size() != d) fail("vertex " + v.dump() + " does not have length " + std::to_string(d));
        RatVec x;
        for (const auto& q : v) x.push_back(rat_from_json(q));
        vertices.push_back(std::move(x));
    }
    std::vector<Vec> rays;
    if (doc.payload.contains("rays")) rays = vecs_from_json(doc.payload.at("rays"), d);
    return Polyhedron::from_generators(vertices, rays, d);
}

std::vector<Vec> ideal_generators_from_document(const Document& doc) {
    expect_kind(doc, "ideal");
    return vecs_from_json(field(doc.payload, "generators", "ideal payload"), doc.rank);
}

Vec divisor_from_document(const Document& doc) {
    expect_kind(doc, "divisor");
    const Json& c = field(doc.payload, "coefficients", "divisor payload");
    if (!c.is_array()) fail("divisor payload: \"coefficients\" must be an array");
    return vec_from_json(c, c.size());
}

Json envelope(const std::string& kind, std::size_t rank, Json payload, const std::map<std::string, std::string>& meta) {
    Json m = Json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return Json{{"kind", kind}, {"rank", rank}, {"payload", std::move(payload)}, {"meta", std::move(m)}};
}

Json cone_payload(const GeneralCone& c, const WriteOptions& opt) {
    Json p{{"rays", to_json(c.rays, opt)}};
    if (!c.lineality.empty()) p["lineality"] = to_json(c.lineality, opt);
    return p;
}

Json fan_payload(const Fan& f, const WriteOptions& opt) {
    Json cones = Json::array();
    for (const auto& c : f.maximal_cones()) cones.push_back(to_json(c.rays(), opt));
    return Json{{"cones", std::move(cones)}};
}

Json polyhedron_payload(const Polyhedron& p, const WriteOptions& opt) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const auto& q : v) row.push_back(to_json(q, opt));
        verts.push_back(std::move(row));
    }
    Json ineqs = Json::array();
    for (const auto& h : p.inequalities()) {
        Json row = to_json(h.normal, opt);
        row.push_back(to_json(h.offset, opt));
        ineqs.push_back(std::move(row));
    }
    return Json{{"vertices", std::move(verts)}, {"rays", to_json(p.rays(), opt)}, {"inequalities", std::move(ineqs)}};
}

Json trace_json(const ResolutionTrace& t, const WriteOptions& w) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step{{"phase", s.phase == ResolutionStep::Phase::Simplicialize ? "simplicialize" : "resolve"},
                  {"ray", to_json(s.ray, w)},
                  {"fan_after", fan_payload(s.after, w)}};
        if (s.ray_index && s.exponent) {
            Vec coeff = zero_vec(s.before.rays().size());
            coeff[*s.ray_index] = *s.exponent;
            step["center"] = Json{{"divisor", to_json(coeff, w)}, {"exponent", to_json(*s.exponent, w)}};
        } else {
            step["center"] = Json{{"ray", to_json(s.ray, w)}};
        }
        steps.push_back(std::move(step));
    }
    return Json{{"steps", std::move(steps)},
                {"final", fan_payload(t.final_fan, w)},
                {"final_rays", to_json(t.final_fan.rays(), w)},
                {"smooth", t.final_fan.is_smooth()},
                {"simplicial", t.final_fan.is_simplicial()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Json& j) {
    std::ostringstream out;
    render(j, 0, out);
    return out.str();
}

}  // namespace toric::io

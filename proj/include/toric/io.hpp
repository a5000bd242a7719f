#pragma once

// JSON documents for the command-line tool: envelope parsing, typed payload readers and
// canonical writers.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/blowup.hpp"

namespace toric::io {

using Json = nlohmann::json;

/// Malformed input: bad JSON or a payload of the wrong shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Document {
    std::string kind;
    std::size_t rank = 0;
    Json payload;
    std::map<std::string, std::string> meta;
};

/// Throws ParseError with a line and column for syntax errors.
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document read_document(const std::string& path);
/// Throws ParseError unless the document has the given kind.
void expect_kind(const Document& doc, const std::string& kind);

struct WriteOptions {
    bool big_strings = false;
};

/// Integers beyond 2^53 (or all, with big_strings) become decimal strings.
Json to_json(const Int& x, const WriteOptions& opt);
Json to_json(const Rat& x, const WriteOptions& opt);
Json to_json(const Vec& v, const WriteOptions& opt);
Json to_json(const std::vector<Vec>& vs, const WriteOptions& opt);

Int int_from_json(const Json& j);
Vec vec_from_json(const Json& j, std::size_t rank);
std::vector<Vec> vecs_from_json(const Json& j, std::size_t rank);

GeneralCone cone_from_document(const Document& doc);
Fan fan_from_document(const Document& doc);
AffineMonoid monoid_from_document(const Document& doc);
std::vector<AffineMonoid> collection_from_document(const Document& doc);
Polyhedron polyhedron_from_document(const Document& doc);
std::vector<Vec> ideal_generators_from_document(const Document& doc);
Vec divisor_from_document(const Document& doc);

Json envelope(const std::string& kind, std::size_t rank, Json payload, const std::map<std::string, std::string>& meta = {});
Json cone_payload(const GeneralCone& c, const WriteOptions& opt);
/// Maximal cones as ray lists.
Json fan_payload(const Fan& f, const WriteOptions& opt);
Json polyhedron_payload(const Polyhedron& p, const WriteOptions& opt);

/// Steps with their centers and the final fan.
Json trace_json(const ResolutionTrace& t, const WriteOptions& w);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
/// Indented key/value rendering for --format text.
std::string render_text(const Json& j);

}  // namespace toric::io

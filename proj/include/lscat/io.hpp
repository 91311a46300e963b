#pragma once

#include "lscat/category.hpp"
#include "lscat/complex.hpp"
#include "lscat/genus.hpp"
#include "lscat/localize.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Text formats and JSON documents.
///
/// All text formats are line based: `#` starts a comment, blank lines are
/// skipped, tokens are separated by whitespace.  Errors are ParseError with a
/// "origin:line: " prefix.
///
///   complex      one maximal simplex per line (vertex names), then optionally a
///                line `geometry` followed by `name x_1 ... x_m` for every vertex
///   map          `source_vertex target_vertex`, once per source vertex
///   involution   `v Tv`, each vertex in exactly one pair
///   cover        one piece per line: the union of the open stars of the listed vertices
namespace lscat::io {

using Json = nlohmann::ordered_json;

struct ComplexDocument {
  ComplexPtr complex;
  std::optional<Geometry> geometry;
};

ComplexDocument parse_complex(std::string_view text, const std::string& origin = "<input>");
SimplicialMap parse_map(std::string_view text, ComplexPtr source, ComplexPtr target,
                        const std::string& origin = "<input>");
Z2Complex parse_involution(std::string_view text, ComplexPtr space, const std::string& origin = "<input>");
std::vector<UpSet> parse_cover(std::string_view text, ComplexPtr k, const std::string& origin = "<input>");

std::string read_text(const std::filesystem::path& path);
ComplexDocument read_complex(const std::filesystem::path& path);
SimplicialMap read_map(const std::filesystem::path& path, ComplexPtr source, ComplexPtr target);
Z2Complex read_involution(const std::filesystem::path& path, ComplexPtr space);
std::vector<UpSet> read_cover(const std::filesystem::path& path, ComplexPtr k);

/// Writers for the text formats (maximal simplices in simplex order).
std::string format_complex(const Complex& k, const Geometry* g = nullptr);
std::string format_map(const SimplicialMap& f);
std::string format_involution(const Z2Complex& z);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

Json to_json(const AxiomReport& r);
Json to_json(const LocalizationCertificate& c);
Json to_json(const GenusBounds& b);
/// Throws ParseError on missing or mistyped fields.
LocalizationCertificate certificate_from_json(const nlohmann::json& j);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace lscat::io

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradex/homological.hpp"
#include "gradex/monoid.hpp"
#include "gradex/principal.hpp"

/// JSON interchange. Degrees are coordinate arrays in invariant-factor form;
/// scalars are integers or "a/b" strings. Parsers throw ValidationError with
/// the offending JSON path.
namespace gradex::io {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational scalar_from_json(const json& j, const std::string& path);

json to_json(const FGAbelianGroup& G);
FGAbelianGroup group_from_json(const json& j, const std::string& path = "group");
json to_json(const GroupElement& g);
GroupElement element_from_json(const FGAbelianGroup& G, const json& j, const std::string& path);
json to_json(const Field& f);
Field field_from_json(const json& j, const std::string& path = "field");
json to_json(const GroupHom& h);
GroupHom hom_from_json(const json& j);

json to_json(const GradedAlgebra& R);
/// `field` replaces the field named in the document when given.
AlgebraPtr algebra_from_json(const json& j, const std::optional<Field>& field = {}, const std::string& path = "");
json to_json(const MonoidAlgebra& R);
MonoidAlgebra monoid_algebra_from_json(const json& j, const std::optional<Field>& field = {});
json to_json(const GradedModule& M);
GradedModule module_from_json(const json& j, const std::optional<Field>& field = {});
json to_json(const PrincipalPresentation& P);
PrincipalPresentation principal_from_json(const json& j, const std::optional<Field>& field = {});

json to_json(const Vector& v);
json to_json(const Subspace& s);
/// Also serves Betti rows, which share the type.
json to_json(const HilbertFunction& h);
json betti_json(const FreeResolution& r);
json to_json(const DimensionReport& d);
json to_json(Truth t);

enum class DocKind { group, hom, ring, monoid_algebra, module, principal, unknown };
DocKind kind_of(const json& j);

struct Violation {
  std::string path;
  std::string rule;
  bool operator==(const Violation&) const = default;
};
std::vector<Violation> schema_validate(const json& doc);

/// Reads a file, or parses the argument itself when it starts with '{'.
json load(const std::string& arg);

}  // namespace gradex::io

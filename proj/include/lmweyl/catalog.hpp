#pragma once

#include <lmweyl/subspace.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lmweyl {

struct CatalogEntry {
  std::string name;
  std::string document;
};

/// Built-in spec documents, in fixed order.
inline const std::vector<CatalogEntry>& catalog_documents() {
  static const std::vector<CatalogEntry> entries{
      {"trivial", R"({"name": "trivial", "kind": "monomial", "gaps": []})"},
      {"cusp", R"({"name": "cusp", "kind": "monomial", "gaps": [1]})"},
      {"gaps{1,2}", R"({"name": "gaps{1,2}", "kind": "monomial", "gaps": [1, 2]})"},
      {"gaps{1,3}", R"({"name": "gaps{1,3}", "kind": "monomial", "gaps": [1, 3]})"},
      {"gaps{1,2,3}", R"({"name": "gaps{1,2,3}", "kind": "monomial", "gaps": [1, 2, 3]})"},
      {"two-point", R"({"name": "two-point", "kind": "conditions", "points": [
          {"c": "0", "functionals": [[{"order": 1, "coeff": "1"}]]},
          {"c": "1", "functionals": [[{"order": 1, "coeff": "1"}]]}]})"},
      {"mixed", R"({"name": "mixed", "kind": "conditions", "points": [
          {"c": "0", "functionals": [[{"order": 2, "coeff": "1"}]]},
          {"c": "1", "functionals": [[{"order": 1, "coeff": "1"}]]}]})"},
  };
  return entries;
}

inline std::vector<SubspaceSpec> catalog() {
  std::vector<SubspaceSpec> out;
  for (const auto& e : catalog_documents()) out.push_back(parse_spec(e.document));
  return out;
}

inline std::optional<SubspaceSpec> catalog_spec(std::string_view name) {
  for (const auto& e : catalog_documents())
    if (e.name == name) return parse_spec(e.document);
  return std::nullopt;
}

}  // namespace lmweyl

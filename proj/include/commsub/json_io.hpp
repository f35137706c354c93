#pragma once

// JSON encodings of the library's data types. Readers throw ParseError on
// malformed documents and DomainError on values that break an invariant.

#include "commsub/bounds.hpp"
#include "commsub/construct.hpp"
#include "commsub/search.hpp"

#include <json.hpp>

#include <string>

namespace commsub {

using Json = nlohmann::ordered_json;

/// {"p","rows","cols","entries":[...]} with entries row-major
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"ambient_dim","basis": matrix}; the basis must already be in canonical form
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {"kind":"lie"|"assoc","p","dim","sc":[{"i","j","v":[...]}],"labels"}.
/// Lie entries (j, i) that are the negation of (i, j) are left implicit;
/// when reading, a missing (j, i) with i < j is filled in that way.
Json to_json(const StructureConstantAlgebra& a);
StructureConstantAlgebra algebra_from_json(const Json& j);

/// {"n","t","kind","p","mats":[matrix, ...],"seed"}
Json to_json(const FormTuple& f);
FormTuple forms_from_json(const Json& j);

/// Form tuple fields plus "k", "subspaces_checked" (decimal string),
/// "verdict":"certified" and "vacuous".
Json to_json(const GenericityCertificate& c);
GenericityCertificate certificate_from_json(const Json& j);

Json to_json(const ExtremalParams& p);
Json to_json(const SearchResult& r);
Json to_json(const AxiomReport& r);
Json to_json(const BoundReport& r);
Json to_json(const SimpleTypeEntry& e);
Json to_json(const InequalityCheck& c);
Json to_json(const SevenNVerdict& v);
Json to_json(const StructuralVerdict& v);
Json to_json(const MatrixCommutative& m, std::size_t r, MatrixConstruction construction);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

} // namespace commsub

#pragma once

#include <string>

#include <json.hpp>

#include "solv/classify.hpp"
#include "solv/liealg.hpp"
#include "solv/matrix.hpp"
#include "solv/models.hpp"
#include "solv/wang.hpp"

namespace solv {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p" or "p/q"; integers are also accepted.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json int_mat_to_json(const IntMat& m);
IntMat int_mat_from_json(const Json& j, int rows, int cols);

Json rat_mat_to_json(const RatMat& m);
RatMat rat_mat_from_json(const Json& j);

Json nfelem_to_json(const NFElem& x);

Json classification_to_json(const ClassificationReport& r);
Json lattice_class_to_json(const HyperellipticLatticeClass& c);
Json inoue_s0_to_json(const InoueS0Report& r);
Json spm_solution_to_json(const SpmSolution& s);
Json kodaira_law_to_json(const KodairaLawReport& r);

/// {"fiber": "Z3" | {"Lambda": n} | "Z2", "k": ..., monodromy data}.
WangExtension wang_from_json(const Json& j);

/// Structure constants [[i, j, ["c1", ...]], ...] with 1-based i < j.
LieAlgebra liealg_from_json(const Json& j);

/// Catalog identifier string: Torus4, Hyperelliptic4, PrimaryKodaira4,
/// SecondaryKodaira4, InoueS0, InoueSpm4, Example4(k,l), Example5.
CatalogId catalog_id_from_string(const std::string& s);
std::string catalog_id_to_string(const CatalogId& id);

}  // namespace solv

#pragma once

#include "dstrat/region_model.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dstrat {

// JSON form of a theory:
//   {"name", "mode": "projective"|"monic", "infinity_stratum", "origin_stratum",
//    "region": {"op": "and"|"or"|"not", "children": [...]} |
//              {"op": "leaf", "poly": {"i,j": "p/q", ...} or "x^2+y^2-1", "rel": "<"|"<="|"="|">"|">="},
//    "topology": {"s": [b0, b1, [per-component b1]?], "ss": ..., "un": ...},
//    "punctured_topology", "adjacency": [["s","ss"], ...], "unbounded": ["un", ...],
//    "boundary_tolerance", "window": [x0, x1, y0, y1]}
// ">" and ">=" leaves are stored negated as "<" and "<=".
StabilityTheory theory_from_json(const nlohmann::json& j);
nlohmann::json theory_to_json(const StabilityTheory& t);

nlohmann::json region_to_json(const RegionExpr& r);
RegionExpr region_from_json(const nlohmann::json& j);

// Resolves "name", "name:p1,p2,..." (built-ins; complex parameters such as
// "1+2i" expand to re, im) or a path to a JSON file. A file wins over a
// built-in of the same name, with a warning appended to `warnings`.
StabilityTheory load_theory(const std::string& spec, TheoryMode builtin_mode, std::vector<std::string>* warnings);

}  // namespace dstrat

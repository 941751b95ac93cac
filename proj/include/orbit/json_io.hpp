#pragma once

#include <json.hpp>

#include "orbit/coadjoint.hpp"

namespace orbit::io {

using Json = nlohmann::json;

// Matrices: {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

// {"n": n, "pp": ..., "pm": ..., "mp": ..., "mm": ...}
Json to_json(const BlockOperator& a);
BlockOperator block_from_json(const Json& j);

// {"n": n, "g": ..., "h": ...}
Json to_json(const SymplecticElement& a);
SymplecticElement symplectic_from_json(const Json& j);

// {"n": n, "a1": ..., "a2": ...}
Json to_json(const SpAlgebraElement& a);
SpAlgebraElement algebra_from_json(const Json& j);

// {"n": n, "z": ...}
Json to_json(const SiegelPoint& z);
SiegelPoint siegel_from_json(const Json& j);

// {"n": n, "v": ...}
Json to_json(const SiegelTangent& v);
SiegelTangent tangent_from_json(const Json& j);

// {"mu": blockop, "gamma": [re, im]}
Json to_json(const ExtendedPredual& m);
ExtendedPredual predual_from_json(const Json& j);

/// Parses text; wraps nlohmann errors into orbit::ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

} // namespace orbit::io

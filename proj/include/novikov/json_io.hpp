#pragma once

#include <json.hpp>
#include <string>

#include "novikov/catalog.hpp"
#include "novikov/existence.hpp"

namespace novikov {

using Json = nlohmann::ordered_json;

// Every rational is written as "p/q"; readers also accept "p" and JSON integers.
// Indices in entries are 1-based. Malformed input raises SchemaError naming the
// offending location.

Json to_json(const Rational& r);
Json to_json(const Matrix& m);
Json to_json(const LieAlgebra& lie);
Json to_json(const AlgebraProduct& product);
Json to_json(const Representation& rep);
Json to_json(const RMatrix& t);
Json to_json(const Cocycle& omega);
Json to_json(const LiftData& data);
Json to_json(const Payload& payload);
Json to_json(const PolySystem& system);
Json to_json(const LinearCertificate& cert);
Json to_json(const Certificate& cert);
Json to_json(const CheckReport& report);

Rational rational_from_json(const Json& j, const std::string& where = "$");
Matrix matrix_from_json(const Json& j, const std::string& where = "$");
LieAlgebra lie_from_json(const Json& j, const std::string& where = "$");
AlgebraProduct product_from_json(const Json& j, const std::string& where = "$");
Representation representation_from_json(const Json& j, const std::string& where = "$");
RMatrix rmatrix_from_json(const Json& j, const std::string& where = "$");
Cocycle cocycle_from_json(const Json& j, const std::string& where = "$");
LiftData liftdata_from_json(const Json& j, const std::string& where = "$");
PolySystem system_from_json(const Json& j, const std::string& where = "$");
LinearCertificate linear_certificate_from_json(const Json& j, const std::string& where = "$");
/// Dispatches on "kind".
Payload payload_from_json(const Json& j, const std::string& where = "$");

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace novikov

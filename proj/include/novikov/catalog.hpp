#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/errors.hpp"
#include "novikov/extensions.hpp"
#include "novikov/rmatrix.hpp"

namespace novikov {

using Params = std::map<std::string, Rational>;
using Payload = std::variant<LieAlgebra, AlgebraProduct, Representation, RMatrix, LiftData, Matrix>;

/// "lie", "product", "representation", "rmatrix", "liftdata" or "operator".
std::string payload_kind(const Payload& p);

struct CatalogEntry {
  std::string id;
  Params params;
  Payload payload;
  std::string description;

  std::string kind() const { return payload_kind(payload); }
};

struct CatalogInfo {
  std::string id;
  std::string kind;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<CatalogInfo>& catalog_list();

/// Throws UnknownId, MissingParam, or MalformedInput for unexpected or invalid parameters.
CatalogEntry catalog_get(const std::string& id, const Params& params = {});

/// Typed access; throws MalformedInput when the entry holds another kind of payload.
template <class T>
T catalog_payload(const std::string& id, const Params& params = {}) {
  CatalogEntry e = catalog_get(id, params);
  if (auto* p = std::get_if<T>(&e.payload)) return std::move(*p);
  throw MalformedInput("catalog entry '" + id + "' holds a " + e.kind());
}

/// Parses "ID" or "ID:k=v,k=v".
std::pair<std::string, Params> parse_catalog_ref(const std::string& ref);

}  // namespace novikov

#include <cassert>
#include <string>

#include "builtin_catalog_data.hpp"
#include "tvra/catalog.hpp"
#include "tvra/error.hpp"

namespace tvra {

const std::string& builtin_catalog_source() {
  static const std::string source = detail::kBuiltinCatalogSource;
  return source;
}

Catalog load_builtin_catalog() {
  ParseResult result = parse_catalog(builtin_catalog_source());
  if (!result.ok()) {
    // Guarded by a build-time test; reaching this means the embedded data
    // no longer parses.
    throw Error("BUILTIN_CATALOG_INVALID", "embedded catalog failed to parse");
  }
  return std::move(*result.catalog);
}

}  // namespace tvra

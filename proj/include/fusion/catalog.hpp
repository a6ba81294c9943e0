#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Builds a ring from a catalog identifier:
///   torus:<r>, sl2, gl2, sln:<n>, be:<d>, gef:<d>,
///   product:<id>,<id>, dsl:<path>.
/// Throws ConfigError for unknown or malformed identifiers and for .ring
/// files that fail validation.
std::shared_ptr<const Ring> make_ring(const std::string& id);

struct CatalogEntry {
    std::string pattern;
    std::string summary;
};

/// Identifier patterns understood by make_ring, for the CLI listing.
std::vector<CatalogEntry> catalog_entries();

}  // namespace fusion

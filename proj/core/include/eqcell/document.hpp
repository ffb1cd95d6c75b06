#pragma once

// JSON input documents: category, orbits, labeled space and optional map.
// The schema is described in docs/document-format.md.

#include "eqcell/dspace.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqcell {

struct DocumentOptions {
  std::string coefficients = "isotropy";
  int subdivide = 0;
};

struct Document {
  std::shared_ptr<const FinCategory> category;
  std::shared_ptr<const OrbitCategory> orbits;
  std::shared_ptr<const LabeledComplex> space;
  std::optional<EquivariantSelfMap> map;
  DocumentOptions options;
};

/// Parses and validates in stages: category, orbits, space, map, options.
/// Throws ParseError for malformed JSON or schema violations and
/// ValidationError (prefixed with the failing stage) for the first
/// mathematical violation. Names of the stages that passed are appended
/// to `passed` when it is non-null.
Document parse_document(std::string_view text, std::vector<std::string>* passed = nullptr);

/// Reads a file and calls parse_document. Unreadable files raise ParseError.
Document load_document(const std::filesystem::path& path, std::vector<std::string>* passed = nullptr);

/// Serializes with a fixed key order; parse_document(write_document(d))
/// reproduces d. The options section is omitted.
std::string write_document(const Document& doc);

/// The document obtained by barycentric subdivision of its space (and the
/// induced map, if present), applied `times` times.
Document subdivide_document(const Document& doc, int times);

}  // namespace eqcell

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entwine/criteria.hpp"

namespace entwine {

struct CatalogEntry {
  std::string name;
  std::string description;
  FieldSpec default_field;
};

// Entries in a fixed order: trivial, group-c2-q, group-c2-f2,
// dual-numbers-q, local-3dim-f2, matrix-coalg-2obj, path-a2, nonsep-F.
const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();

// Builds the named bundle from integer literals over the entry's default
// field or `field`. Throws UnknownName, or ValidationError if the literals
// do not form a valid bundle over the requested field.
StructureBundle catalog_build(const std::string& name, std::optional<FieldSpec> field = std::nullopt);

// The augmentation setup of the group algebra entries: A acting on itself
// and on K through a |-> sum of coefficients, with the augmentation map
// between them, on both the comodule and the contramodule side.
struct AugmentationSetup {
  Matrix character;  // 1 x dim A
  EntwinedComoduleData regular_comodule;
  EntwinedComoduleData trivial_comodule;
  MorphismData comodule_augmentation;  // regular -> trivial
  EntwinedContramoduleData regular_contramodule;
  EntwinedContramoduleData trivial_contramodule;
  MorphismData contramodule_augmentation;
};
std::optional<AugmentationSetup> catalog_augmentation(const std::string& name, const StructureBundle& b);

// standard_test_objects(b) plus any entry-specific companions.
TestObjects catalog_test_objects(const std::string& name, const StructureBundle& b);

}  // namespace entwine
